#pragma once

#include "boxorient/orientation.hpp"

namespace boxorient {

/// Orients C_m ⊠ C_n for even m, n >= 4: layers get the cyclic orientations
/// via rules A/B, diagonals go through the shared direct-edge dispatcher,
/// where only G1/G2 can fire because cycles have no leaves.
OrientedProduct orient_cycle_product(int m, int n);

}  // namespace boxorient
