#include "boxorient/cycle_orient.hpp"

namespace boxorient {

OrientedProduct orient_cycle_product(int m, int n) {
  FactorOrientation f1 = FactorOrientation::from_even_cycle(m);
  FactorOrientation f2 = FactorOrientation::from_even_cycle(n);
  OrientedProduct oriented =
      orient_strong_product(cycle_graph(m), cycle_graph(n), f1, f2);
  oriented.attach_cycle_factors(m, n);
  return oriented;
}

}  // namespace boxorient
