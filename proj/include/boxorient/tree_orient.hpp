#pragma once

#include "boxorient/orientation.hpp"

namespace boxorient {

/// Normalizes a direct edge of t1 ⊠ t2 into the rules' labeling: x1 is the
/// parent endpoint in t1, y1 the parent endpoint in t2.
CanonicalSquare canonicalize_square(const ProductEdge& edge,
                                    const RootedTree& t1,
                                    const RootedTree& t2);

/// Rule A/B orientation of a single Cartesian edge.
std::pair<Arc, RuleTag> orient_cartesian_edge(const ProductEdge& edge,
                                              const RootedTree& t1,
                                              const RootedTree& t2);

/// Rule C-G2 orientation of a single direct edge (the queried diagonal of
/// its square).
std::pair<Arc, RuleTag> orient_direct_edge(const ProductEdge& edge,
                                           const RootedTree& t1,
                                           const RootedTree& t2);

/// Orients t1 ⊠ t2 by rules A to G. Both trees need at least two vertices;
/// the result is a total, strongly connected orientation with every arc
/// tagged by its rule.
OrientedProduct orient_tree_product(const RootedTree& t1,
                                    const RootedTree& t2);

}  // namespace boxorient
