#pragma once

#include <cstdint>
#include <vector>

#include "boxorient/graph.hpp"

namespace boxorient {

/// Ground truth from exhaustive enumeration of all 2^|E| orientations.
/// witness_orientation is indexed by the canonical edge order of
/// UndirectedGraph::edges(); bit false means the edge (u, v) with u < v is
/// oriented u -> v. The witness is the first strong orientation attaining
/// diam_min in depth-first bit order (edge 0 decided first, direction
/// u -> v tried before v -> u).
struct OracleResult {
  int diam_min = 0;
  std::vector<bool> witness_orientation;
  std::uint64_t orientations_tested = 0;  // complete orientations reached
  std::uint64_t strong_count = 0;
};

/// Exact minimum directed diameter over all strong orientations of a
/// connected bridgeless graph with at most max_edges edges. Prunes a prefix
/// as soon as some fully decided vertex has in- or out-degree 0.
OracleResult brute_force_diam_min(const UndirectedGraph& g,
                                  int max_edges = 20);

struct GapReport {
  int diam_min = 0;
  int gap = 0;  // rule_diameter - diam_min, nonnegative
};

GapReport gap_report(const UndirectedGraph& g, int rule_diameter,
                     int max_edges = 20);

}  // namespace boxorient
