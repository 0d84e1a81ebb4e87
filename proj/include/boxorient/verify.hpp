#pragma once

#include <string>
#include <utility>
#include <vector>

#include "boxorient/orientation.hpp"

namespace boxorient {

enum class BoundKind {
  None,
  TreeTheorem,
  CycleProposition,
  Corollary,
  ChvatalThomassen,
};

const char* bound_kind_name(BoundKind kind);

/// Directed diameter with a deterministic witness plus the certified paper
/// bound the caller filled in. strongly_connected holds exactly when the
/// diameter is finite; slack = bound - diameter is asserted nonnegative by
/// the certify_* functions.
struct DiameterReport {
  int diameter = 0;  // kUnreachable when not strongly connected
  std::pair<int, int> witness{0, 0};  // least ordered pair attaining it
  bool strongly_connected = false;
  BoundKind bound_kind = BoundKind::None;
  int bound = -1;
  int slack = -1;
};

/// Exact all-pairs maximum; witness is the lexicographically least ordered
/// pair attaining it. Bound fields are left unset.
DiameterReport directed_diameter(const Digraph& d);

bool strongly_connected(const Digraph& d);

enum class LemmaId {
  Diag4,
  GStep4,
  HStep5,
  SquarePattern,
  FourCycleAlternation,
};

const char* lemma_id_name(LemmaId id);

struct LemmaViolation {
  LemmaId lemma;
  std::vector<ProductVertex> tuple;
  int measured = -1;  // distance for the path lemmas, -1 for pattern checks
};

/// Does {xa,xb} x {ya,yb} induce a directed 4-cycle on its Cartesian arcs?
bool induces_directed_4cycle(const OrientedProduct& oriented, int xa, int xb,
                             int ya, int yb);

/// Sweeps every local property of a rule-built tree-product orientation:
/// dist <= 4 to the diagonal neighbor and within G-direction steps,
/// dist <= 5 within H-direction steps, the non-leaf square patterns, and the
/// directed-4-cycle alternation along factor paths. Empty result = certified.
std::vector<LemmaViolation> check_local_lemmas(const OrientedProduct& oriented);

/// bound = max(diam t1, diam t2) + 15; throws BoundViolated if the digraph
/// is not strong or exceeds the bound.
DiameterReport certify_tree_bound(const OrientedProduct& oriented,
                                  const RootedTree& t1, const RootedTree& t2);

/// bound = max(m, n)/2 + 1 for a cycle-built orientation.
DiameterReport certify_cycle_bound(const OrientedProduct& oriented);

/// The general pipeline: shortest path trees rooted at the default centers,
/// rules A-G on their product, lexicographic Residual arcs on the rest;
/// certified against bound = 2 * max(rad g, rad h) + 15.
std::pair<OrientedProduct, DiameterReport> general_orient(
    const UndirectedGraph& g, const UndirectedGraph& h);

/// Baseline comparison bound 2r^2 + 2r for a connected bridgeless graph.
int chvatal_thomassen_bound(const UndirectedGraph& g);

/// Structural invariants of any built orientation: arc/edge bijection, no
/// 2-cycles, min in/out degree >= 1, tag/kind consistency, and exclusivity
/// of the special rules. Returns human-readable problems, empty when sound.
std::vector<std::string> structural_check(const OrientedProduct& oriented);

}  // namespace boxorient
