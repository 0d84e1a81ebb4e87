#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "boxorient/product.hpp"

namespace boxorient {

/// Which rule produced an arc. A/B orient Cartesian edges by layer side,
/// C-F handle direct edges touching leaves or the roots, G1/G2 are the
/// generic diagonal rules, Residual marks arcs outside the spanning
/// structure in the general-graph pipeline.
enum class RuleTag : unsigned char { A, B, C, D, E, F, G1, G2, Residual };

inline constexpr int kRuleTagCount = 9;

const char* rule_tag_name(RuleTag tag);

/// The factor data the rules consult: the arcs of the factor orientation D_i,
/// the bipartition side of every vertex, and the leaf/root predicates. Trees
/// orient every edge away from the root; even cycles orient i -> i+1 (mod m)
/// and have neither leaves nor a root.
struct FactorOrientation {
  int n = 0;
  std::vector<std::vector<int>> out;  // sorted heads of the arcs of D_i
  std::vector<Side> side;
  std::vector<bool> leaf;
  int root = -1;  // -1 when the factor has no root

  bool arc(int u, int v) const;
  bool factor_edge(int u, int v) const { return arc(u, v) || arc(v, u); }
  bool is_root(int v) const { return v == root; }

  static FactorOrientation from_tree(const RootedTree& tree);
  static FactorOrientation from_even_cycle(int m);
};

/// A direct edge normalized into the labeling the rules assume:
/// x1 -> x2 in D_1 and y1 -> y2 in D_2. The queried edge is the main
/// diagonal (x1,y1)(x2,y2) or the anti diagonal (x1,y2)(x2,y1).
struct CanonicalSquare {
  int x1 = 0, x2 = 0;
  int y1 = 0, y2 = 0;
  bool main_diagonal = true;
};

/// Orientation of both diagonals of one square plus the rule that fired.
/// main_forward means (x1,y1) -> (x2,y2); anti_forward means
/// (x1,y2) -> (x2,y1).
struct SquareArcs {
  bool main_forward = false;
  bool anti_forward = false;
  RuleTag tag = RuleTag::G1;
};

/// Number of the special rules C, D, E, F whose predicate holds on the
/// square; the rules are mutually exclusive by construction, so anything
/// above 1 is a bug surfaced via RuleConflict.
int matching_special_rules(const FactorOrientation& f1,
                           const FactorOrientation& f2, int x1, int x2, int y1,
                           int y2);

/// Applies C, D, E, F in order, first match wins, otherwise G1/G2 by the
/// side class of (x1, y1). Requires x1 -> x2 in f1 and y1 -> y2 in f2.
SquareArcs orient_square(const FactorOrientation& f1,
                         const FactorOrientation& f2, int x1, int x2, int y1,
                         int y2);

struct Arc {
  ProductVertex from;
  ProductVertex to;
  auto operator<=>(const Arc&) const = default;
};

/// A total orientation of a strong product: one arc per product edge, each
/// tagged with the rule that produced it, plus the factor structures used
/// (rooted trees or even-cycle lengths) for downstream certification.
class OrientedProduct {
 public:
  OrientedProduct(StrongProduct product, std::vector<bool> forward,
                  std::vector<RuleTag> rules);

  const StrongProduct& product() const { return product_; }
  const Digraph& digraph() const { return digraph_; }

  bool edge_forward(int edge_index) const { return forward_[edge_index]; }
  RuleTag edge_rule(int edge_index) const { return rules_[edge_index]; }
  Arc edge_arc(int edge_index) const;
  std::optional<RuleTag> arc_rule(ProductVertex from, ProductVertex to) const;
  std::map<RuleTag, int> rule_histogram() const;
  bool has_residual() const;

  bool has_tree_factors() const { return tree1_.has_value(); }
  const RootedTree& tree1() const { return *tree1_; }
  const RootedTree& tree2() const { return *tree2_; }
  std::optional<std::pair<int, int>> cycle_lengths() const { return cycle_; }

  void attach_tree_factors(RootedTree t1, RootedTree t2);
  void attach_cycle_factors(int m, int n);

  /// Copy with one edge's direction flipped; factor attachments are kept.
  /// Intended for negative-control tests of the certification machinery.
  OrientedProduct with_flipped_edge(int edge_index) const;

 private:
  StrongProduct product_;
  std::vector<bool> forward_;
  std::vector<RuleTag> rules_;
  Digraph digraph_;
  std::optional<RootedTree> tree1_;
  std::optional<RootedTree> tree2_;
  std::optional<std::pair<int, int>> cycle_;
};

/// Orients every edge of g ⊠ h: rules A/B for Cartesian edges of the factor
/// structures, C-G2 for their direct edges (both diagonals of a square are
/// decided in one application and memoized), and lexicographic Residual arcs
/// for edges outside f1 ⊠ f2.
OrientedProduct orient_strong_product(const UndirectedGraph& g,
                                      const UndirectedGraph& h,
                                      const FactorOrientation& f1,
                                      const FactorOrientation& f2);

}  // namespace boxorient
