#include "boxorient/orientation.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace boxorient {

const char* rule_tag_name(RuleTag tag) {
  switch (tag) {
    case RuleTag::A:
      return "A";
    case RuleTag::B:
      return "B";
    case RuleTag::C:
      return "C";
    case RuleTag::D:
      return "D";
    case RuleTag::E:
      return "E";
    case RuleTag::F:
      return "F";
    case RuleTag::G1:
      return "G1";
    case RuleTag::G2:
      return "G2";
    case RuleTag::Residual:
      return "Residual";
  }
  return "?";
}

bool FactorOrientation::arc(int u, int v) const {
  const auto& heads = out[u];
  return std::binary_search(heads.begin(), heads.end(), v);
}

FactorOrientation FactorOrientation::from_tree(const RootedTree& tree) {
  FactorOrientation f;
  f.n = tree.vertex_count();
  f.out.resize(f.n);
  f.side = tree.side;
  f.leaf.resize(f.n);
  f.root = tree.root;
  for (int v = 0; v < f.n; ++v) {
    f.leaf[v] = tree.is_leaf(v);
    if (tree.parent[v] != -1) f.out[tree.parent[v]].push_back(v);
  }
  for (auto& heads : f.out) std::sort(heads.begin(), heads.end());
  return f;
}

FactorOrientation FactorOrientation::from_even_cycle(int m) {
  if (m < 4 || m % 2 != 0) {
    throw Error(ErrorCode::InvalidCycleLength,
                "cycle length " + std::to_string(m) + " must be even and >= 4");
  }
  FactorOrientation f;
  f.n = m;
  f.out.resize(m);
  f.side.resize(m);
  f.leaf.assign(m, false);
  for (int i = 0; i < m; ++i) {
    f.out[i].push_back((i + 1) % m);
    f.side[i] = i % 2 == 0 ? Side::A : Side::B;
  }
  return f;
}

namespace {

std::string square_str(int x1, int x2, int y1, int y2) {
  return "square x1=" + std::to_string(x1) + " x2=" + std::to_string(x2) +
         " y1=" + std::to_string(y1) + " y2=" + std::to_string(y2);
}

struct RulePredicates {
  bool c, d, e, f;
};

RulePredicates special_rules(const FactorOrientation& f1,
                             const FactorOrientation& f2, int x1, int x2,
                             int y1, int y2) {
  bool x2_leaf_a = f1.leaf[x2] && f1.side[x2] == Side::A;
  RulePredicates p{};
  p.c = f1.is_root(x1) && f2.leaf[y2] && f2.side[y2] == Side::A;
  p.d = x2_leaf_a && f2.is_root(y1) && !f2.leaf[y2];
  p.e = x2_leaf_a && f2.is_root(y1) && f2.leaf[y2];
  p.f = x2_leaf_a && f2.leaf[y2] && f2.side[y2] == Side::B && !f2.is_root(y1);
  return p;
}

}  // namespace

int matching_special_rules(const FactorOrientation& f1,
                           const FactorOrientation& f2, int x1, int x2, int y1,
                           int y2) {
  RulePredicates p = special_rules(f1, f2, x1, x2, y1, y2);
  return int(p.c) + int(p.d) + int(p.e) + int(p.f);
}

SquareArcs orient_square(const FactorOrientation& f1,
                         const FactorOrientation& f2, int x1, int x2, int y1,
                         int y2) {
  if (!f1.arc(x1, x2) || !f2.arc(y1, y2)) {
    throw Error(ErrorCode::WrongEdgeKind,
                square_str(x1, x2, y1, y2) + " is not factor-arc aligned");
  }
  RulePredicates p = special_rules(f1, f2, x1, x2, y1, y2);
  if (int(p.c) + int(p.d) + int(p.e) + int(p.f) > 1) {
    throw Error(ErrorCode::RuleConflict,
                "multiple special rules match " + square_str(x1, x2, y1, y2));
  }
  if (p.c) return {true, true, RuleTag::C};
  if (p.d) return {true, true, RuleTag::D};
  if (p.e) return {false, true, RuleTag::E};
  if (p.f) return {false, false, RuleTag::F};
  if (f1.side[x1] != f2.side[y1]) return {true, false, RuleTag::G1};
  return {false, true, RuleTag::G2};
}

OrientedProduct::OrientedProduct(StrongProduct product,
                                 std::vector<bool> forward,
                                 std::vector<RuleTag> rules)
    : product_(std::move(product)),
      forward_(std::move(forward)),
      rules_(std::move(rules)) {
  if (forward_.size() != product_.edges().size() ||
      rules_.size() != product_.edges().size()) {
    throw Error(ErrorCode::PreconditionViolated,
                "orientation arrays must cover every product edge");
  }
  std::vector<Edge> arcs;
  arcs.reserve(forward_.size());
  for (size_t i = 0; i < forward_.size(); ++i) {
    const ProductEdge& e = product_.edges()[i];
    int a = product_.linear(e.a);
    int b = product_.linear(e.b);
    arcs.emplace_back(forward_[i] ? a : b, forward_[i] ? b : a);
  }
  digraph_ = Digraph(product_.vertex_count(), arcs);
}

Arc OrientedProduct::edge_arc(int edge_index) const {
  const ProductEdge& e = product_.edges()[edge_index];
  return forward_[edge_index] ? Arc{e.a, e.b} : Arc{e.b, e.a};
}

std::optional<RuleTag> OrientedProduct::arc_rule(ProductVertex from,
                                                 ProductVertex to) const {
  int index = product_.edge_index(product_.linear(from), product_.linear(to));
  if (index < 0) return std::nullopt;
  Arc arc = edge_arc(index);
  if (arc.from != from || arc.to != to) return std::nullopt;
  return rules_[index];
}

std::map<RuleTag, int> OrientedProduct::rule_histogram() const {
  std::map<RuleTag, int> histogram;
  for (int t = 0; t < kRuleTagCount; ++t) {
    histogram[static_cast<RuleTag>(t)] = 0;
  }
  for (RuleTag tag : rules_) histogram[tag]++;
  return histogram;
}

bool OrientedProduct::has_residual() const {
  return std::find(rules_.begin(), rules_.end(), RuleTag::Residual) !=
         rules_.end();
}

void OrientedProduct::attach_tree_factors(RootedTree t1, RootedTree t2) {
  tree1_ = std::move(t1);
  tree2_ = std::move(t2);
}

void OrientedProduct::attach_cycle_factors(int m, int n) {
  cycle_ = std::pair(m, n);
}

OrientedProduct OrientedProduct::with_flipped_edge(int edge_index) const {
  std::vector<bool> forward = forward_;
  forward[edge_index] = !forward[edge_index];
  OrientedProduct flipped(product_, std::move(forward), rules_);
  flipped.tree1_ = tree1_;
  flipped.tree2_ = tree2_;
  flipped.cycle_ = cycle_;
  return flipped;
}

OrientedProduct orient_strong_product(const UndirectedGraph& g,
                                      const UndirectedGraph& h,
                                      const FactorOrientation& f1,
                                      const FactorOrientation& f2) {
  if (g.vertex_count() != f1.n || h.vertex_count() != f2.n) {
    throw Error(ErrorCode::PreconditionViolated,
                "factor orientation size mismatch");
  }
  StrongProduct product(g, h);
  std::vector<bool> forward(product.edges().size());
  std::vector<RuleTag> rules(product.edges().size());
  // One square = one rule application; keyed by the head pair (x2, y2),
  // which identifies the square for trees and cycles alike.
  std::unordered_map<long long, SquareArcs> square_memo;

  for (size_t i = 0; i < product.edges().size(); ++i) {
    const ProductEdge& e = product.edges()[i];
    switch (e.kind) {
      case EdgeKind::CartesianG: {
        int y = e.a.y;
        if (!f1.factor_edge(e.a.x, e.b.x)) {
          forward[i] = true;
          rules[i] = RuleTag::Residual;
          break;
        }
        // Rule A: layer G_y follows D_1 when y is in B_2, reversed otherwise.
        bool along_d1 = f1.arc(e.a.x, e.b.x);
        bool follow = f2.side[y] == Side::B;
        forward[i] = along_d1 == follow;
        rules[i] = RuleTag::A;
        break;
      }
      case EdgeKind::CartesianH: {
        int x = e.a.x;
        if (!f2.factor_edge(e.a.y, e.b.y)) {
          forward[i] = true;
          rules[i] = RuleTag::Residual;
          break;
        }
        // Rule B: layer H_x follows D_2 when x is in A_1, reversed otherwise.
        bool along_d2 = f2.arc(e.a.y, e.b.y);
        bool follow = f1.side[x] == Side::A;
        forward[i] = along_d2 == follow;
        rules[i] = RuleTag::B;
        break;
      }
      case EdgeKind::Direct: {
        if (!f1.factor_edge(e.a.x, e.b.x) || !f2.factor_edge(e.a.y, e.b.y)) {
          forward[i] = true;
          rules[i] = RuleTag::Residual;
          break;
        }
        int x1 = f1.arc(e.a.x, e.b.x) ? e.a.x : e.b.x;
        int x2 = x1 == e.a.x ? e.b.x : e.a.x;
        int y1 = f2.arc(e.a.y, e.b.y) ? e.a.y : e.b.y;
        int y2 = y1 == e.a.y ? e.b.y : e.a.y;
        long long key = static_cast<long long>(x2) * f2.n + y2;
        auto it = square_memo.find(key);
        if (it == square_memo.end()) {
          it = square_memo.emplace(key, orient_square(f1, f2, x1, x2, y1, y2))
                   .first;
        }
        const SquareArcs& arcs = it->second;
        bool main = e.a == ProductVertex{x1, y1} || e.b == ProductVertex{x1, y1};
        bool tail_is_a =
            main ? e.a == ProductVertex{x1, y1} : e.a == ProductVertex{x1, y2};
        bool diagonal_forward = main ? arcs.main_forward : arcs.anti_forward;
        forward[i] = diagonal_forward == tail_is_a;
        rules[i] = arcs.tag;
        break;
      }
    }
  }
  return OrientedProduct(std::move(product), std::move(forward),
                         std::move(rules));
}

}  // namespace boxorient
