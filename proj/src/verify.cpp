#include "boxorient/verify.hpp"

#include <algorithm>
#include <string>

namespace boxorient {

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::None:
      return "None";
    case BoundKind::TreeTheorem:
      return "TreeTheorem";
    case BoundKind::CycleProposition:
      return "CycleProposition";
    case BoundKind::Corollary:
      return "Corollary";
    case BoundKind::ChvatalThomassen:
      return "ChvatalThomassen";
  }
  return "?";
}

const char* lemma_id_name(LemmaId id) {
  switch (id) {
    case LemmaId::Diag4:
      return "Diag4";
    case LemmaId::GStep4:
      return "GStep4";
    case LemmaId::HStep5:
      return "HStep5";
    case LemmaId::SquarePattern:
      return "SquarePattern";
    case LemmaId::FourCycleAlternation:
      return "FourCycleAlternation";
  }
  return "?";
}

DiameterReport directed_diameter(const Digraph& d) {
  DiameterReport report;
  int n = d.vertex_count();
  if (n <= 1) {
    report.diameter = 0;
    report.strongly_connected = true;
    return report;
  }
  int best = -1;
  std::pair<int, int> witness{0, 0};
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist = bfs_distances(d, s);
    for (int t = 0; t < n; ++t) {
      if (dist[t] > best) {
        best = dist[t];
        witness = {s, t};
      }
    }
  }
  report.diameter = best;
  report.witness = witness;
  report.strongly_connected = best != kUnreachable;
  return report;
}

bool strongly_connected(const Digraph& d) {
  int n = d.vertex_count();
  if (n <= 1) return true;
  for (int dist : bfs_distances(d, 0)) {
    if (dist == kUnreachable) return false;
  }
  for (int dist : bfs_distances(d.reversed(), 0)) {
    if (dist == kUnreachable) return false;
  }
  return true;
}

bool induces_directed_4cycle(const OrientedProduct& oriented, int xa, int xb,
                             int ya, int yb) {
  const StrongProduct& p = oriented.product();
  const Digraph& d = oriented.digraph();
  int c0 = p.linear({xa, ya});
  int c1 = p.linear({xb, ya});
  int c2 = p.linear({xb, yb});
  int c3 = p.linear({xa, yb});
  bool clockwise = d.has_arc(c0, c1) && d.has_arc(c1, c2) &&
                   d.has_arc(c2, c3) && d.has_arc(c3, c0);
  bool counter = d.has_arc(c1, c0) && d.has_arc(c0, c3) && d.has_arc(c3, c2) &&
                 d.has_arc(c2, c1);
  return clockwise || counter;
}

namespace {

void require_tree_factors(const OrientedProduct& oriented) {
  if (!oriented.has_tree_factors()) {
    throw Error(ErrorCode::PreconditionViolated,
                "orientation carries no tree factors");
  }
}

DiameterReport certify(const OrientedProduct& oriented, BoundKind kind,
                       int bound) {
  DiameterReport report = directed_diameter(oriented.digraph());
  report.bound_kind = kind;
  report.bound = bound;
  if (!report.strongly_connected) {
    throw Error(ErrorCode::BoundViolated,
                std::string(bound_kind_name(kind)) +
                    ": digraph is not strongly connected, witness " +
                    product_vertex_label(
                        oriented.product().vertex(report.witness.first)) +
                    " -> " +
                    product_vertex_label(
                        oriented.product().vertex(report.witness.second)));
  }
  report.slack = bound - report.diameter;
  if (report.slack < 0) {
    throw Error(ErrorCode::BoundViolated,
                std::string(bound_kind_name(kind)) + ": directed diameter " +
                    std::to_string(report.diameter) + " exceeds bound " +
                    std::to_string(bound) + ", witness " +
                    product_vertex_label(
                        oriented.product().vertex(report.witness.first)) +
                    " -> " +
                    product_vertex_label(
                        oriented.product().vertex(report.witness.second)));
  }
  return report;
}

// Expected direct-arc pattern of a square whose four corners are non-leaves:
// pattern (a) sends (x1,y1)->(x2,y2) and (x2,y1)->(x1,y2), pattern (b) the
// two reversals.
void check_square_pattern(const OrientedProduct& oriented,
                          const FactorOrientation& f1,
                          const FactorOrientation& f2,
                          std::vector<LemmaViolation>& violations) {
  const StrongProduct& p = oriented.product();
  const Digraph& d = oriented.digraph();
  const RootedTree& t1 = oriented.tree1();
  const RootedTree& t2 = oriented.tree2();
  for (auto [xu, xv] : t1.tree.edges()) {
    if (t1.is_leaf(xu) || t1.is_leaf(xv)) continue;
    for (auto [yu, yv] : t2.tree.edges()) {
      if (t2.is_leaf(yu) || t2.is_leaf(yv)) continue;
      for (auto [x1, x2] : {std::pair(xu, xv), std::pair(xv, xu)}) {
        for (auto [y1, y2] : {std::pair(yu, yv), std::pair(yv, yu)}) {
          bool same_class = f1.side[x1] == f2.side[y1];
          bool x_towards_x1 = f1.arc(x2, x1);
          bool pattern_a = same_class == x_towards_x1;
          int main_from = p.linear({x1, y1});
          int main_to = p.linear({x2, y2});
          int anti_from = p.linear({x2, y1});
          int anti_to = p.linear({x1, y2});
          if (!pattern_a) {
            std::swap(main_from, main_to);
            std::swap(anti_from, anti_to);
          }
          if (!d.has_arc(main_from, main_to) ||
              !d.has_arc(anti_from, anti_to)) {
            violations.push_back(
                {LemmaId::SquarePattern,
                 {{x1, y1}, {x2, y2}, {x2, y1}, {x1, y2}},
                 -1});
          }
        }
      }
    }
  }
}

// Along any factor path whose middle vertex is not the path root, at least
// one of the two adjacent squares induces a directed 4-cycle.
void check_four_cycle_alternation(const OrientedProduct& oriented,
                                  std::vector<LemmaViolation>& violations) {
  const RootedTree& t1 = oriented.tree1();
  const RootedTree& t2 = oriented.tree2();
  auto sweep = [&](const RootedTree& path_tree, const RootedTree& edge_tree,
                   bool path_in_g) {
    for (int mid = 0; mid < path_tree.vertex_count(); ++mid) {
      const auto& nbrs = path_tree.tree.neighbors(mid);
      for (size_t i = 0; i < nbrs.size(); ++i) {
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
          int a = nbrs[i];
          int b = nbrs[j];
          if (path_tree.parent[a] == mid && path_tree.parent[b] == mid) {
            continue;  // mid is the root of the path a, mid, b
          }
          for (auto [e1, e2] : edge_tree.tree.edges()) {
            bool ok =
                path_in_g
                    ? (induces_directed_4cycle(oriented, a, mid, e1, e2) ||
                       induces_directed_4cycle(oriented, mid, b, e1, e2))
                    : (induces_directed_4cycle(oriented, e1, e2, a, mid) ||
                       induces_directed_4cycle(oriented, e1, e2, mid, b));
            if (!ok) {
              std::vector<ProductVertex> tuple =
                  path_in_g ? std::vector<ProductVertex>{{a, e1},
                                                         {mid, e1},
                                                         {b, e1},
                                                         {a, e2},
                                                         {mid, e2},
                                                         {b, e2}}
                            : std::vector<ProductVertex>{{e1, a},
                                                         {e1, mid},
                                                         {e1, b},
                                                         {e2, a},
                                                         {e2, mid},
                                                         {e2, b}};
              violations.push_back(
                  {LemmaId::FourCycleAlternation, std::move(tuple), -1});
            }
          }
        }
      }
    }
  };
  sweep(t1, t2, /*path_in_g=*/true);
  sweep(t2, t1, /*path_in_g=*/false);
}

}  // namespace

std::vector<LemmaViolation> check_local_lemmas(
    const OrientedProduct& oriented) {
  require_tree_factors(oriented);
  const RootedTree& t1 = oriented.tree1();
  const RootedTree& t2 = oriented.tree2();
  const StrongProduct& p = oriented.product();
  const Digraph& d = oriented.digraph();
  std::vector<LemmaViolation> violations;

  for (int source = 0; source < p.vertex_count(); ++source) {
    ProductVertex sv = p.vertex(source);
    std::vector<int> dist = bfs_distances(d, source);
    for (int x2 : t1.tree.neighbors(sv.x)) {
      int step = dist[p.linear({x2, sv.y})];
      if (step > 4) {
        violations.push_back({LemmaId::GStep4, {sv, {x2, sv.y}}, step});
      }
      for (int y2 : t2.tree.neighbors(sv.y)) {
        int diag = dist[p.linear({x2, y2})];
        if (diag > 4) {
          violations.push_back({LemmaId::Diag4, {sv, {x2, y2}}, diag});
        }
      }
    }
    for (int y2 : t2.tree.neighbors(sv.y)) {
      int step = dist[p.linear({sv.x, y2})];
      if (step > 5) {
        violations.push_back({LemmaId::HStep5, {sv, {sv.x, y2}}, step});
      }
    }
  }

  FactorOrientation f1 = FactorOrientation::from_tree(t1);
  FactorOrientation f2 = FactorOrientation::from_tree(t2);
  check_square_pattern(oriented, f1, f2, violations);
  check_four_cycle_alternation(oriented, violations);
  return violations;
}

DiameterReport certify_tree_bound(const OrientedProduct& oriented,
                                  const RootedTree& t1, const RootedTree& t2) {
  int diam1 = eccentricity_profile(t1.tree).diameter;
  int diam2 = eccentricity_profile(t2.tree).diameter;
  return certify(oriented, BoundKind::TreeTheorem,
                 std::max(diam1, diam2) + 15);
}

DiameterReport certify_cycle_bound(const OrientedProduct& oriented) {
  auto lengths = oriented.cycle_lengths();
  if (!lengths) {
    throw Error(ErrorCode::PreconditionViolated,
                "orientation was not built from even cycles");
  }
  return certify(oriented, BoundKind::CycleProposition,
                 std::max(lengths->first, lengths->second) / 2 + 1);
}

std::pair<OrientedProduct, DiameterReport> general_orient(
    const UndirectedGraph& g, const UndirectedGraph& h) {
  if (g.vertex_count() < 2 || h.vertex_count() < 2) {
    throw Error(ErrorCode::FactorTooSmall,
                "factors need at least two vertices");
  }
  EccentricityProfile pg = eccentricity_profile(g);
  EccentricityProfile ph = eccentricity_profile(h);
  if (pg.radius == kUnreachable || ph.radius == kUnreachable) {
    throw Error(ErrorCode::NotConnected, "factors must be connected");
  }
  RootedTree t1 = shortest_path_tree(g, pg.centers.front());
  RootedTree t2 = shortest_path_tree(h, ph.centers.front());
  OrientedProduct oriented = orient_strong_product(
      g, h, FactorOrientation::from_tree(t1), FactorOrientation::from_tree(t2));
  oriented.attach_tree_factors(std::move(t1), std::move(t2));
  DiameterReport report = certify(oriented, BoundKind::Corollary,
                                  2 * std::max(pg.radius, ph.radius) + 15);
  return {std::move(oriented), report};
}

int chvatal_thomassen_bound(const UndirectedGraph& g) {
  if (auto bridge = find_bridge(g)) {  // also rejects disconnected input
    throw Error(ErrorCode::NotBridgeless,
                "bridge (" + std::to_string(bridge->first) + ", " +
                    std::to_string(bridge->second) + ") present");
  }
  int r = eccentricity_profile(g).radius;
  return 2 * r * r + 2 * r;
}

std::vector<std::string> structural_check(const OrientedProduct& oriented) {
  std::vector<std::string> problems;
  const StrongProduct& p = oriented.product();
  const Digraph& d = oriented.digraph();

  if (d.arc_count() != p.edge_count()) {
    problems.push_back("arc count " + std::to_string(d.arc_count()) +
                       " differs from edge count " +
                       std::to_string(p.edge_count()));
  }

  bool have_factors = oriented.has_tree_factors() ||
                      oriented.cycle_lengths().has_value();
  FactorOrientation f1, f2;
  if (oriented.has_tree_factors()) {
    f1 = FactorOrientation::from_tree(oriented.tree1());
    f2 = FactorOrientation::from_tree(oriented.tree2());
  } else if (auto lengths = oriented.cycle_lengths()) {
    f1 = FactorOrientation::from_even_cycle(lengths->first);
    f2 = FactorOrientation::from_even_cycle(lengths->second);
  }

  for (int i = 0; i < p.edge_count(); ++i) {
    const ProductEdge& e = p.edges()[i];
    int a = p.linear(e.a);
    int b = p.linear(e.b);
    std::string label =
        product_vertex_label(e.a) + " -- " + product_vertex_label(e.b);
    if (d.has_arc(a, b) && d.has_arc(b, a)) {
      problems.push_back("2-cycle on edge " + label);
    } else if (!d.has_arc(a, b) && !d.has_arc(b, a)) {
      problems.push_back("unoriented edge " + label);
    }

    RuleTag tag = oriented.edge_rule(i);
    bool cartesian_tag = tag == RuleTag::A || tag == RuleTag::B;
    if (e.kind == EdgeKind::Direct && cartesian_tag) {
      problems.push_back("Cartesian rule on direct edge " + label);
    }
    if (e.kind != EdgeKind::Direct && !cartesian_tag &&
        tag != RuleTag::Residual) {
      problems.push_back("direct rule on Cartesian edge " + label);
    }
    if (!have_factors) continue;

    bool x_in_factor = e.a.x == e.b.x || f1.factor_edge(e.a.x, e.b.x);
    bool y_in_factor = e.a.y == e.b.y || f2.factor_edge(e.a.y, e.b.y);
    bool in_factor_product = x_in_factor && y_in_factor;
    if (in_factor_product == (tag == RuleTag::Residual)) {
      problems.push_back("tag " + std::string(rule_tag_name(tag)) +
                         " inconsistent with factor membership on " + label);
    }
    if (e.kind == EdgeKind::Direct && in_factor_product) {
      int x1 = f1.arc(e.a.x, e.b.x) ? e.a.x : e.b.x;
      int x2 = x1 == e.a.x ? e.b.x : e.a.x;
      int y1 = f2.arc(e.a.y, e.b.y) ? e.a.y : e.b.y;
      int y2 = y1 == e.a.y ? e.b.y : e.a.y;
      if (matching_special_rules(f1, f2, x1, x2, y1, y2) > 1) {
        problems.push_back("special rules overlap on " + label);
      }
    }
  }

  if (p.vertex_count() >= 2) {
    for (int v = 0; v < p.vertex_count(); ++v) {
      if (d.out_neighbors(v).empty()) {
        problems.push_back("vertex " +
                           product_vertex_label(p.vertex(v)) +
                           " has no out-neighbor");
      }
      if (d.in_neighbors(v).empty()) {
        problems.push_back("vertex " +
                           product_vertex_label(p.vertex(v)) +
                           " has no in-neighbor");
      }
    }
  }
  return problems;
}

}  // namespace boxorient
