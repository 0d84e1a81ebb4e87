#include "boxorient/tree_orient.hpp"

namespace boxorient {

namespace {

void require_kind(const ProductEdge& edge, bool want_direct) {
  bool is_direct = edge.kind == EdgeKind::Direct;
  if (is_direct != want_direct) {
    throw Error(ErrorCode::WrongEdgeKind,
                std::string("expected a ") +
                    (want_direct ? "direct" : "Cartesian") + " edge, got " +
                    edge_kind_name(edge.kind));
  }
}

int parent_endpoint(const RootedTree& t, int u, int v) {
  if (t.parent[v] == u) return u;
  if (t.parent[u] == v) return v;
  throw Error(ErrorCode::WrongEdgeKind,
              "endpoints " + std::to_string(u) + ", " + std::to_string(v) +
                  " are not adjacent in the tree");
}

}  // namespace

CanonicalSquare canonicalize_square(const ProductEdge& edge,
                                    const RootedTree& t1,
                                    const RootedTree& t2) {
  require_kind(edge, true);
  CanonicalSquare square;
  square.x1 = parent_endpoint(t1, edge.a.x, edge.b.x);
  square.x2 = square.x1 == edge.a.x ? edge.b.x : edge.a.x;
  square.y1 = parent_endpoint(t2, edge.a.y, edge.b.y);
  square.y2 = square.y1 == edge.a.y ? edge.b.y : edge.a.y;
  ProductVertex corner{square.x1, square.y1};
  square.main_diagonal = edge.a == corner || edge.b == corner;
  return square;
}

std::pair<Arc, RuleTag> orient_cartesian_edge(const ProductEdge& edge,
                                              const RootedTree& t1,
                                              const RootedTree& t2) {
  require_kind(edge, false);
  if (edge.kind == EdgeKind::CartesianG) {
    int y = edge.a.y;
    int x1 = parent_endpoint(t1, edge.a.x, edge.b.x);
    int x2 = x1 == edge.a.x ? edge.b.x : edge.a.x;
    if (t2.side[y] == Side::A) std::swap(x1, x2);  // reversed D_1 on A_2 layers
    return {Arc{{x1, y}, {x2, y}}, RuleTag::A};
  }
  int x = edge.a.x;
  int y1 = parent_endpoint(t2, edge.a.y, edge.b.y);
  int y2 = y1 == edge.a.y ? edge.b.y : edge.a.y;
  if (t1.side[x] == Side::B) std::swap(y1, y2);  // reversed D_2 on B_1 layers
  return {Arc{{x, y1}, {x, y2}}, RuleTag::B};
}

std::pair<Arc, RuleTag> orient_direct_edge(const ProductEdge& edge,
                                           const RootedTree& t1,
                                           const RootedTree& t2) {
  CanonicalSquare square = canonicalize_square(edge, t1, t2);
  SquareArcs arcs =
      orient_square(FactorOrientation::from_tree(t1),
                    FactorOrientation::from_tree(t2), square.x1, square.x2,
                    square.y1, square.y2);
  Arc arc;
  if (square.main_diagonal) {
    arc = Arc{{square.x1, square.y1}, {square.x2, square.y2}};
    if (!arcs.main_forward) std::swap(arc.from, arc.to);
  } else {
    arc = Arc{{square.x1, square.y2}, {square.x2, square.y1}};
    if (!arcs.anti_forward) std::swap(arc.from, arc.to);
  }
  return {arc, arcs.tag};
}

OrientedProduct orient_tree_product(const RootedTree& t1,
                                    const RootedTree& t2) {
  if (t1.vertex_count() < 2 || t2.vertex_count() < 2) {
    throw Error(ErrorCode::FactorTooSmall,
                "tree factors need at least two vertices");
  }
  OrientedProduct oriented =
      orient_strong_product(t1.tree, t2.tree, FactorOrientation::from_tree(t1),
                            FactorOrientation::from_tree(t2));
  oriented.attach_tree_factors(t1, t2);
  return oriented;
}

}  // namespace boxorient
