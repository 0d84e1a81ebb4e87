#include "boxorient/product.hpp"

#include <algorithm>
#include <cassert>

namespace boxorient {

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::CartesianG:
      return "CartesianG";
    case EdgeKind::CartesianH:
      return "CartesianH";
    case EdgeKind::Direct:
      return "Direct";
  }
  return "?";
}

StrongProduct::StrongProduct(const UndirectedGraph& g,
                             const UndirectedGraph& h)
    : g_count_(g.vertex_count()), h_count_(h.vertex_count()) {
  if (g_count_ == 0 || h_count_ == 0) {
    throw Error(ErrorCode::EmptyFactor, "both factors must be nonempty");
  }
  auto g_edges = g.edges();
  auto h_edges = h.edges();
  edges_.reserve(static_cast<size_t>(g_count_) * h_edges.size() +
                 static_cast<size_t>(h_count_) * g_edges.size() +
                 2 * g_edges.size() * h_edges.size());

  auto push = [&](ProductVertex p, ProductVertex q, EdgeKind kind) {
    if (linear(p) > linear(q)) std::swap(p, q);
    edges_.push_back({p, q, kind});
    kind_count_[static_cast<int>(kind)]++;
  };

  for (auto [x1, x2] : g_edges) {
    for (int y = 0; y < h_count_; ++y) {
      push({x1, y}, {x2, y}, EdgeKind::CartesianG);
    }
  }
  for (int x = 0; x < g_count_; ++x) {
    for (auto [y1, y2] : h_edges) {
      push({x, y1}, {x, y2}, EdgeKind::CartesianH);
    }
  }
  for (auto [x1, x2] : g_edges) {
    for (auto [y1, y2] : h_edges) {
      push({x1, y1}, {x2, y2}, EdgeKind::Direct);
      push({x1, y2}, {x2, y1}, EdgeKind::Direct);
    }
  }

  std::sort(edges_.begin(), edges_.end(),
            [&](const ProductEdge& e, const ProductEdge& f) {
              return std::pair(linear(e.a), linear(e.b)) <
                     std::pair(linear(f.a), linear(f.b));
            });

  assert(kind_count_[static_cast<int>(EdgeKind::CartesianG)] ==
         h_count_ * static_cast<int>(g_edges.size()));
  assert(kind_count_[static_cast<int>(EdgeKind::CartesianH)] ==
         g_count_ * static_cast<int>(h_edges.size()));
  assert(kind_count_[static_cast<int>(EdgeKind::Direct)] ==
         2 * static_cast<int>(g_edges.size() * h_edges.size()));

  std::vector<Edge> skeleton_edges;
  skeleton_edges.reserve(edges_.size());
  for (const auto& e : edges_) {
    skeleton_edges.emplace_back(linear(e.a), linear(e.b));
  }
  skeleton_ = UndirectedGraph(vertex_count(), skeleton_edges);
}

int StrongProduct::edge_index(int lin_a, int lin_b) const {
  if (lin_a > lin_b) std::swap(lin_a, lin_b);
  auto key = std::pair(lin_a, lin_b);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), key,
      [&](const ProductEdge& e, const std::pair<int, int>& k) {
        return std::pair(linear(e.a), linear(e.b)) < k;
      });
  if (it == edges_.end() || std::pair(linear(it->a), linear(it->b)) != key) {
    return -1;
  }
  return static_cast<int>(it - edges_.begin());
}

StrongProduct strong_product(const UndirectedGraph& g,
                             const UndirectedGraph& h) {
  return StrongProduct(g, h);
}

bool product_distance_check(const UndirectedGraph& g, const UndirectedGraph& h,
                            long long max_pairs) {
  StrongProduct product(g, h);
  const UndirectedGraph& skeleton = product.skeleton();
  int ng = g.vertex_count();
  int nh = h.vertex_count();
  long long n = product.vertex_count();

  std::vector<std::vector<int>> dist_g(ng), dist_h(nh);
  for (int x = 0; x < ng; ++x) dist_g[x] = bfs_distances(g, x);
  for (int y = 0; y < nh; ++y) dist_h[y] = bfs_distances(h, y);

  int stride = 1;
  if (n * n > max_pairs) {
    long long sources = std::max<long long>(1, max_pairs / n);
    stride = static_cast<int>(std::max<long long>(1, n / sources));
  }
  for (int s = 0; s < n; s += stride) {
    ProductVertex sv = product.vertex(s);
    std::vector<int> dist = bfs_distances(skeleton, s);
    for (int t = 0; t < n; ++t) {
      ProductVertex tv = product.vertex(t);
      int expected = std::max(dist_g[sv.x][tv.x], dist_h[sv.y][tv.y]);
      if (dist[t] != expected) return false;
    }
  }
  return true;
}

std::string product_vertex_label(ProductVertex v) {
  return std::to_string(v.x) + "," + std::to_string(v.y);
}

}  // namespace boxorient
