#pragma once

#include <compare>
#include <string>
#include <vector>

#include "boxorient/graph.hpp"

namespace boxorient {

struct ProductVertex {
  int x = 0;
  int y = 0;
  auto operator<=>(const ProductVertex&) const = default;
};

enum class EdgeKind : unsigned char { CartesianG, CartesianH, Direct };

const char* edge_kind_name(EdgeKind kind);

/// Product edge stored with the lexicographically smaller linearized
/// endpoint first.
struct ProductEdge {
  ProductVertex a;
  ProductVertex b;
  EdgeKind kind = EdgeKind::Direct;
};

/// The strong product g ⊠ h: vertices are pairs (x, y), linearized row-major
/// as x * |V(h)| + y, with every edge classified as Cartesian-in-g,
/// Cartesian-in-h, or direct. Edge order is sorted by linearized endpoint
/// pair and fixed for all downstream bookkeeping.
class StrongProduct {
 public:
  StrongProduct(const UndirectedGraph& g, const UndirectedGraph& h);

  int g_count() const { return g_count_; }
  int h_count() const { return h_count_; }
  int vertex_count() const { return g_count_ * h_count_; }

  int linear(ProductVertex v) const { return v.x * h_count_ + v.y; }
  ProductVertex vertex(int linear) const {
    return {linear / h_count_, linear % h_count_};
  }

  const std::vector<ProductEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Index of the edge with linearized endpoints {lin_a, lin_b}, or -1.
  int edge_index(int lin_a, int lin_b) const;
  int count(EdgeKind kind) const { return kind_count_[static_cast<int>(kind)]; }

  /// The product as a plain undirected graph over linearized ids.
  const UndirectedGraph& skeleton() const { return skeleton_; }

 private:
  int g_count_ = 0;
  int h_count_ = 0;
  std::vector<ProductEdge> edges_;
  int kind_count_[3] = {0, 0, 0};
  UndirectedGraph skeleton_;
};

StrongProduct strong_product(const UndirectedGraph& g,
                             const UndirectedGraph& h);

/// Checks dist_{g⊠h}((x1,y1),(x2,y2)) == max(dist_g(x1,x2), dist_h(y1,y2))
/// over all vertex pairs when there are at most max_pairs of them, otherwise
/// over an evenly strided subset of source rows. Factors must be connected.
bool product_distance_check(const UndirectedGraph& g, const UndirectedGraph& h,
                            long long max_pairs = 1 << 20);

std::string product_vertex_label(ProductVertex v);

}  // namespace boxorient
