#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "boxorient/error.hpp"

namespace boxorient {

/// Sentinel for "no path". Propagated through eccentricities and diameters,
/// never used in arithmetic.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex ids 0..n-1, sorted adjacency
/// lists, immutable after construction.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// Directed graph with sorted out/in adjacency, immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, const std::vector<Edge>& arcs);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  int arc_count() const { return arc_count_; }
  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  bool has_arc(int u, int v) const;
  std::vector<Edge> arcs() const;
  Digraph reversed() const;

 private:
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  int arc_count_ = 0;
};

enum class Side : unsigned char { A, B };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

/// A tree with a chosen root, BFS parents/depths and the bipartition side of
/// each vertex. side(root) = A and side alternates along edges, so
/// side(v) = A exactly when depth(v) is even. Parent arcs read parent->child
/// form the orientation of the tree away from the root.
struct RootedTree {
  UndirectedGraph tree;
  int root = 0;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<Side> side;

  int vertex_count() const { return tree.vertex_count(); }
  bool is_leaf(int v) const { return tree.degree(v) == 1; }
};

struct EccentricityProfile {
  std::vector<int> eccentricity;  // kUnreachable where some pair is unreachable
  int radius = 0;
  int diameter = 0;
  std::vector<int> centers;  // argmin eccentricity, ascending
};

std::vector<int> bfs_distances(const UndirectedGraph& g, int source);
std::vector<int> bfs_distances(const Digraph& d, int source);

EccentricityProfile eccentricity_profile(const UndirectedGraph& g);
EccentricityProfile eccentricity_profile(const Digraph& d);

/// Two-colors a connected graph, anchor on side A. Throws NotBipartite with
/// the offending odd cycle in detail(), or NotConnected.
std::vector<Side> bipartition(const UndirectedGraph& g, int anchor);

/// BFS tree of a connected graph: depth(x) equals the graph distance from the
/// root for every x. Neighbors are explored in ascending id, so parents are
/// deterministic.
RootedTree shortest_path_tree(const UndirectedGraph& g, int root);

/// Rooted form of a graph that must already be a tree (throws NotATree).
RootedTree root_tree(const UndirectedGraph& tree, int root);

/// First bridge in normalized lexicographic edge order, or nullopt.
/// Requires a connected graph.
std::optional<Edge> find_bridge(const UndirectedGraph& g);
bool has_bridge(const UndirectedGraph& g);

/// Smallest-id center, the default root everywhere. Requires connectivity.
int default_center(const UndirectedGraph& g);

UndirectedGraph path_graph(int n);
UndirectedGraph cycle_graph(int n);
UndirectedGraph complete_graph(int n);
UndirectedGraph star_graph(int leaves);

}  // namespace boxorient
