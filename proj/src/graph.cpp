#include "boxorient/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace boxorient {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void check_endpoint_range(int u, int v, int n) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw Error(ErrorCode::InvalidEdge,
                "edge " + edge_str(u, v) + " out of range for " +
                    std::to_string(n) + " vertices");
  }
  if (u == v) {
    throw Error(ErrorCode::InvalidEdge, "self-loop at " + std::to_string(u));
  }
}

std::vector<int> bfs_impl(const std::vector<std::vector<int>>& adj, int n,
                          int source) {
  if (source < 0 || source >= n) {
    throw Error(ErrorCode::InvalidVertex,
                "BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(n, kUnreachable);
  dist[source] = 0;
  std::queue<int> queue;
  queue.push(source);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : adj[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

EccentricityProfile profile_impl(const std::vector<std::vector<int>>& adj,
                                 int n) {
  EccentricityProfile profile;
  profile.eccentricity.resize(n, 0);
  for (int s = 0; s < n; ++s) {
    int ecc = 0;
    for (int d : bfs_impl(adj, n, s)) {
      if (d == kUnreachable) {
        ecc = kUnreachable;
        break;
      }
      ecc = std::max(ecc, d);
    }
    profile.eccentricity[s] = ecc;
  }
  if (n == 0) return profile;
  profile.radius = *std::min_element(profile.eccentricity.begin(),
                                     profile.eccentricity.end());
  profile.diameter = *std::max_element(profile.eccentricity.begin(),
                                       profile.eccentricity.end());
  for (int v = 0; v < n; ++v) {
    if (profile.eccentricity[v] == profile.radius) profile.centers.push_back(v);
  }
  return profile;
}

}  // namespace

UndirectedGraph::UndirectedGraph(int vertex_count,
                                 const std::vector<Edge>& edges) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidVertex, "negative vertex count");
  }
  adj_.resize(vertex_count);
  for (auto [u, v] : edges) {
    check_endpoint_range(u, v, vertex_count);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge in input");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

const std::vector<int>& UndirectedGraph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range");
  }
  return adj_[v];
}

bool UndirectedGraph::has_edge(int u, int v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

Digraph::Digraph(int vertex_count, const std::vector<Edge>& arcs) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidVertex, "negative vertex count");
  }
  out_.resize(vertex_count);
  in_.resize(vertex_count);
  for (auto [u, v] : arcs) {
    check_endpoint_range(u, v, vertex_count);
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::DuplicateEdge, "duplicate arc in input");
    }
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
  arc_count_ = static_cast<int>(arcs.size());
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range");
  }
  return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " out of range");
  }
  return in_[v];
}

bool Digraph::has_arc(int u, int v) const {
  const auto& list = out_neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Digraph::arcs() const {
  std::vector<Edge> result;
  result.reserve(arc_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

Digraph Digraph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(arc_count_);
  for (auto [u, v] : arcs()) rev.emplace_back(v, u);
  return Digraph(vertex_count(), rev);
}

std::vector<int> bfs_distances(const UndirectedGraph& g, int source) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  return bfs_impl(adj, g.vertex_count(), source);
}

std::vector<int> bfs_distances(const Digraph& d, int source) {
  std::vector<std::vector<int>> adj(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) adj[v] = d.out_neighbors(v);
  return bfs_impl(adj, d.vertex_count(), source);
}

EccentricityProfile eccentricity_profile(const UndirectedGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  return profile_impl(adj, g.vertex_count());
}

EccentricityProfile eccentricity_profile(const Digraph& d) {
  std::vector<std::vector<int>> adj(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) adj[v] = d.out_neighbors(v);
  return profile_impl(adj, d.vertex_count());
}

std::vector<Side> bipartition(const UndirectedGraph& g, int anchor) {
  int n = g.vertex_count();
  if (anchor < 0 || anchor >= n) {
    throw Error(ErrorCode::InvalidVertex,
                "anchor " + std::to_string(anchor) + " out of range");
  }
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  color[anchor] = 0;
  std::queue<int> queue;
  queue.push(anchor);
  int seen = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : g.neighbors(u)) {
      if (color[v] == -1) {
        color[v] = 1 - color[u];
        parent[v] = u;
        queue.push(v);
        ++seen;
      } else if (color[v] == color[u]) {
        // Reconstruct the odd cycle through edge (u, v): climb both BFS paths
        // to their first common ancestor.
        std::vector<int> up_u{u};
        for (int x = u; parent[x] != -1; x = parent[x]) up_u.push_back(parent[x]);
        std::vector<int> up_v{v};
        for (int x = v; parent[x] != -1; x = parent[x]) up_v.push_back(parent[x]);
        while (up_u.size() >= 2 && up_v.size() >= 2 &&
               up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
          up_u.pop_back();
          up_v.pop_back();
        }
        std::vector<int> cycle(up_u.begin(), up_u.end());
        for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it) {
          cycle.push_back(*it);
        }
        throw Error(ErrorCode::NotBipartite,
                    "odd cycle through edge " + edge_str(u, v), cycle);
      }
    }
  }
  if (seen != n) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  std::vector<Side> side(n);
  for (int v = 0; v < n; ++v) side[v] = color[v] == 0 ? Side::A : Side::B;
  return side;
}

RootedTree shortest_path_tree(const UndirectedGraph& g, int root) {
  std::vector<int> dist = bfs_distances(g, root);
  int n = g.vertex_count();
  RootedTree result;
  result.root = root;
  result.parent.assign(n, -1);
  result.depth.assign(n, 0);
  result.side.assign(n, Side::A);
  std::vector<Edge> tree_edges;
  tree_edges.reserve(n > 0 ? n - 1 : 0);
  for (int v = 0; v < n; ++v) {
    if (dist[v] == kUnreachable) {
      throw Error(ErrorCode::NotConnected, "graph is not connected");
    }
    result.depth[v] = dist[v];
    result.side[v] = dist[v] % 2 == 0 ? Side::A : Side::B;
    if (v == root) continue;
    // Parent = smallest-id neighbor one level up.
    for (int u : g.neighbors(v)) {
      if (dist[u] == dist[v] - 1) {
        result.parent[v] = u;
        break;
      }
    }
    tree_edges.emplace_back(result.parent[v], v);
  }
  result.tree = UndirectedGraph(n, tree_edges);
  return result;
}

RootedTree root_tree(const UndirectedGraph& tree, int root) {
  if (tree.edge_count() != tree.vertex_count() - 1) {
    throw Error(ErrorCode::NotATree,
                "expected " + std::to_string(tree.vertex_count() - 1) +
                    " edges, got " + std::to_string(tree.edge_count()));
  }
  return shortest_path_tree(tree, root);  // also rejects disconnected input
}

std::optional<Edge> find_bridge(const UndirectedGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  for (int d : bfs_distances(g, 0)) {
    if (d == kUnreachable) {
      throw Error(ErrorCode::NotConnected, "graph is not connected");
    }
  }
  // Iterative lowpoint DFS; collect every bridge, report the least one.
  std::vector<int> entry(n, -1), low(n, 0), parent(n, -1), next_index(n, 0);
  std::vector<Edge> bridges;
  int timer = 0;
  std::vector<int> stack{0};
  entry[0] = low[0] = timer++;
  while (!stack.empty()) {
    int u = stack.back();
    const auto& nbrs = g.neighbors(u);
    if (next_index[u] < static_cast<int>(nbrs.size())) {
      int v = nbrs[next_index[u]++];
      if (v == parent[u]) {
        parent[u] = -2;  // skip the tree edge to the parent exactly once
        continue;
      }
      if (entry[v] == -1) {
        parent[v] = u;
        entry[v] = low[v] = timer++;
        stack.push_back(v);
      } else {
        low[u] = std::min(low[u], entry[v]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back();
        low[p] = std::min(low[p], low[u]);
        if (low[u] > entry[p]) {
          bridges.emplace_back(std::min(p, u), std::max(p, u));
        }
      }
    }
  }
  if (bridges.empty()) return std::nullopt;
  return *std::min_element(bridges.begin(), bridges.end());
}

bool has_bridge(const UndirectedGraph& g) { return find_bridge(g).has_value(); }

int default_center(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) {
    throw Error(ErrorCode::EmptyFactor, "empty graph has no center");
  }
  EccentricityProfile profile = eccentricity_profile(g);
  if (profile.radius == kUnreachable) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  return profile.centers.front();
}

UndirectedGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return UndirectedGraph(n, edges);
}

UndirectedGraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(0, n - 1);
  return UndirectedGraph(n, edges);
}

UndirectedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return UndirectedGraph(n, edges);
}

UndirectedGraph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return UndirectedGraph(leaves + 1, edges);
}

}  // namespace boxorient
