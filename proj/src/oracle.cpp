#include "boxorient/oracle.hpp"

#include <algorithm>
#include <string>

#include "boxorient/verify.hpp"

namespace boxorient {

namespace {

struct Enumerator {
  const std::vector<Edge>& edges;
  int n;
  std::vector<std::vector<int>> out;
  std::vector<int> undecided;  // incident edges not yet oriented
  std::vector<int> out_deg, in_deg;
  std::vector<bool> current;
  OracleResult result;

  explicit Enumerator(const UndirectedGraph& g, const std::vector<Edge>& e)
      : edges(e), n(g.vertex_count()) {
    out.resize(n);
    undecided.resize(n);
    out_deg.assign(n, 0);
    in_deg.assign(n, 0);
    current.assign(edges.size(), false);
    for (int v = 0; v < n; ++v) undecided[v] = g.degree(v);
    result.diam_min = kUnreachable;
  }

  // Diameter of the current complete orientation, kUnreachable if not strong.
  int complete_diameter() {
    int best = 0;
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), kUnreachable);
      dist[s] = 0;
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        int u = queue[head++];
        for (int v : out[u]) {
          if (dist[v] == kUnreachable) {
            dist[v] = dist[u] + 1;
            queue[tail++] = v;
          }
        }
      }
      for (int t = 0; t < n; ++t) {
        if (dist[t] == kUnreachable) return kUnreachable;
        best = std::max(best, dist[t]);
      }
    }
    return best;
  }

  void recurse(size_t index) {
    if (index == edges.size()) {
      result.orientations_tested++;
      int diameter = complete_diameter();
      if (diameter == kUnreachable) return;
      result.strong_count++;
      if (diameter < result.diam_min) {
        result.diam_min = diameter;
        result.witness_orientation = current;
      }
      return;
    }
    auto [u, v] = edges[index];
    for (bool reverse : {false, true}) {
      int tail = reverse ? v : u;
      int head = reverse ? u : v;
      out[tail].push_back(head);
      out_deg[tail]++;
      in_deg[head]++;
      undecided[tail]--;
      undecided[head]--;
      bool dead =
          (undecided[tail] == 0 && (out_deg[tail] == 0 || in_deg[tail] == 0)) ||
          (undecided[head] == 0 && (out_deg[head] == 0 || in_deg[head] == 0));
      if (!dead) {
        current[index] = reverse;
        recurse(index + 1);
      }
      out[tail].pop_back();
      out_deg[tail]--;
      in_deg[head]--;
      undecided[tail]++;
      undecided[head]++;
    }
  }
};

}  // namespace

OracleResult brute_force_diam_min(const UndirectedGraph& g, int max_edges) {
  if (g.edge_count() > max_edges) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(g.edge_count()) + " edges exceed the cap of " +
                    std::to_string(max_edges));
  }
  if (auto bridge = find_bridge(g)) {  // also rejects disconnected input
    throw Error(ErrorCode::NotBridgeless,
                "no strong orientation exists: bridge (" +
                    std::to_string(bridge->first) + ", " +
                    std::to_string(bridge->second) + ")");
  }
  std::vector<Edge> edges = g.edges();
  Enumerator enumerator(g, edges);
  enumerator.recurse(0);
  return enumerator.result;
}

GapReport gap_report(const UndirectedGraph& g, int rule_diameter,
                     int max_edges) {
  OracleResult oracle = brute_force_diam_min(g, max_edges);
  return {oracle.diam_min, rule_diameter - oracle.diam_min};
}

}  // namespace boxorient
