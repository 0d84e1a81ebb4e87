#include <doctest.h>

#include <random>

#include "boxorient/graph.hpp"
#include "test_util.hpp"

using namespace boxorient;

TEST_SUITE_BEGIN("graph-core");

TEST_CASE("bfs distances on P3") {
  UndirectedGraph g = path_graph(3);
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("bfs distances on a directed 4-cycle") {
  Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(bfs_distances(d, 0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("bfs propagates unreachability") {
  Digraph d(3, {{0, 1}});
  CHECK(bfs_distances(d, 2) ==
        std::vector<int>{kUnreachable, kUnreachable, 0});
}

TEST_CASE("bfs rejects out-of-range sources") {
  UndirectedGraph g = path_graph(3);
  CHECK_THROWS_AS(bfs_distances(g, 3), Error);
  try {
    bfs_distances(g, -1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidVertex);
  }
}

TEST_CASE("eccentricity profile of P5") {
  EccentricityProfile p = eccentricity_profile(path_graph(5));
  CHECK(p.radius == 2);
  CHECK(p.diameter == 4);
  CHECK(p.centers == std::vector<int>{2});
}

TEST_CASE("eccentricity profile of C6") {
  EccentricityProfile p = eccentricity_profile(cycle_graph(6));
  CHECK(p.radius == 3);
  CHECK(p.diameter == 3);
  CHECK(p.centers == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("eccentricity profile of a directed 4-cycle") {
  Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(eccentricity_profile(d).diameter == 3);
}

TEST_CASE("bipartition of P3 and C6") {
  auto side = bipartition(path_graph(3), 0);
  CHECK(side == std::vector<Side>{Side::A, Side::B, Side::A});
  side = bipartition(cycle_graph(6), 0);
  CHECK(side == std::vector<Side>{Side::A, Side::B, Side::A, Side::B, Side::A,
                                  Side::B});
}

TEST_CASE("bipartition rejects odd cycles with a witness") {
  UndirectedGraph triangle = cycle_graph(3);
  for (int anchor = 0; anchor < 3; ++anchor) {
    try {
      bipartition(triangle, anchor);
      FAIL("expected NotBipartite");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotBipartite);
      CHECK(e.detail().size() % 2 == 1);  // odd cycle
      // Witness really is a closed walk in the graph.
      const auto& cycle = e.detail();
      for (size_t i = 0; i < cycle.size(); ++i) {
        CHECK(triangle.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
      }
    }
  }
}

TEST_CASE("bipartition rejects disconnected input") {
  UndirectedGraph g(4, {{0, 1}});
  CHECK_THROWS_AS(bipartition(g, 0), Error);
}

TEST_CASE("bipartition side flip property") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    UndirectedGraph tree = testutil::random_tree(rng, 12);
    auto side_a = bipartition(tree, 0);
    for (int b = 0; b < 12; ++b) {
      auto side_b = bipartition(tree, b);
      for (int v = 0; v < 12; ++v) {
        if (side_a[b] == Side::A) {
          CHECK(side_b[v] == side_a[v]);
        } else {
          CHECK(side_b[v] == opposite(side_a[v]));
        }
      }
    }
  }
}

TEST_CASE("shortest path tree of a tree is the tree itself") {
  std::mt19937 rng(11);
  UndirectedGraph tree = testutil::random_tree(rng, 9);
  for (int root = 0; root < 9; ++root) {
    RootedTree rooted = shortest_path_tree(tree, root);
    CHECK(rooted.tree.edges() == tree.edges());
    CHECK(rooted.root == root);
  }
}

TEST_CASE("shortest path tree depths equal BFS distances") {
  RootedTree rooted = shortest_path_tree(cycle_graph(6), 0);
  CHECK(rooted.depth[3] == 3);
  std::mt19937 rng(3);
  UndirectedGraph g = testutil::random_bridgeless(rng, 10, 5);
  for (int root = 0; root < 10; ++root) {
    RootedTree t = shortest_path_tree(g, root);
    std::vector<int> dist = bfs_distances(g, root);
    for (int v = 0; v < 10; ++v) {
      CHECK(t.depth[v] == dist[v]);
      CHECK(t.side[v] == (dist[v] % 2 == 0 ? Side::A : Side::B));
    }
  }
}

TEST_CASE("shortest path tree of the Petersen graph") {
  UndirectedGraph g = testutil::petersen();
  RootedTree rooted = shortest_path_tree(g, 0);
  auto oracle = testutil::floyd_warshall(g);
  for (int v = 0; v < 10; ++v) {
    CHECK(rooted.depth[v] == oracle[0][v]);
    CHECK(rooted.depth[v] <= 2);  // radius of Petersen is 2
  }
}

TEST_CASE("shortest path tree rejects disconnected input") {
  UndirectedGraph g(3, {{0, 1}});
  CHECK_THROWS_AS(shortest_path_tree(g, 0), Error);
}

TEST_CASE("root_tree rejects non-trees") {
  CHECK_THROWS_AS(root_tree(cycle_graph(4), 0), Error);
}

TEST_CASE("bridges: named examples") {
  auto bridge = find_bridge(path_graph(2));
  REQUIRE(bridge.has_value());
  CHECK(*bridge == Edge{0, 1});
  CHECK_FALSE(find_bridge(cycle_graph(4)).has_value());
  CHECK_FALSE(find_bridge(complete_graph(4)).has_value());
}

namespace {

bool naive_has_bridge(const UndirectedGraph& g) {
  for (auto [u, v] : g.edges()) {
    std::vector<Edge> remaining;
    for (auto e : g.edges()) {
      if (e != Edge{u, v}) remaining.push_back(e);
    }
    UndirectedGraph cut(g.vertex_count(), remaining);
    for (int d : bfs_distances(cut, 0)) {
      if (d == kUnreachable) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("bridge detection agrees with the remove-one-edge oracle") {
  // Exhaustive over all connected labeled graphs up to 6 vertices, sampled
  // for 7 and 8.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : testutil::all_connected_graphs(n)) {
      CHECK(has_bridge(g) == naive_has_bridge(g));
    }
  }
  std::mt19937 rng(99);
  for (int n : {7, 8}) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int tested = 0;
    while (tested < 1500) {
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng) < 0.35) edges.emplace_back(u, v);
        }
      }
      UndirectedGraph g(n, edges);
      bool connected = true;
      for (int d : bfs_distances(g, 0)) {
        if (d == kUnreachable) connected = false;
      }
      if (!connected) continue;
      ++tested;
      CHECK(has_bridge(g) == naive_has_bridge(g));
    }
  }
}

TEST_CASE("bfs symmetry and triangle inequality on random graphs") {
  std::mt19937 rng(21);
  for (int round = 0; round < 10; ++round) {
    UndirectedGraph g = testutil::random_bridgeless(rng, 12, 6);
    std::vector<std::vector<int>> dist(12);
    for (int v = 0; v < 12; ++v) dist[v] = bfs_distances(g, v);
    for (int u = 0; u < 12; ++u) {
      for (int v = 0; v < 12; ++v) {
        CHECK(dist[u][v] == dist[v][u]);
        for (int w = 0; w < 12; ++w) {
          CHECK(dist[u][v] <= dist[u][w] + dist[w][v]);
        }
      }
    }
  }
}

TEST_CASE("default center") {
  CHECK(default_center(path_graph(5)) == 2);
  CHECK(default_center(path_graph(4)) == 1);  // smallest id of the two centers
  CHECK(default_center(cycle_graph(6)) == 0);
}

TEST_CASE("graph constructor validation") {
  CHECK_THROWS_AS(UndirectedGraph(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(UndirectedGraph(2, {{1, 1}}), Error);
  CHECK_THROWS_AS(UndirectedGraph(3, {{0, 1}, {1, 0}}), Error);
}

TEST_SUITE_END();
