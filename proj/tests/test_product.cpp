#include <doctest.h>

#include <random>

#include "boxorient/product.hpp"
#include "test_util.hpp"

using namespace boxorient;

TEST_SUITE_BEGIN("product");

TEST_CASE("P2 x P2 is K4") {
  StrongProduct p(path_graph(2), path_graph(2));
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 6);
  CHECK(p.count(EdgeKind::CartesianG) == 2);
  CHECK(p.count(EdgeKind::CartesianH) == 2);
  CHECK(p.count(EdgeKind::Direct) == 2);
  CHECK(p.skeleton().edges() == complete_graph(4).edges());
}

TEST_CASE("P2 x P3 edge counts") {
  StrongProduct p(path_graph(2), path_graph(3));
  CHECK(p.vertex_count() == 6);
  CHECK(p.edge_count() == 11);
  CHECK(p.count(EdgeKind::CartesianG) == 3);  // |V_H| * |E_G|
  CHECK(p.count(EdgeKind::CartesianH) == 4);  // |V_G| * |E_H|
  CHECK(p.count(EdgeKind::Direct) == 4);
}

TEST_CASE("C6 x C4 edge counts") {
  StrongProduct p(cycle_graph(6), cycle_graph(4));
  CHECK(p.vertex_count() == 24);
  CHECK(p.edge_count() == 96);
  CHECK(p.count(EdgeKind::CartesianG) == 24);
  CHECK(p.count(EdgeKind::CartesianH) == 24);
  CHECK(p.count(EdgeKind::Direct) == 48);
}

TEST_CASE("empty factors are rejected") {
  CHECK_THROWS_AS(StrongProduct(UndirectedGraph(0, {}), path_graph(2)), Error);
}

TEST_CASE("linearization is a row-major bijection") {
  StrongProduct p(path_graph(3), path_graph(4));
  CHECK(p.linear({1, 2}) == 6);
  for (int i = 0; i < p.vertex_count(); ++i) {
    CHECK(p.linear(p.vertex(i)) == i);
  }
}

TEST_CASE("edges are canonical and sorted") {
  StrongProduct p(cycle_graph(4), path_graph(3));
  int previous_a = -1, previous_b = -1;
  for (const auto& e : p.edges()) {
    int a = p.linear(e.a), b = p.linear(e.b);
    CHECK(a < b);
    CHECK(std::pair(previous_a, previous_b) < std::pair(a, b));
    previous_a = a;
    previous_b = b;
    CHECK(p.edge_index(a, b) >= 0);
    CHECK(p.edge_index(b, a) == p.edge_index(a, b));
  }
  CHECK(p.edge_index(0, p.vertex_count() - 1) == -1);
}

TEST_CASE("adjacency matches the three-clause definition") {
  std::mt19937 rng(5);
  UndirectedGraph g = testutil::random_bridgeless(rng, 5, 2);
  UndirectedGraph h = testutil::random_tree(rng, 4);
  StrongProduct p(g, h);
  for (int i = 0; i < p.vertex_count(); ++i) {
    for (int j = 0; j < p.vertex_count(); ++j) {
      ProductVertex u = p.vertex(i), v = p.vertex(j);
      bool cart_h = u.x == v.x && h.has_edge(u.y, v.y);
      bool cart_g = g.has_edge(u.x, v.x) && u.y == v.y;
      bool direct = g.has_edge(u.x, v.x) && h.has_edge(u.y, v.y);
      CHECK(p.skeleton().has_edge(i, j) == (cart_h || cart_g || direct));
    }
  }
}

TEST_CASE("product distance formula") {
  SUBCASE("P3 x P3 spot value") {
    StrongProduct p(path_graph(3), path_graph(3));
    auto dist = bfs_distances(p.skeleton(), p.linear({0, 0}));
    CHECK(dist[p.linear({2, 1})] == 2);
    CHECK(dist[p.linear({0, 0})] == 0);
  }
  SUBCASE("C6 x C4 exhaustive") {
    CHECK(product_distance_check(cycle_graph(6), cycle_graph(4)));
  }
  SUBCASE("random factors") {
    std::mt19937 rng(17);
    for (int round = 0; round < 5; ++round) {
      UndirectedGraph g = testutil::random_bridgeless(rng, 6, 3);
      UndirectedGraph h = testutil::random_tree(rng, 5);
      CHECK(product_distance_check(g, h));
    }
  }
}

TEST_CASE("product of connected factors is connected with max metrics") {
  StrongProduct p(path_graph(5), cycle_graph(6));
  EccentricityProfile profile = eccentricity_profile(p.skeleton());
  CHECK(profile.radius == 3);    // max(rad P5, rad C6) = max(2, 3)
  CHECK(profile.diameter == 4);  // max(diam P5, diam C6) = max(4, 3)
}

TEST_SUITE_END();
