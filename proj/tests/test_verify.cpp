#include <doctest.h>

#include <random>

#include "boxorient/cycle_orient.hpp"
#include "boxorient/tree_orient.hpp"
#include "boxorient/verify.hpp"
#include "test_util.hpp"

using namespace boxorient;

TEST_SUITE_BEGIN("metrics-verify");

namespace {

OrientedProduct p2p2_orientation() {
  return orient_tree_product(root_tree(path_graph(2), 0),
                             root_tree(path_graph(2), 0));
}

}  // namespace

TEST_CASE("directed diameter of a directed 4-cycle") {
  Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  DiameterReport report = directed_diameter(d);
  CHECK(report.diameter == 3);
  CHECK(report.strongly_connected);
  CHECK(report.witness == std::pair(0, 3));  // least maximizing ordered pair
}

TEST_CASE("directed diameter of the oriented P2 x P2") {
  DiameterReport report = directed_diameter(p2p2_orientation().digraph());
  CHECK(report.diameter == 3);
}

TEST_CASE("directed diameter reports unreachable pairs") {
  Digraph d(2, {{0, 1}});
  DiameterReport report = directed_diameter(d);
  CHECK(report.diameter == kUnreachable);
  CHECK_FALSE(report.strongly_connected);
  CHECK(report.witness == std::pair(1, 0));
}

TEST_CASE("strong connectivity decisions") {
  CHECK(strongly_connected(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK_FALSE(strongly_connected(Digraph(2, {{0, 1}})));
  CHECK(strongly_connected(orient_cycle_product(6, 4).digraph()));
}

TEST_CASE("lemma sweep finds nothing on rule-built products") {
  SUBCASE("P2 x P2 spot distance") {
    OrientedProduct oriented = p2p2_orientation();
    auto dist = bfs_distances(oriented.digraph(),
                              oriented.product().linear({0, 0}));
    CHECK(dist[oriented.product().linear({1, 1})] == 2);
    CHECK(check_local_lemmas(oriented).empty());
  }
  SUBCASE("P5 x P5 full sweep") {
    OrientedProduct oriented = orient_tree_product(
        root_tree(path_graph(5), 2), root_tree(path_graph(5), 2));
    CHECK(check_local_lemmas(oriented).empty());
  }
  SUBCASE("random trees, random roots") {
    std::mt19937 rng(123);
    for (int round = 0; round < 10; ++round) {
      int n1 = std::uniform_int_distribution<int>(2, 14)(rng);
      int n2 = std::uniform_int_distribution<int>(2, 14)(rng);
      RootedTree t1 =
          root_tree(testutil::random_tree(rng, n1),
                    std::uniform_int_distribution<int>(0, n1 - 1)(rng));
      RootedTree t2 =
          root_tree(testutil::random_tree(rng, n2),
                    std::uniform_int_distribution<int>(0, n2 - 1)(rng));
      CHECK(check_local_lemmas(orient_tree_product(t1, t2)).empty());
    }
  }
}

TEST_CASE("lemma sweep requires tree factors") {
  CHECK_THROWS_AS(check_local_lemmas(orient_cycle_product(4, 4)), Error);
}

TEST_CASE("a corrupted orientation trips the checkers") {
  OrientedProduct oriented = orient_tree_product(
      root_tree(path_graph(5), 2), root_tree(path_graph(5), 2));
  int tripped = 0;
  for (int i = 0; i < oriented.product().edge_count(); ++i) {
    OrientedProduct corrupted = oriented.with_flipped_edge(i);
    if (!strongly_connected(corrupted.digraph()) ||
        !check_local_lemmas(corrupted).empty()) {
      ++tripped;
    }
  }
  MESSAGE("single-arc flips detected: ", tripped, " of ",
          oriented.product().edge_count());
  CHECK(tripped > 0);
  // Frozen canary: flipping the layer arc on edge 0 is always caught.
  OrientedProduct corrupted = oriented.with_flipped_edge(0);
  CHECK((!strongly_connected(corrupted.digraph()) ||
         !check_local_lemmas(corrupted).empty()));
}

TEST_CASE("certify_tree_bound on the named instances") {
  SUBCASE("P9 x P8") {
    RootedTree t1 = root_tree(path_graph(9), 4);
    RootedTree t2 = root_tree(path_graph(8), 3);
    DiameterReport report =
        certify_tree_bound(orient_tree_product(t1, t2), t1, t2);
    CHECK(report.bound == 23);
    CHECK(report.bound_kind == BoundKind::TreeTheorem);
    CHECK(report.slack >= 0);
  }
  SUBCASE("star K1,5 x P4") {
    RootedTree t1 = root_tree(star_graph(5), 0);   // rooted at the hub
    RootedTree t2 = root_tree(path_graph(4), 0);   // rooted at an end
    DiameterReport report =
        certify_tree_bound(orient_tree_product(t1, t2), t1, t2);
    CHECK(report.bound == 18);  // max(2, 3) + 15
    CHECK(report.slack >= 0);
    MESSAGE("K1,5 x P4 measured diameter: ", report.diameter);
  }
  SUBCASE("P2 x P2") {
    RootedTree t1 = root_tree(path_graph(2), 0);
    RootedTree t2 = root_tree(path_graph(2), 0);
    DiameterReport report =
        certify_tree_bound(orient_tree_product(t1, t2), t1, t2);
    CHECK(report.bound == 16);
    CHECK(report.diameter == 3);
    CHECK(report.slack == 13);
  }
}

TEST_CASE("certify_cycle_bound") {
  DiameterReport report = certify_cycle_bound(orient_cycle_product(6, 4));
  CHECK(report.bound == 4);
  CHECK(report.bound_kind == BoundKind::CycleProposition);
  CHECK(report.diameter == 4);
  CHECK(report.slack == 0);
  CHECK_THROWS_AS(certify_cycle_bound(p2p2_orientation()), Error);
}

TEST_CASE("general_orient on C6 x C6") {
  auto [oriented, report] = general_orient(cycle_graph(6), cycle_graph(6));
  CHECK(report.bound == 21);  // 2*3 + 15
  CHECK(report.bound_kind == BoundKind::Corollary);
  CHECK(report.strongly_connected);
  CHECK(report.diameter <= 21);
  CHECK(oriented.has_residual());  // C6 is not its own shortest path tree
}

TEST_CASE("general_orient on Petersen x K3") {
  auto [oriented, report] = general_orient(testutil::petersen(),
                                           complete_graph(3));
  CHECK(report.bound == 19);  // 2 * max(2, 1) + 15
  CHECK(report.strongly_connected);
  CHECK(structural_check(oriented).empty());
}

TEST_CASE("general_orient on P2 x P2 reduces to the tree case") {
  auto [oriented, report] = general_orient(path_graph(2), path_graph(2));
  CHECK_FALSE(oriented.has_residual());
  OrientedProduct tree_version = p2p2_orientation();
  for (int i = 0; i < oriented.product().edge_count(); ++i) {
    CHECK(oriented.edge_arc(i) == tree_version.edge_arc(i));
    CHECK(oriented.edge_rule(i) == tree_version.edge_rule(i));
  }
  CHECK(report.diameter == 3);
}

TEST_CASE("general_orient rejects bad factors") {
  CHECK_THROWS_AS(general_orient(UndirectedGraph(1, {}), path_graph(2)),
                  Error);
  CHECK_THROWS_AS(general_orient(UndirectedGraph(3, {{0, 1}}), path_graph(2)),
                  Error);
}

TEST_CASE("sandwich property on oracle-sized instances") {
  // undirected diameter <= diam_min <= rule-built diameter <= paper bound,
  // checked in the oracle suite where diam_min fixtures live.
  auto [oriented, report] = general_orient(path_graph(2), path_graph(3));
  int undirected =
      eccentricity_profile(oriented.product().skeleton()).diameter;
  CHECK(undirected <= report.diameter);
  CHECK(report.diameter <= report.bound);
}

TEST_CASE("chvatal_thomassen_bound") {
  CHECK(chvatal_thomassen_bound(complete_graph(4)) == 4);    // r = 1
  CHECK(chvatal_thomassen_bound(cycle_graph(4)) == 12);      // r = 2
  CHECK(chvatal_thomassen_bound(testutil::petersen()) == 12);
  CHECK_THROWS_AS(chvatal_thomassen_bound(path_graph(2)), Error);
  try {
    chvatal_thomassen_bound(path_graph(2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBridgeless);
  }
}

TEST_CASE("structural_check passes on rule-built orientations") {
  CHECK(structural_check(p2p2_orientation()).empty());
  CHECK(structural_check(orient_cycle_product(6, 4)).empty());
  std::mt19937 rng(55);
  RootedTree t1 = root_tree(testutil::random_tree(rng, 9), 4);
  RootedTree t2 = root_tree(testutil::random_tree(rng, 7), 1);
  CHECK(structural_check(orient_tree_product(t1, t2)).empty());
}

TEST_CASE("corollary bound holds on a small regression set") {
  std::mt19937 rng(818);
  std::vector<UndirectedGraph> pool = {cycle_graph(5), cycle_graph(6),
                                       complete_graph(4), testutil::petersen()};
  for (int i = 0; i < 4; ++i) {
    pool.push_back(testutil::random_bridgeless(
        rng, std::uniform_int_distribution<int>(4, 9)(rng), 2));
  }
  for (size_t i = 0; i < pool.size(); ++i) {
    auto [oriented, report] =
        general_orient(pool[i], pool[(i + 1) % pool.size()]);
    CHECK(report.strongly_connected);
    CHECK(report.slack >= 0);
  }
}

TEST_SUITE_END();
