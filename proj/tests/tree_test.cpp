#include <algorithm>

#include "doctest.h"
#include "scancover/error.hpp"
#include "scancover/generators.hpp"
#include "scancover/graph.hpp"
#include "scancover/tree.hpp"
#include "support.hpp"

using namespace scancover;
using scancover::testing::brute_force_optimum;
using scancover::testing::complete_edges;
using scancover::testing::load_corpus;
using scancover::testing::planar;

TEST_CASE("star order visits leaves along the cheapest path") {
  const auto star = load_corpus("star-3dirs-2d.json");
  const auto order = star_order(star, 0);
  CHECK(order.exact);
  CHECK(order.path_cost == doctest::Approx(180.0));
  REQUIRE(order.order.size() == 3);
  // The north edge sits in the middle of the path.
  CHECK(order.order[1] == 1);
  CHECK_THROWS_AS(star_order(load_corpus("path3-1d.json"), 0), Error);
}

TEST_CASE("exact and greedy star orders on an abstract star") {
  const auto star = load_corpus("abstract-star.json");
  const auto exact = star_order(star, 0);
  CHECK(exact.path_cost == doctest::Approx(20.0));
  const auto greedy = star_order(star, 0, 0);
  CHECK_FALSE(greedy.exact);
  CHECK(greedy.path_cost >= exact.path_cost);
}

TEST_CASE("cyclic order closes the path") {
  const auto star = load_corpus("star-3dirs-2d.json");
  const auto cyc = cyclic_order(star, 0);
  CHECK(cyc.cycle_length == doctest::Approx(360.0));
  CHECK(cyc.offsets.front() == 0.0);
}

TEST_CASE("tree approximation on small trees") {
  const auto edge = load_corpus("single-edge-2d.json");
  CHECK(tree_approx(edge).makespan() == 0.0);
  const auto path = load_corpus("path3-1d.json");
  const auto s = tree_approx(path);
  CHECK(s.makespan() == 180.0);
  CHECK(validate_schedule(path, s).valid);
  const auto tree = load_corpus("tree-3d.json");
  const auto t = tree_approx(tree);
  CHECK(validate_schedule(tree, t).valid);
  CHECK(t.makespan() <= 2.0 * brute_force_optimum(tree) + 1e-9);
  CHECK_THROWS_AS(tree_approx(load_corpus("k3-equilateral.json")), Error);
}

TEST_CASE("tree approximation ratio on random trees") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = gen_random(RandomKind::kTree3d, 4 + seed % 4, seed).instance;
    const auto s = tree_approx(inst);
    CHECK(validate_schedule(inst, s).valid);
    CHECK(s.makespan() <= 2.0 * brute_force_optimum(inst) + 1e-6);
  }
}

TEST_CASE("forest decomposition") {
  const auto k4 = planar({{0, 0}, {1, 0}, {0, 1}, {1, 1.5}}, complete_edges(4));
  const auto forests = forest_decompose(k4);
  CHECK(forests.size() <= 6);
  std::vector<int> seen(k4.edge_count(), 0);
  for (const auto& f : forests) {
    CHECK(is_forest(k4.edge_subgraph(f)));
    for (EdgeIndex e : f) ++seen[e];
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));

  std::vector<std::pair<double, double>> pentagon;
  for (int i = 0; i < 5; ++i) pentagon.emplace_back(std::cos(i * 1.25663706), std::sin(i * 1.25663706));
  const auto c5 = planar(pentagon, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(forest_decompose(c5).size() <= 2);
}

TEST_CASE("arboricity approximation") {
  const auto k3 = load_corpus("k3-equilateral.json");
  const auto s = arboricity_approx(k3);
  CHECK(validate_schedule(k3, s).valid);
  CHECK(s.makespan() >= 120.0 - 1e-9);
  const auto gadget = load_corpus("nae-example-formula.json");
  CHECK(validate_schedule(gadget, arboricity_approx(gadget)).valid);
}
