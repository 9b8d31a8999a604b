#include "doctest.h"
#include "scancover/error.hpp"
#include "scancover/generators.hpp"
#include "scancover/io.hpp"
#include "scancover/solve.hpp"
#include "scancover/svg.hpp"
#include "support.hpp"

using namespace scancover;
using scancover::testing::load_corpus;

namespace {

SolveResult run(const Instance& inst, Algorithm algo) {
  SolveOptions options;
  options.algorithm = algo;
  return solve(inst, options);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("algorithm names round trip") {
  for (auto a : {Algorithm::kAuto, Algorithm::kBipRotation, Algorithm::kSector, Algorithm::kKColor,
                 Algorithm::kCompleteSplit, Algorithm::kBits1d, Algorithm::kTree,
                 Algorithm::kArboricity, Algorithm::kOracle, Algorithm::kOracleDiscrete}) {
    CHECK(parse_algorithm(algorithm_name(a)) == a);
  }
  CHECK_THROWS_AS(parse_algorithm("fastest"), Error);
}

TEST_CASE("automatic dispatch") {
  CHECK(resolve_auto(load_corpus("k4-1d.json")) == Algorithm::kBits1d);
  CHECK(resolve_auto(load_corpus("square-k22-2d.json")) == Algorithm::kSector);
  CHECK(resolve_auto(load_corpus("hexagon-k6-2d.json")) == Algorithm::kCompleteSplit);
  CHECK(resolve_auto(load_corpus("tree-3d.json")) == Algorithm::kTree);
  CHECK(resolve_auto(load_corpus("abstract-star.json")) == Algorithm::kTree);
  CHECK(resolve_auto(load_corpus("nae-example-formula.json")) == Algorithm::kArboricity);
  const auto kite = scancover::testing::planar({{0, 0}, {1, 0}, {0, 1}, {1, 1.5}},
                                               {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(resolve_auto(kite) == Algorithm::kKColor);
}

TEST_CASE("solver results") {
  const auto k3 = load_corpus("k3-equilateral.json");
  const auto oracle = run(k3, Algorithm::kOracle);
  CHECK(oracle.schedule.makespan() == doctest::Approx(120.0));
  CHECK(oracle.schedule.algorithm_tag == "oracle");
  REQUIRE(oracle.trajectory.has_value());
  CHECK(validate_trajectory(k3, oracle.schedule, *oracle.trajectory).valid);

  const auto k4 = load_corpus("k4-1d.json");
  const auto bits = run(k4, Algorithm::kBits1d);
  CHECK(bits.schedule.makespan() == 180.0);
  REQUIRE(bits.bits.has_value());
  CHECK(bits.bits->steps == 2);

  const auto star = load_corpus("orthant-star-4.json");
  CHECK(run(star, Algorithm::kAuto).schedule.makespan() == doctest::Approx(270.0));
}

TEST_CASE("inapplicable algorithms are refused") {
  CHECK_THROWS_AS(run(load_corpus("k3-equilateral.json"), Algorithm::kBits1d), Error);
  CHECK_THROWS_AS(run(load_corpus("k3-equilateral.json"), Algorithm::kSector), Error);
  CHECK_THROWS_AS(run(load_corpus("abstract-star.json"), Algorithm::kCompleteSplit), Error);
  CHECK_THROWS_AS(run(load_corpus("hexagon-k6-2d.json"), Algorithm::kTree), Error);
}

TEST_CASE("every applicable algorithm validates on the corpus") {
  for (const auto& name : scancover::testing::corpus_files()) {
    const auto inst = load_corpus(name);
    for (auto a : {Algorithm::kAuto, Algorithm::kBipRotation, Algorithm::kSector,
                   Algorithm::kKColor, Algorithm::kCompleteSplit, Algorithm::kBits1d,
                   Algorithm::kTree, Algorithm::kArboricity, Algorithm::kOracle}) {
      SolveResult r;
      try {
        r = run(inst, a);
      } catch (const Error&) {
        continue;
      }
      INFO(name << " " << algorithm_name(a));
      CHECK(validate_schedule(inst, r.schedule).valid);
      if (r.trajectory) CHECK(validate_trajectory(inst, r.schedule, *r.trajectory).valid);
    }
  }
}

TEST_CASE("svg export") {
  const auto k3 = load_corpus("k3-equilateral.json");
  const auto r = run(k3, Algorithm::kOracle);
  const std::string svg = render_svg(k3, r.schedule, r.trajectory);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "class=\"edge\"") == 3);
  CHECK(count(svg, "class=\"row\"") == 3);
  CHECK(count(svg, "class=\"vertex\"") == 3);
  const auto edge = load_corpus("single-edge-2d.json");
  const std::string one = render_svg(edge, run(edge, Algorithm::kAuto).schedule);
  CHECK(count(one, "class=\"edge\"") == 1);
  CHECK(count(one, "class=\"row\"") == 2);
  const auto star = load_corpus("abstract-star.json");
  CHECK(count(render_svg(star, run(star, Algorithm::kAuto).schedule), "class=\"edge\"") == 3);
}
