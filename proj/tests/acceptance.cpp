// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values come from the exhaustive oracles or from
// independent recomputation inside this file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scancover/bounds.hpp"
#include "scancover/error.hpp"
#include "scancover/formula.hpp"
#include "scancover/generators.hpp"
#include "scancover/graph.hpp"
#include "scancover/io.hpp"
#include "scancover/line.hpp"
#include "scancover/oracle.hpp"
#include "scancover/planar.hpp"
#include "scancover/solve.hpp"
#include "scancover/tree.hpp"
#include "support.hpp"

namespace {

using namespace scancover;
using scancover::testing::corpus_files;
using scancover::testing::load_corpus;

constexpr double kBoundTolerance = 1e-6;
constexpr double kSoundnessTolerance = 1e-9;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

using Check = std::function<void(Outcome&)>;

SolveResult run(const Instance& inst, Algorithm algo) {
  SolveOptions options;
  options.algorithm = algo;
  return solve(inst, options);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string label(RandomKind kind, int n, std::uint64_t seed) {
  return std::string(random_kind_name(kind)) + " n=" + std::to_string(n) +
         " seed=" + std::to_string(seed);
}

Formula random_formula(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> clauses(1, 4);
  std::uniform_int_distribution<int> var(1, 4);
  std::bernoulli_distribution neg(0.5);
  Formula f(clauses(rng));
  for (Clause& c : f) {
    for (Literal& l : c) l = {"x" + std::to_string(var(rng)), neg(rng)};
  }
  return f;
}

// Sides of a random bipartite instance pushed apart horizontally so a
// separating line exists.
Instance separated_copy(const Instance& inst, const Partition& part) {
  std::vector<Vertex> vertices = inst.vertices();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (part[v] == 1) vertices[v].coords[0] += 1.5;
  }
  return Instance::geometric(inst.dimension(), std::move(vertices), inst.edges());
}

int quadrant(const Vec3& heading) {
  return std::min(3, static_cast<int>(std::floor(heading_degrees(heading) / 90.0)));
}

// --- 1 ---------------------------------------------------------------------

void validity_suite(Outcome& out) {
  const std::map<RandomKind, std::vector<Algorithm>> plan{
      {RandomKind::kBipartite1d, {Algorithm::kBits1d, Algorithm::kArboricity}},
      {RandomKind::kComplete1d, {Algorithm::kBits1d, Algorithm::kArboricity}},
      {RandomKind::kGeneral1d, {Algorithm::kBits1d, Algorithm::kArboricity}},
      {RandomKind::kBipartite2d,
       {Algorithm::kBipRotation, Algorithm::kSector, Algorithm::kKColor, Algorithm::kArboricity}},
      {RandomKind::kComplete2d,
       {Algorithm::kCompleteSplit, Algorithm::kKColor, Algorithm::kArboricity}},
      {RandomKind::kSparse2d, {Algorithm::kKColor, Algorithm::kArboricity}},
      {RandomKind::kTree3d, {Algorithm::kTree, Algorithm::kArboricity}},
  };
  int instances = 0, schedules = 0, trajectories = 0;
  auto check = [&](const Instance& inst, Algorithm a, const std::string& what) {
    try {
      const auto r = run(inst, a);
      ++schedules;
      if (!validate_schedule(inst, r.schedule).valid) out.fail(what + " schedule invalid");
      if (r.trajectory) {
        ++trajectories;
        if (!validate_trajectory(inst, r.schedule, *r.trajectory).valid) {
          out.fail(what + " trajectory invalid");
        }
      }
    } catch (const std::exception& e) {
      out.fail(what + " threw: " + e.what());
    }
  };
  for (const auto& [kind, algos] : plan) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const int n = 3 + static_cast<int>(seed % 16);
      const auto inst = gen_random(kind, n, seed).instance;
      ++instances;
      for (Algorithm a : algos) {
        check(inst, a, label(kind, n, seed) + " " + std::string(algorithm_name(a)));
      }
    }
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_formula(rng);
    const auto inst = gen_nae_gadget(f, 30.0);
    ++instances;
    for (Algorithm a : {Algorithm::kAuto, Algorithm::kArboricity}) {
      check(inst, a, "gadget " + format_formula(f) + " " + std::string(algorithm_name(a)));
    }
  }
  out.detail << instances << " instances, " << schedules << " schedules, " << trajectories
             << " trajectories";
}

// --- 2 ---------------------------------------------------------------------

void line_optimality(Outcome& out) {
  std::vector<std::pair<std::string, Instance>> cases;
  for (const auto& name : corpus_files()) {
    auto inst = load_corpus(name);
    if (inst.dimension() == Dimension::kOne && inst.vertex_count() <= 10) {
      cases.emplace_back(name, std::move(inst));
    }
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    for (auto kind : {RandomKind::kBipartite1d, RandomKind::kComplete1d}) {
      cases.emplace_back(label(kind, n, seed), gen_random(kind, n, seed).instance);
    }
  }
  int compared = 0;
  for (const auto& [name, inst] : cases) {
    std::optional<BitSchedule> bs;
    if (is_complete(inst)) {
      bs = solve_complete_1d(inst);
    } else if (bipartition(inst)) {
      bs = solve_bipartite_1d(inst);
    }
    if (!bs) continue;
    ++compared;
    const int exact = exact_1d(inst).steps;
    if (bs->steps != exact || !covers(inst, *bs)) {
      out.fail(name + ": " + std::to_string(bs->steps) + " steps, exact " + std::to_string(exact));
    }
  }
  const auto k8 = load_corpus("k8-1d.json");
  const auto k8_bits = solve_complete_1d(k8);
  const double k8_time = bitschedule_to_schedule(k8_bits, k8).makespan();
  if (k8_bits.steps != 3 || k8_time != 360.0) out.fail("K8 gives " + fmt(k8_time));
  out.detail << compared << " instances match exact step counts, K8 N=" << k8_bits.steps
             << " makespan " << fmt(k8_time);
}

// --- 3 ---------------------------------------------------------------------

void color_vectors(Outcome& out) {
  int worst_slack = 100;
  for (int c = 2; c <= 64; ++c) {
    std::vector<double> xs(c);
    for (int i = 0; i < c; ++i) xs[i] = i;
    const auto inst = scancover::testing::on_line(xs, scancover::testing::complete_edges(c));
    const auto coloring = greedy_coloring(inst);
    if (color_count(coloring) != c) out.fail("greedy coloring of K" + std::to_string(c));
    const auto bs = vectors_from_coloring(inst, coloring);
    const double cd = c;
    const int ceiling =
        static_cast<int>(std::ceil(std::log2(cd) + 0.5 * std::log2(std::log2(cd)) + 1.0 - 1e-12));
    worst_slack = std::min(worst_slack, ceiling - bs.steps);
    if (bs.steps > ceiling) out.fail("C=" + std::to_string(c) + " uses " + std::to_string(bs.steps));
    for (int a = 0; a < c; ++a) {
      for (int b = 0; b < c; ++b) {
        if (a != b && (bs.vectors[a] & ~bs.vectors[b]) == 0) {
          out.fail("C=" + std::to_string(c) + " comparable vectors");
        }
      }
    }
    if (!covers(inst, bs)) out.fail("C=" + std::to_string(c) + " does not cover");
    if (c == 2 && bs.steps != 2) out.fail("C=2 uses " + std::to_string(bs.steps));
  }
  out.detail << "C=2..64 within the ceiling (min slack " << worst_slack
             << "), all assigned pairs incomparable, C=2 -> N=2";
}

// --- 4 ---------------------------------------------------------------------

void rotation_bounds(Outcome& out) {
  std::vector<std::pair<std::string, Instance>> cases;
  for (const auto& name : corpus_files()) {
    auto inst = load_corpus(name);
    if (inst.dimension() == Dimension::kTwo && bipartition(inst)) {
      cases.emplace_back(name, std::move(inst));
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 14);
    const auto r = gen_random(RandomKind::kBipartite2d, n, seed);
    cases.emplace_back(label(RandomKind::kBipartite2d, n, seed), r.instance);
    cases.emplace_back("separated " + label(RandomKind::kBipartite2d, n, seed),
                       separated_copy(r.instance, *r.partition));
  }
  int separated = 0;
  double worst = 0.0, worst_separated = 0.0;
  for (const auto& [name, inst] : cases) {
    const Partition part = *bipartition(inst);
    const auto r = bipartite_rotation(inst, part);
    const double span = r.schedule.makespan();
    if (!validate_schedule(inst, r.schedule).valid ||
        !validate_trajectory(inst, r.schedule, r.trajectory).valid) {
      out.fail(name + " invalid");
    }
    worst = std::max(worst, span);
    if (span > 360.0 + kBoundTolerance) out.fail(name + " makespan " + fmt(span));
    std::vector<Vec3> p1, p2;
    for (std::size_t v = 0; v < inst.vertex_count(); ++v) {
      if (inst.degree(static_cast<VertexIndex>(v)) == 0) continue;
      (part[v] == 0 ? p1 : p2).push_back(inst.position(static_cast<VertexIndex>(v)));
    }
    if (detect_separating_line(p1, p2)) {
      ++separated;
      worst_separated = std::max(worst_separated, span);
      if (span > 180.0 + kBoundTolerance) out.fail(name + " separated makespan " + fmt(span));
    }
  }
  out.detail << cases.size() << " instances, max " << fmt(worst) << "; " << separated
             << " separated, max " << fmt(worst_separated);
}

// --- 5 ---------------------------------------------------------------------

void sector_ratio(Outcome& out) {
  int instances = 0, fallbacks = 0;
  double worst = 0.0;
  // Keep sampling until the sector construction itself (not the rotation
  // fallback for wide cones) has run on at least 100 instances.
  for (std::uint64_t seed = 0; instances < 120 || instances - fallbacks < 100; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const auto r = gen_random(RandomKind::kBipartite2d, n, 5000 + seed);
    if (r.instance.edge_count() > 9) continue;
    ++instances;
    const std::string name = label(RandomKind::kBipartite2d, n, 5000 + seed);
    try {
      const auto s = sector_approx(r.instance, *r.partition);
      const double span = s.schedule.makespan();
      if (!validate_schedule(r.instance, s.schedule).valid) out.fail(name + " invalid");
      if (s.rotation_fallback) {
        ++fallbacks;
      } else if (span > 3.0 * s.lambda_prime + kBoundTolerance) {
        out.fail(name + " exceeds 3 sector widths");
      }
      const double opt = exact_order_search(r.instance).schedule.makespan();
      if (span > 4.5 * opt + kBoundTolerance) {
        out.fail(name + " makespan " + fmt(span) + " optimum " + fmt(opt));
      }
      if (opt > 0.0) worst = std::max(worst, span / opt);
    } catch (const std::exception& e) {
      out.fail(name + " threw: " + e.what());
    }
  }
  out.detail << instances << " instances (" << fallbacks << " with cone >= 90), worst ratio "
             << fmt(worst);
}

// --- 6 ---------------------------------------------------------------------

void bound_soundness(Outcome& out) {
  std::vector<std::pair<std::string, Instance>> cases;
  for (const auto& name : corpus_files()) {
    auto inst = load_corpus(name);
    if (inst.edge_count() <= 9) cases.emplace_back(name, std::move(inst));
  }
  for (auto kind : all_random_kinds()) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const int n = 3 + static_cast<int>(seed % 5);
      auto inst = gen_random(kind, n, 9000 + seed).instance;
      if (inst.edge_count() <= 9) cases.emplace_back(label(kind, n, 9000 + seed), std::move(inst));
    }
  }
  cases.emplace_back("orthant star 5", gen_orthant_star(5, 5));
  int tight = 0;
  for (const auto& [name, inst] : cases) {
    const double opt = exact_order_search(inst, 12).schedule.makespan();
    const auto b = compute_bounds(inst);
    if (b.chi_source != "exact") out.fail(name + " without exact chromatic number");
    for (auto part : {b.lambda, b.chromatic_bound, b.star_bound}) {
      if (part && *part > opt + kSoundnessTolerance) {
        out.fail(name + " bound " + fmt(*part) + " above optimum " + fmt(opt));
      }
    }
    if (b.best() > opt + kSoundnessTolerance) out.fail(name + " best bound above optimum");
    if (std::abs(b.best() - opt) <= kSoundnessTolerance) ++tight;
  }
  out.detail << cases.size() << " instances solved exactly, bound tight on " << tight;
}

// --- 7 ---------------------------------------------------------------------

void cut_cover(Outcome& out) {
  std::vector<std::pair<std::string, Instance>> cases;
  for (const auto& name : corpus_files()) {
    auto inst = load_corpus(name);
    if (inst.dimension() == Dimension::kTwo) cases.emplace_back(name, std::move(inst));
  }
  for (auto kind : {RandomKind::kBipartite2d, RandomKind::kComplete2d, RandomKind::kSparse2d}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const int n = 3 + static_cast<int>(seed % 10);
      cases.emplace_back(label(kind, n, seed), gen_random(kind, n, seed).instance);
    }
  }
  int trajectories = 0, intervals = 0;
  for (const auto& [name, inst] : cases) {
    for (Algorithm a : {Algorithm::kBipRotation, Algorithm::kSector, Algorithm::kKColor,
                        Algorithm::kCompleteSplit, Algorithm::kTree, Algorithm::kArboricity}) {
      SolveResult r;
      try {
        r = run(inst, a);
      } catch (const Error&) {
        continue;  // algorithm does not apply to this instance
      }
      if (!r.trajectory || !validate_trajectory(inst, r.schedule, *r.trajectory).valid) continue;
      ++trajectories;
      const auto cc = cut_cover_extract(inst, r.schedule, *r.trajectory);
      intervals += static_cast<int>(cc.intervals.size());
      const std::string what = name + " " + std::string(algorithm_name(a));
      if (!cc.violations.empty()) out.fail(what + " reports same-quadrant scans");
      // Recompute the classification from the trajectory itself.
      const int count = std::max(1, static_cast<int>(std::ceil(r.schedule.makespan() / 90.0 - 1e-12)));
      for (std::size_t e = 0; e < inst.edge_count(); ++e) {
        const double t = r.schedule.times[e];
        const int k = std::min(count - 1, static_cast<int>(std::floor(t / 90.0)));
        const double mid = 90.0 * k + 45.0;
        const Edge& ed = inst.edge(static_cast<EdgeIndex>(e));
        if (quadrant(heading_at(r.trajectory->paths[ed.u], mid)) ==
            quadrant(heading_at(r.trajectory->paths[ed.v], mid))) {
          out.fail(what + " edge " + std::to_string(e) + " same quadrant at " + fmt(mid));
        }
      }
    }
  }
  out.detail << trajectories << " validated trajectories, " << intervals
             << " intervals, no same-quadrant scans";
}

// --- 8 ---------------------------------------------------------------------

// Canonical text of a formula up to variable renaming, polarity flips of
// whole variables, literal order and clause order.
std::string canonical(const std::vector<std::array<int, 3>>& clauses) {
  std::string best;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int flips = 0; flips < 8; ++flips) {
      std::vector<std::array<int, 3>> mapped;
      for (const auto& c : clauses) {
        std::array<int, 3> m{};
        for (int i = 0; i < 3; ++i) {
          const int var = c[i] / 2, neg = c[i] % 2;
          m[i] = 2 * perm[var] + (neg ^ ((flips >> var) & 1));
        }
        std::sort(m.begin(), m.end());
        mapped.push_back(m);
      }
      std::sort(mapped.begin(), mapped.end());
      std::string key;
      for (const auto& m : mapped) key += std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]) + "|";
      if (best.empty() || key < best) best = key;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void nae_dichotomy(Outcome& out) {
  // Literal code 2 * variable + negated, variables 0..2.
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < 6; ++a) {
    for (int b = a; b < 6; ++b) {
      for (int c = b; c < 6; ++c) triples.push_back({a, b, c});
    }
  }
  std::map<std::string, std::vector<std::array<int, 3>>> classes;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    classes.emplace(canonical({triples[i]}), std::vector<std::array<int, 3>>{triples[i]});
    for (std::size_t j = i; j < triples.size(); ++j) {
      classes.emplace(canonical({triples[i], triples[j]}),
                      std::vector<std::array<int, 3>>{triples[i], triples[j]});
    }
  }
  const double phi = 30.0;
  int satisfiable = 0, unsatisfiable = 0;
  for (const auto& [key, clauses] : classes) {
    Formula f;
    for (const auto& c : clauses) {
      Clause clause;
      for (int i = 0; i < 3; ++i) clause[i] = {"x" + std::to_string(c[i] / 2 + 1), c[i] % 2 == 1};
      f.push_back(clause);
    }
    const auto nae = nae3sat_check(f);
    const auto gadget = gen_nae_gadget(f, phi);
    const auto r = discrete_step_oracle(gadget, phi, 8);
    const std::string text = format_formula(f);
    if (!validate_schedule(gadget, r.schedule).valid) out.fail(text + " oracle schedule invalid");
    if (nae.satisfiable) {
      ++satisfiable;
      if (r.steps != 3) out.fail(text + " satisfiable but " + std::to_string(r.steps) + " steps");
    } else {
      ++unsatisfiable;
      if (r.steps < 4) out.fail(text + " unsatisfiable but " + std::to_string(r.steps) + " steps");
    }
  }
  out.detail << classes.size() << " formulas up to renaming: " << satisfiable << " satisfiable with 3 steps, "
             << unsatisfiable << " unsatisfiable with >= 4";
}

// --- 9 ---------------------------------------------------------------------

void tree_ratio(Outcome& out) {
  double worst = 0.0, worst_greedy = 0.0;
  int trees = 0;
  for (std::uint64_t seed = 0; trees < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const auto inst = gen_random(RandomKind::kTree3d, n, 700 + seed).instance;
    if (inst.edge_count() > 9) continue;
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < inst.vertex_count(); ++v) {
      max_degree = std::max(max_degree, inst.degree(static_cast<VertexIndex>(v)));
    }
    if (max_degree > 12) continue;
    ++trees;
    const std::string name = label(RandomKind::kTree3d, n, 700 + seed);
    const double opt = exact_order_search(inst).schedule.makespan();
    const auto exact = tree_approx(inst);
    const auto greedy = tree_approx(inst, std::nullopt, 0);
    if (!validate_schedule(inst, exact).valid || !validate_schedule(inst, greedy).valid) {
      out.fail(name + " invalid");
    }
    if (exact.makespan() > 2.0 * opt + kBoundTolerance) out.fail(name + " exact-order ratio above 2");
    if (exact.makespan() > 2.5 * opt + kBoundTolerance) out.fail(name + " ratio above 2.5");
    if (opt > 0.0) {
      worst = std::max(worst, exact.makespan() / opt);
      worst_greedy = std::max(worst_greedy, greedy.makespan() / opt);
    }
  }
  out.detail << trees << " trees, worst ratio " << fmt(worst)
             << " (nearest-neighbor star orders: " << fmt(worst_greedy) << ")";
}

// --- 10 --------------------------------------------------------------------

void complete_split(Outcome& out) {
  int runs = 0;
  double closest = 0.0;
  for (int n = 2; n <= 64; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto inst = gen_random(RandomKind::kComplete2d, n, 300 + seed).instance;
      const std::string name = label(RandomKind::kComplete2d, n, 300 + seed);
      try {
        const auto r = complete_recursive_split(inst);
        ++runs;
        const double bound = complete_split_bound(inst.vertex_count());
        const int levels = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
        const double formula = levels * 180.0 + (levels - 1) * 90.0;
        if (bound != formula) out.fail(name + " bound formula");
        if (r.schedule.makespan() > formula + kSoundnessTolerance) {
          out.fail(name + " makespan " + fmt(r.schedule.makespan()));
        }
        if (!validate_schedule(inst, r.schedule).valid ||
            !validate_trajectory(inst, r.schedule, r.trajectory).valid) {
          out.fail(name + " invalid");
        }
        closest = std::max(closest, r.schedule.makespan() / formula);
      } catch (const std::exception& e) {
        out.fail(name + " threw: " + e.what());
      }
    }
  }
  out.detail << runs << " complete graphs n=2..64, largest makespan/bound " << fmt(closest);
}

// --- 11 --------------------------------------------------------------------

void geodesic_trend(Outcome& out) {
  double last = -1.0;
  for (int sub = 0; sub <= 2; ++sub) {
    const auto star = gen_geodesic_star(sub);
    const double b = star_sequential_bound(star);
    out.detail << (sub ? ", " : "") << "sub " << sub << ": " << star.edge_count() << " leaves, "
               << fmt(b);
    if (!(b > last)) out.fail("not increasing at subdivision " + std::to_string(sub));
    last = b;
  }
}

// --- 12 --------------------------------------------------------------------

void determinism(Outcome& out) {
  std::vector<std::pair<std::string, Instance>> cases;
  for (const auto& name : corpus_files()) cases.emplace_back(name, load_corpus(name));
  for (auto kind : all_random_kinds()) {
    cases.emplace_back(label(kind, 10, 77), gen_random(kind, 10, 77).instance);
  }
  int runs = 0;
  for (const auto& [name, inst] : cases) {
    for (Algorithm a : {Algorithm::kAuto, Algorithm::kBipRotation, Algorithm::kSector,
                        Algorithm::kKColor, Algorithm::kCompleteSplit, Algorithm::kBits1d,
                        Algorithm::kTree, Algorithm::kArboricity, Algorithm::kOracle}) {
      std::string first;
      try {
        const auto r = run(inst, a);
        first = write_schedule(inst, {instance_hash(inst), r.schedule, r.bits, r.trajectory});
      } catch (const Error&) {
        continue;
      }
      const auto again = parse_instance(write_instance(inst));
      const auto r = run(again, a);
      const std::string second =
          write_schedule(again, {instance_hash(again), r.schedule, r.bits, r.trajectory});
      ++runs;
      if (first != second) out.fail(name + " " + std::string(algorithm_name(a)) + " differs");
    }
  }
  out.detail << runs << " solves reproduced byte for byte";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"validity suite", validity_suite},
      {"1D optimality", line_optimality},
      {"color vector ceiling", color_vectors},
      {"bipartite rotation bounds", rotation_bounds},
      {"sector approximation ratio", sector_ratio},
      {"lower bound soundness", bound_soundness},
      {"cut cover extraction", cut_cover},
      {"NAE gadget dichotomy", nae_dichotomy},
      {"tree approximation ratio", tree_ratio},
      {"complete split bound", complete_split},
      {"geodesic star trend", geodesic_trend},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("uncaught: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " " << std::setw(2) << i + 1 << " "
              << criteria[i].first << ": " << out.detail.str() << " [" << std::fixed
              << std::setprecision(1) << secs << "s]" << std::defaultfloat << "\n";
    for (const auto& f : out.failures) std::cout << "     " << f << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
