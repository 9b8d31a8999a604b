#include "scancover/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "scancover/error.hpp"
#include "scancover/graph.hpp"
#include "scancover/oracle.hpp"
#include "scancover/planar.hpp"

namespace scancover {

namespace {

constexpr double kOrthantMargin = 1e-6;

struct Basis {
  Vec3 axis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
};

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform random rotation from a random unit quaternion.
Basis random_basis(std::mt19937_64& rng) {
  const double u1 = unit_draw(rng);
  const double u2 = 2.0 * std::numbers::pi * unit_draw(rng);
  const double u3 = 2.0 * std::numbers::pi * unit_draw(rng);
  const double a = std::sqrt(1 - u1) * std::sin(u2);
  const double b = std::sqrt(1 - u1) * std::cos(u2);
  const double c = std::sqrt(u1) * std::sin(u3);
  const double w = std::sqrt(u1) * std::cos(u3);
  Basis basis;
  basis.axis[0] = {1 - 2 * (b * b + c * c), 2 * (a * b + c * w), 2 * (a * c - b * w)};
  basis.axis[1] = {2 * (a * b - c * w), 1 - 2 * (a * a + c * c), 2 * (b * c + a * w)};
  basis.axis[2] = {2 * (a * c + b * w), 2 * (b * c - a * w), 1 - 2 * (a * a + b * b)};
  return basis;
}

int quadrant(const Vec3& heading) {
  return std::min(3, static_cast<int>(std::floor(heading_degrees(heading) / 90.0)));
}

// Sign pattern in the basis, or -1 if some coordinate is too close to zero.
int orthant(const Vec3& heading, const Basis& basis) {
  int cls = 0;
  for (int k = 0; k < 3; ++k) {
    const double c = dot(heading, basis.axis[k]);
    if (std::abs(c) < kOrthantMargin) return -1;
    if (c < 0) cls |= 1 << k;
  }
  return cls;
}

}  // namespace

double chromatic_lower_bound(int chi, int d) {
  if (chi < 2) return 0.0;
  const int bits = static_cast<int>(std::bit_width(static_cast<unsigned>(chi - 1)));
  return std::max(0.0, static_cast<double>(bits - d) / d * 90.0);
}

CutCover cut_cover_extract(const Instance& instance, const ScanSchedule& schedule,
                           const Trajectory& trajectory, std::uint64_t seed) {
  if (instance.is_abstract()) {
    throw Error(ErrorCode::kInapplicable, "cut covers need a geometric instance");
  }
  const auto verdict = validate_trajectory(instance, schedule, trajectory);
  if (!verdict.valid || !validate_schedule(instance, schedule).valid) {
    throw Error(ErrorCode::kInvalidTrajectory,
                verdict.problems.empty() ? "schedule is invalid" : verdict.problems.front());
  }
  const auto n = instance.vertex_count();
  const double makespan = schedule.makespan();
  const int count = std::max(1, static_cast<int>(std::ceil(makespan / 90.0 - 1e-12)));

  CutCover cover;
  cover.intervals.resize(count);
  for (int i = 0; i < count; ++i) {
    cover.intervals[i].start = 90.0 * i;
    cover.intervals[i].midpoint = 90.0 * i + 45.0;
  }
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    const int i = std::min(count - 1, static_cast<int>(std::floor(schedule.times[e] / 90.0)));
    cover.intervals[std::max(0, i)].edges.push_back(static_cast<EdgeIndex>(e));
  }

  const bool spatial = instance.dimension() == Dimension::kThree;
  std::mt19937_64 rng(seed);
  Basis basis;
  for (int attempt = 0;; ++attempt) {
    bool generic = true;
    for (auto& iv : cover.intervals) {
      iv.classes.assign(n, 0);
      for (std::size_t v = 0; v < n && generic; ++v) {
        const auto& path = trajectory.paths[v];
        if (path.empty()) continue;
        const Vec3 h = heading_at(path, iv.midpoint);
        if (!spatial) {
          iv.classes[v] = quadrant(h);
        } else {
          const int cls = orthant(h, basis);
          if (cls < 0) generic = false;
          iv.classes[v] = cls;
        }
      }
    }
    cover.rotation_attempts = spatial ? attempt + 1 : 0;
    if (generic) break;
    if (attempt >= 64) {
      throw Error(ErrorCode::kInvalidTrajectory, "no generic orthant basis found");
    }
    basis = random_basis(rng);
  }

  for (const auto& iv : cover.intervals) {
    for (EdgeIndex e : iv.edges) {
      const Edge& ed = instance.edge(e);
      if (iv.classes[ed.u] == iv.classes[ed.v]) cover.violations.push_back(e);
    }
  }
  std::map<std::vector<int>, int> palette;
  cover.coloring.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> key;
    for (const auto& iv : cover.intervals) key.push_back(iv.classes[v]);
    palette.emplace(key, 0);
  }
  int next = 0;
  for (auto& [key, color] : palette) color = next++;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> key;
    for (const auto& iv : cover.intervals) key.push_back(iv.classes[v]);
    cover.coloring[v] = palette[key];
  }
  cover.colors = next;
  return cover;
}

double star_sequential_bound(const Instance& instance) {
  const auto center = star_center(instance);
  if (!center) throw Error(ErrorCode::kNotAStar, "some edges do not share a common vertex");
  const auto inc = instance.incident(*center);
  if (inc.size() < 2) return 0.0;
  double cheapest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < inc.size(); ++i) {
    for (std::size_t j = i + 1; j < inc.size(); ++j) {
      cheapest = std::min(cheapest, instance.cost(inc[i], inc[j]));
    }
  }
  return static_cast<double>(inc.size() - 1) * cheapest;
}

std::vector<int> greedy_coloring(const Instance& instance) {
  const auto order = degeneracy_order(instance);
  std::vector<int> color(instance.vertex_count(), -1);
  for (auto it = order.removal.rbegin(); it != order.removal.rend(); ++it) {
    std::vector<bool> taken(instance.degree(*it) + 1, false);
    for (EdgeIndex e : instance.incident(*it)) {
      const int c = color[instance.other(e, *it)];
      if (c >= 0 && static_cast<std::size_t>(c) < taken.size()) taken[c] = true;
    }
    int c = 0;
    while (taken[c]) ++c;
    color[*it] = c;
  }
  return color;
}

int color_count(const std::vector<int>& coloring) {
  std::vector<int> sorted = coloring;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

int clique_lower_bound(const Instance& instance) {
  const auto n = instance.vertex_count();
  std::vector<VertexIndex> by_degree(n);
  for (std::size_t v = 0; v < n; ++v) by_degree[v] = static_cast<VertexIndex>(v);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](VertexIndex a, VertexIndex b) {
    return instance.degree(a) > instance.degree(b);
  });
  int best = n > 0 ? 1 : 0;
  for (VertexIndex seed : by_degree) {
    std::vector<VertexIndex> clique{seed};
    for (VertexIndex w : by_degree) {
      if (w == seed) continue;
      if (std::all_of(clique.begin(), clique.end(),
                      [&](VertexIndex c) { return instance.adjacent(c, w); })) {
        clique.push_back(w);
      }
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

double BoundReport::best() const {
  double b = 0.0;
  for (const auto& v : {lambda, chromatic_bound, star_bound}) {
    if (v) b = std::max(b, *v);
  }
  return b;
}

std::string BoundReport::best_source() const {
  std::string source = "none";
  double b = 0.0;
  if (lambda && *lambda > b) b = *lambda, source = "lambda";
  if (chromatic_bound && *chromatic_bound > b) b = *chromatic_bound, source = "chromatic";
  if (star_bound && *star_bound > b) b = *star_bound, source = "star";
  return source;
}

BoundReport compute_bounds(const Instance& instance, int exact_vertex_limit) {
  BoundReport report;
  if (instance.dimension() == Dimension::kOne || instance.dimension() == Dimension::kTwo) {
    report.lambda = lambda_cone(instance);
  }
  if (static_cast<int>(instance.vertex_count()) <= exact_vertex_limit) {
    report.chi_lower = report.chi_upper = exact_chromatic(instance, exact_vertex_limit);
    report.chi_source = "exact";
  } else {
    report.chi_lower = clique_lower_bound(instance);
    report.chi_upper = color_count(greedy_coloring(instance));
    report.chi_source = "clique";
  }
  if (instance.dimension() == Dimension::kTwo || instance.dimension() == Dimension::kThree) {
    report.chromatic_bound = chromatic_lower_bound(report.chi_lower, instance.spatial_dimension());
  }
  if (star_center(instance)) report.star_bound = star_sequential_bound(instance);
  return report;
}

}  // namespace scancover
