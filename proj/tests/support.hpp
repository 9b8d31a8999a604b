#pragma once

// Shared fixtures for the unit and acceptance tests: corpus access, small
// instance builders and brute-force oracles that share no code with the
// library's solvers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "scancover/instance.hpp"
#include "scancover/io.hpp"

namespace scancover::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(SCANCOVER_CORPUS_DIR) + "/" + name;
}

inline Instance load_corpus(const std::string& name) {
  return parse_instance(read_text_file(corpus_path(name)));
}

inline std::vector<std::string> corpus_files() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(SCANCOVER_CORPUS_DIR)) {
    if (entry.path().extension() == ".json") names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

inline Instance planar(std::vector<std::pair<double, double>> points,
                       std::vector<std::pair<int, int>> edges) {
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < points.size(); ++i) {
    vertices.push_back({"v" + std::to_string(i), {points[i].first, points[i].second}});
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return Instance::geometric(Dimension::kTwo, std::move(vertices), std::move(es));
}

inline Instance on_line(std::vector<double> xs, std::vector<std::pair<int, int>> edges) {
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vertices.push_back({"v" + std::to_string(i), {xs[i]}});
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return Instance::geometric(Dimension::kOne, std::move(vertices), std::move(es));
}

inline std::vector<std::pair<int, int>> complete_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

// Turning angle at the shared vertex computed from raw coordinates.
inline double raw_turn(const Instance& inst, int e, int f) {
  const Edge& ee = inst.edge(e);
  const Edge& ff = inst.edge(f);
  const int w = (ee.u == ff.u || ee.u == ff.v) ? ee.u : ee.v;
  const int p = ee.u == w ? ee.v : ee.u;
  const int q = ff.u == w ? ff.v : ff.u;
  const auto& cw = inst.vertex(w).coords;
  const auto& cp = inst.vertex(p).coords;
  const auto& cq = inst.vertex(q).coords;
  double a[3] = {0, 0, 0}, b[3] = {0, 0, 0};
  for (std::size_t k = 0; k < cw.size(); ++k) {
    a[k] = cp[k] - cw[k];
    b[k] = cq[k] - cw[k];
  }
  const double cx = a[1] * b[2] - a[2] * b[1];
  const double cy = a[2] * b[0] - a[0] * b[2];
  const double cz = a[0] * b[1] - a[1] * b[0];
  const double d = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), d) * 180.0 / 3.14159265358979323846;
}

// Optimal makespan over all edge orders: for a fixed order the earliest
// start times are optimal, so enumerating permutations is exhaustive.
inline double brute_force_optimum(const Instance& inst) {
  const int m = static_cast<int>(inst.edge_count());
  if (m == 0) return 0.0;
  std::vector<std::vector<double>> cost(m, std::vector<double>(m, -1.0));
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f) {
      if (e == f) continue;
      const Edge& a = inst.edge(e);
      const Edge& b = inst.edge(f);
      if (a.contains(b.u) || a.contains(b.v)) {
        cost[e][f] = inst.is_abstract() ? inst.cost(e, f) : raw_turn(inst, e, f);
      }
    }
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> t(m);
  do {
    double span = 0.0;
    for (int i = 0; i < m && span < best; ++i) {
      double s = 0.0;
      for (int j = 0; j < i; ++j) {
        const double c = cost[order[i]][order[j]];
        if (c >= 0.0) s = std::max(s, t[order[j]] + c);
      }
      t[order[i]] = s;
      span = std::max(span, s);
    }
    best = std::min(best, span);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Fewest steps of a 1D bit schedule, by enumerating all heading bits.
inline int brute_force_steps_1d(const Instance& inst, int max_steps = 4) {
  const int n = static_cast<int>(inst.vertex_count());
  if (inst.edge_count() == 0) return 1;
  for (int steps = 1; steps <= max_steps; ++steps) {
    const std::uint64_t per = 1ull << steps;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= per;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint64_t> bits(n);
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        bits[i] = c % per;
        c /= per;
      }
      bool ok = true;
      for (const Edge& e : inst.edges()) {
        int l = e.u, r = e.v;
        if (inst.vertex(l).coords[0] > inst.vertex(r).coords[0]) std::swap(l, r);
        // l must face right (0) and r left (1) in some step.
        if (((~bits[l]) & bits[r] & (per - 1)) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) return steps;
    }
  }
  return max_steps + 1;
}

inline int brute_force_chromatic(const Instance& inst) {
  const int n = static_cast<int>(inst.vertex_count());
  if (n == 0) return 0;
  if (inst.edge_count() == 0) return 1;
  for (int k = 2; k <= n; ++k) {
    std::vector<int> color(n, 0);
    while (true) {
      bool proper = true;
      for (const Edge& e : inst.edges()) proper = proper && color[e.u] != color[e.v];
      if (proper) return k;
      int i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

}  // namespace scancover::testing
