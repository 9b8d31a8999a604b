#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scancover/instance.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

// max(0, (ceil(log2 chi) - d) / d * 90). d must be 2 or 3.
double chromatic_lower_bound(int chi, int d);

struct CutCoverInterval {
  double start = 0.0;
  double midpoint = 0.0;
  std::vector<int> classes;      // quadrant (2D) or orthant (3D) of every vertex
  std::vector<EdgeIndex> edges;  // edges scanned in this interval
};

struct CutCover {
  std::vector<CutCoverInterval> intervals;
  std::vector<int> coloring;  // dense color per vertex from the class tuples
  int colors = 0;
  int rotation_attempts = 0;  // 3D only: bases tried before one was generic
  // Edges whose endpoints share a class in the interval they are scanned in.
  std::vector<EdgeIndex> violations;
};

// Splits [0, T] into ceil(T/90) intervals (at least one) and classifies
// every vertex by the quadrant (planar) or orthant (3D) of its heading at
// the interval midpoint. Edges are assigned to the interval containing their
// scan time, the last interval being closed. Throws kInvalidTrajectory if
// the trajectory does not validate.
CutCover cut_cover_extract(const Instance& instance, const ScanSchedule& schedule,
                           const Trajectory& trajectory, std::uint64_t seed = 0);

// (leaves - 1) times the cheapest transition at the center. Throws
// kNotAStar.
double star_sequential_bound(const Instance& instance);

// Smallest available color along the reverse min-degree removal order;
// colors are 0-based.
std::vector<int> greedy_coloring(const Instance& instance);

int color_count(const std::vector<int>& coloring);

// Size of a greedily grown clique; a lower bound on the chromatic number.
int clique_lower_bound(const Instance& instance);

struct BoundReport {
  std::optional<double> lambda;           // planar instances
  std::optional<double> chromatic_bound;  // 2D and 3D instances
  std::optional<double> star_bound;       // stars
  int chi_lower = 0;
  int chi_upper = 0;
  std::string chi_source;  // "exact" or "clique"

  double best() const;
  std::string best_source() const;
};

// Exact chromatic number when the instance has at most `exact_vertex_limit`
// vertices, clique and greedy estimates otherwise.
BoundReport compute_bounds(const Instance& instance, int exact_vertex_limit = 14);

}  // namespace scancover
