#pragma once

#include <span>
#include <string>
#include <vector>

#include "scancover/geometry.hpp"
#include "scancover/instance.hpp"

namespace scancover {

// Scan time per edge, in degrees (one degree of time turns a vertex by one
// degree). NaN marks an edge without a time.
struct ScanSchedule {
  std::vector<double> times;
  std::string algorithm_tag;

  double makespan() const;
};

struct Waypoint {
  double time = 0.0;
  Vec3 heading;  // unit vector
};

// Per-vertex heading function: constant before the first and after the last
// waypoint, great-circle interpolation at constant speed in between.
struct Trajectory {
  std::vector<std::vector<Waypoint>> paths;  // indexed by vertex
};

Vec3 heading_at(std::span<const Waypoint> path, double time);

// Pointwise-minimal schedule that scans edges in the given order:
// S(e_i) = max over earlier incident e_j of S(e_j) + cost(e_i, e_j), else 0.
// Throws kIncompleteOrder unless `order` is a permutation of all edges.
ScanSchedule schedule_from_order(const Instance& instance, std::span<const EdgeIndex> order,
                                 std::string algorithm_tag = "order");

// Edge order by (time, edge index).
std::vector<EdgeIndex> order_from_schedule(const ScanSchedule& schedule);

struct PairViolation {
  VertexIndex vertex = 0;
  EdgeIndex e1 = 0;
  EdgeIndex e2 = 0;
  double gap = 0.0;
  double required = 0.0;
};

struct ScheduleVerdict {
  bool valid = false;
  double makespan = 0.0;
  std::vector<EdgeIndex> missing;  // edges without a finite nonnegative time
  std::vector<PairViolation> violations;
};

ScheduleVerdict validate_schedule(const Instance& instance, const ScanSchedule& schedule,
                                  double tolerance = kAngleTolerance);

// Waypoints at each vertex's scan times facing the partner, joined by
// shortest rotations. Geometric instances only; throws kInfeasibleSchedule if
// some vertex cannot turn between consecutive scans in time.
Trajectory trajectory_from_schedule(const Instance& instance, const ScanSchedule& schedule);

struct TrajectoryVerdict {
  bool valid = false;
  std::vector<std::string> problems;
};

TrajectoryVerdict validate_trajectory(const Instance& instance, const ScanSchedule& schedule,
                                      const Trajectory& trajectory,
                                      double tolerance = kAngleTolerance);

// Subtracts the minimum finite time so the earliest scan happens at 0.
// Returns the amount subtracted.
double normalize_start(ScanSchedule& schedule);

// Drops the first `delta` time units of a trajectory: the heading at time t
// of the result is the original heading at t + delta.
Trajectory shift_trajectory(const Trajectory& trajectory, double delta);

// Smallest offset >= 0 such that placing `incoming` (NaN = absent) shifted
// by it keeps every incident pair with `placed` separated by its cost.
double minimal_offset(const Instance& instance, std::span<const double> placed,
                      std::span<const double> incoming);

// Merges `incoming` into `placed` at minimal_offset; returns the offset used.
double append_at_minimal_offset(const Instance& instance, std::vector<double>& placed,
                                std::span<const double> incoming);

}  // namespace scancover
