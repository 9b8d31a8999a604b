#include "scancover/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "scancover/error.hpp"

namespace scancover {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Some unit vector orthogonal to h; planar headings rotate within the plane.
Vec3 perpendicular(const Vec3& h) {
  if (std::abs(h.z) < 1e-12) return normalized(Vec3{-h.y, h.x, 0.0});
  const Vec3 axis = std::abs(h.x) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return normalized(cross(h, axis));
}

Vec3 slerp(const Vec3& a, const Vec3& b, double fraction) {
  const double omega = deg_to_rad(angle_between(a, b));
  if (omega < 1e-15) return a;
  Vec3 p = b - dot(a, b) * a;
  p = norm(p) < 1e-12 ? perpendicular(a) : normalized(p);
  const double t = fraction * omega;
  return std::cos(t) * a + std::sin(t) * p;
}

std::string describe(const Instance& instance, EdgeIndex e) {
  const Edge& ed = instance.edge(e);
  return instance.vertex(ed.u).id + "-" + instance.vertex(ed.v).id;
}

}  // namespace

double ScanSchedule::makespan() const {
  double m = 0.0;
  for (double t : times) {
    if (std::isfinite(t)) m = std::max(m, t);
  }
  return m;
}

Vec3 heading_at(std::span<const Waypoint> path, double time) {
  if (path.empty()) return {};
  if (time <= path.front().time) return path.front().heading;
  if (time >= path.back().time) return path.back().heading;
  const auto it = std::upper_bound(path.begin(), path.end(), time,
                                   [](double t, const Waypoint& w) { return t < w.time; });
  const Waypoint& hi = *it;
  const Waypoint& lo = *(it - 1);
  const double span = hi.time - lo.time;
  if (time == lo.time || span <= 0.0) return lo.heading;
  return slerp(lo.heading, hi.heading, (time - lo.time) / span);
}

ScanSchedule schedule_from_order(const Instance& instance, std::span<const EdgeIndex> order,
                                 std::string algorithm_tag) {
  const auto m = instance.edge_count();
  if (order.size() != m) {
    throw Error(ErrorCode::kIncompleteOrder, "order has " + std::to_string(order.size()) +
                                                 " entries for " + std::to_string(m) + " edges");
  }
  ScanSchedule schedule{std::vector<double>(m, kNaN), std::move(algorithm_tag)};
  for (EdgeIndex e : order) {
    if (e < 0 || static_cast<std::size_t>(e) >= m || !std::isnan(schedule.times[e])) {
      throw Error(ErrorCode::kIncompleteOrder, "edge " + std::to_string(e) +
                                                   " is out of range or repeated");
    }
    double t = 0.0;
    const Edge& ed = instance.edge(e);
    for (VertexIndex w : {ed.u, ed.v}) {
      for (EdgeIndex f : instance.incident(w)) {
        if (f != e && !std::isnan(schedule.times[f])) {
          t = std::max(t, schedule.times[f] + instance.cost(e, f));
        }
      }
    }
    schedule.times[e] = t;
  }
  return schedule;
}

std::vector<EdgeIndex> order_from_schedule(const ScanSchedule& schedule) {
  std::vector<EdgeIndex> order(schedule.times.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    return schedule.times[a] < schedule.times[b];
  });
  return order;
}

ScheduleVerdict validate_schedule(const Instance& instance, const ScanSchedule& schedule,
                                  double tolerance) {
  ScheduleVerdict verdict;
  const auto m = instance.edge_count();
  std::vector<bool> present(m, false);
  for (std::size_t e = 0; e < m; ++e) {
    const double t = e < schedule.times.size() ? schedule.times[e] : kNaN;
    if (!std::isfinite(t) || t < -tolerance) {
      verdict.missing.push_back(static_cast<EdgeIndex>(e));
    } else {
      present[e] = true;
      verdict.makespan = std::max(verdict.makespan, t);
    }
  }
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto inc = instance.incident(static_cast<VertexIndex>(v));
    for (std::size_t i = 0; i < inc.size(); ++i) {
      if (!present[inc[i]]) continue;
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (!present[inc[j]]) continue;
        const double gap = std::abs(schedule.times[inc[i]] - schedule.times[inc[j]]);
        const double required = instance.cost(inc[i], inc[j]);
        if (gap < required - tolerance) {
          verdict.violations.push_back(
              {static_cast<VertexIndex>(v), inc[i], inc[j], gap, required});
        }
      }
    }
  }
  verdict.valid = verdict.missing.empty() && verdict.violations.empty();
  return verdict;
}

Trajectory trajectory_from_schedule(const Instance& instance, const ScanSchedule& schedule) {
  if (instance.is_abstract()) {
    throw Error(ErrorCode::kInapplicable, "trajectories need a geometric instance");
  }
  Trajectory traj;
  traj.paths.resize(instance.vertex_count());
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto vi = static_cast<VertexIndex>(v);
    std::vector<EdgeIndex> inc(instance.incident(vi).begin(), instance.incident(vi).end());
    for (EdgeIndex e : inc) {
      if (e >= static_cast<EdgeIndex>(schedule.times.size()) || !std::isfinite(schedule.times[e])) {
        throw Error(ErrorCode::kInfeasibleSchedule, "edge " + describe(instance, e) + " has no time");
      }
    }
    std::stable_sort(inc.begin(), inc.end(), [&](EdgeIndex a, EdgeIndex b) {
      return schedule.times[a] < schedule.times[b];
    });
    auto& path = traj.paths[v];
    for (EdgeIndex e : inc) {
      const Waypoint next{schedule.times[e], instance.direction(e, vi)};
      if (!path.empty()) {
        const Waypoint& last = path.back();
        const double dt = next.time - last.time;
        const double turn = angle_between(last.heading, next.heading);
        if (turn > dt + kAngleTolerance) {
          throw Error(ErrorCode::kInfeasibleSchedule,
                      "vertex '" + instance.vertex(vi).id + "' cannot turn " +
                          std::to_string(turn) + " degrees in " + std::to_string(dt));
        }
        if (dt <= kAngleTolerance) continue;  // same heading, same instant
      }
      path.push_back(next);
    }
  }
  return traj;
}

TrajectoryVerdict validate_trajectory(const Instance& instance, const ScanSchedule& schedule,
                                      const Trajectory& trajectory, double tolerance) {
  TrajectoryVerdict verdict;
  auto problem = [&](std::string msg) { verdict.problems.push_back(std::move(msg)); };
  if (instance.is_abstract()) {
    problem("abstract instances have no headings");
    return verdict;
  }
  if (trajectory.paths.size() != instance.vertex_count()) {
    problem("trajectory has " + std::to_string(trajectory.paths.size()) + " paths for " +
            std::to_string(instance.vertex_count()) + " vertices");
    return verdict;
  }
  for (std::size_t v = 0; v < trajectory.paths.size(); ++v) {
    const auto& path = trajectory.paths[v];
    const std::string& id = instance.vertex(static_cast<VertexIndex>(v)).id;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!std::isfinite(path[i].time) || std::abs(norm(path[i].heading) - 1.0) > 1e-9) {
        problem("vertex '" + id + "' waypoint " + std::to_string(i) + " is malformed");
      }
      if (i == 0) continue;
      const double dt = path[i].time - path[i - 1].time;
      if (!(dt > 0.0)) {
        problem("vertex '" + id + "' waypoint times not strictly increasing at " +
                std::to_string(i));
        continue;
      }
      const double turn = angle_between(path[i - 1].heading, path[i].heading);
      if (turn > dt + tolerance) {
        std::ostringstream os;
        os << "vertex '" << id << "' turns " << turn << " degrees in " << dt << " time units";
        problem(os.str());
      }
    }
  }
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    const auto ei = static_cast<EdgeIndex>(e);
    if (e >= schedule.times.size() || !std::isfinite(schedule.times[e])) {
      problem("edge " + describe(instance, ei) + " has no scan time");
      continue;
    }
    const double t = schedule.times[e];
    const Edge& ed = instance.edge(ei);
    for (VertexIndex w : {ed.u, ed.v}) {
      const auto& path = trajectory.paths[w];
      if (path.empty()) {
        problem("vertex '" + instance.vertex(w).id + "' has no waypoints");
        continue;
      }
      const double off = angle_between(heading_at(path, t), instance.direction(ei, w));
      if (off > tolerance) {
        std::ostringstream os;
        os << "vertex '" << instance.vertex(w).id << "' misses edge " << describe(instance, ei)
           << " at time " << t << " by " << off << " degrees";
        problem(os.str());
      }
    }
  }
  verdict.valid = verdict.problems.empty();
  return verdict;
}

double normalize_start(ScanSchedule& schedule) {
  double lo = std::numeric_limits<double>::infinity();
  for (double t : schedule.times) {
    if (std::isfinite(t)) lo = std::min(lo, t);
  }
  if (!std::isfinite(lo) || lo == 0.0) return 0.0;
  for (double& t : schedule.times) {
    if (std::isfinite(t)) t = std::max(0.0, t - lo);
  }
  return lo;
}

Trajectory shift_trajectory(const Trajectory& trajectory, double delta) {
  Trajectory out;
  out.paths.reserve(trajectory.paths.size());
  for (const auto& path : trajectory.paths) {
    std::vector<Waypoint> shifted;
    if (!path.empty()) {
      bool exact = false;
      for (const Waypoint& w : path) exact = exact || w.time == delta;
      if (!exact) shifted.push_back({0.0, heading_at(path, delta)});
      for (const Waypoint& w : path) {
        if (w.time >= delta) shifted.push_back({w.time - delta, w.heading});
      }
    }
    out.paths.push_back(std::move(shifted));
  }
  return out;
}

double minimal_offset(const Instance& instance, std::span<const double> placed,
                      std::span<const double> incoming) {
  // Offsets inside any open interval (a - b - cost, a - b + cost) violate a
  // pair; the answer is the smallest nonnegative point outside their union.
  std::vector<std::pair<double, double>> forbidden;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto inc = instance.incident(static_cast<VertexIndex>(v));
    for (EdgeIndex f : inc) {
      if (!std::isfinite(incoming[f])) continue;
      for (EdgeIndex e : inc) {
        if (e == f || !std::isfinite(placed[e])) continue;
        const double c = instance.cost(e, f);
        if (c <= kAngleTolerance) continue;
        const double center = placed[e] - incoming[f];
        forbidden.emplace_back(center - c, center + c);
      }
    }
  }
  std::sort(forbidden.begin(), forbidden.end());
  double offset = 0.0;
  for (const auto& [lo, hi] : forbidden) {
    if (lo >= offset - 1e-12) break;
    offset = std::max(offset, hi);
  }
  return offset;
}

double append_at_minimal_offset(const Instance& instance, std::vector<double>& placed,
                                std::span<const double> incoming) {
  const double offset = minimal_offset(instance, placed, incoming);
  for (std::size_t e = 0; e < placed.size(); ++e) {
    if (std::isfinite(incoming[e])) placed[e] = incoming[e] + offset;
  }
  return offset;
}

}  // namespace scancover
