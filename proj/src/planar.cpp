#include "scancover/planar.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "scancover/error.hpp"
#include "scancover/graph.hpp"

namespace scancover {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSectorSnap = 1e-10;

void require_planar(const Instance& instance) {
  if (instance.dimension() != Dimension::kOne && instance.dimension() != Dimension::kTwo) {
    throw Error(ErrorCode::kInapplicable, "algorithm needs a planar (1D or 2D) instance");
  }
}

void check_partition(const Instance& instance, const Partition& partition) {
  if (partition.size() != instance.vertex_count()) {
    throw Error(ErrorCode::kNotBipartitePartition, "partition size does not match the vertex count");
  }
  for (int side : partition) {
    if (side != 0 && side != 1) {
      throw Error(ErrorCode::kNotBipartitePartition, "partition sides must be 0 or 1");
    }
  }
  for (const Edge& e : instance.edges()) {
    if (partition[e.u] == partition[e.v]) {
      throw Error(ErrorCode::kNotBipartitePartition, "edge " + instance.vertex(e.u).id + "-" +
                                                         instance.vertex(e.v).id +
                                                         " lies inside one side");
    }
  }
}

double cross2(const Vec3& o, const Vec3& a, const Vec3& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; collinear and duplicate points dropped.
std::vector<Vec3> convex_hull(std::vector<Vec3> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec3> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Vec3 planar(const Vec3& v) { return {v.x, v.y, 0.0}; }

// Waypoints of a constant-speed turn starting at heading h0 (degrees) at
// time t0; sign -1 turns clockwise. Pieces stay <= 90 degrees so the
// shortest-arc interpolation follows the turn.
void append_rotation(std::vector<Waypoint>& path, double t0, double h0, double duration,
                     double sign) {
  const int pieces = std::max(1, static_cast<int>(std::ceil(duration / 90.0 - 1e-12)));
  for (int k = 0; k <= pieces; ++k) {
    const double dt = duration * k / pieces;
    const double t = t0 + dt;
    if (!path.empty() && t <= path.back().time) continue;
    path.push_back({t, heading_vector(h0 + sign * dt)});
  }
}

// Planar heading of edge e as seen from u, in [0, 360).
double edge_heading(const Instance& instance, EdgeIndex e, VertexIndex u) {
  return heading_degrees(instance.direction(e, u));
}

VertexIndex p1_endpoint(const Instance& instance, const Partition& partition, EdgeIndex e) {
  const Edge& ed = instance.edge(e);
  return partition[ed.u] == 0 ? ed.u : ed.v;
}

void normalize_with_trajectory(ScanSchedule& schedule, Trajectory& trajectory) {
  const double delta = normalize_start(schedule);
  if (delta > 0.0) trajectory = shift_trajectory(trajectory, delta);
}

}  // namespace

std::optional<Line> detect_separating_line(const std::vector<Vec3>& p1,
                                           const std::vector<Vec3>& p2) {
  if (p1.empty() || p2.empty()) return std::nullopt;
  const auto h1 = convex_hull(p1);
  const auto h2 = convex_hull(p2);
  std::vector<Vec3> all = h1;
  all.insert(all.end(), h2.begin(), h2.end());

  // Disjoint hulls are separated along some hull-edge normal, or along the
  // difference of two points when a hull degenerates to a point or segment.
  std::optional<Line> best;
  double best_margin = 1e-9;
  auto consider = [&](Vec3 n) {
    n = normalized(planar(n));
    if (norm(n) == 0.0) return;
    double hi1 = -std::numeric_limits<double>::infinity();
    double lo2 = std::numeric_limits<double>::infinity();
    for (const Vec3& p : h1) hi1 = std::max(hi1, dot(n, planar(p)));
    for (const Vec3& p : h2) lo2 = std::min(lo2, dot(n, planar(p)));
    if (lo2 - hi1 > best_margin) {
      best_margin = lo2 - hi1;
      best = Line{n, 0.5 * (hi1 + lo2)};
    }
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Vec3 d = all[j] - all[i];
      const Vec3 perp{-d.y, d.x, 0.0};
      consider(d);
      consider(-d);
      consider(perp);
      consider(-perp);
    }
  }
  return best;
}

double vertex_cone(const Instance& instance, VertexIndex v) {
  const auto inc = instance.incident(v);
  if (inc.size() <= 1) return 0.0;
  std::vector<double> h;
  h.reserve(inc.size());
  for (EdgeIndex e : inc) h.push_back(edge_heading(instance, e, v));
  std::sort(h.begin(), h.end());
  double gap = 360.0 - h.back() + h.front();
  for (std::size_t i = 1; i < h.size(); ++i) gap = std::max(gap, h[i] - h[i - 1]);
  return std::max(0.0, 360.0 - gap);
}

double lambda_cone(const Instance& instance) {
  require_planar(instance);
  double lambda = 0.0;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    lambda = std::max(lambda, vertex_cone(instance, static_cast<VertexIndex>(v)));
  }
  return lambda;
}

RotationResult bipartite_rotation(const Instance& instance, const Partition& partition) {
  require_planar(instance);
  check_partition(instance, partition);
  const auto n = instance.vertex_count();
  const auto m = instance.edge_count();

  std::vector<Vec3> p1;
  std::vector<Vec3> p2;
  for (std::size_t v = 0; v < n; ++v) {
    if (instance.degree(static_cast<VertexIndex>(v)) == 0) continue;
    (partition[v] == 0 ? p1 : p2).push_back(instance.position(static_cast<VertexIndex>(v)));
  }
  RotationResult result;
  result.separator = detect_separating_line(p1, p2);
  const double start = result.separator ? heading_degrees(result.separator->normal) + 90.0 : 90.0;

  result.schedule = ScanSchedule{std::vector<double>(m, kNaN), "bip-rotation"};
  for (std::size_t e = 0; e < m; ++e) {
    const auto ei = static_cast<EdgeIndex>(e);
    const double theta = edge_heading(instance, ei, p1_endpoint(instance, partition, ei));
    result.schedule.times[e] = wrap_degrees(start - theta);
  }
  const double makespan = result.schedule.makespan();

  result.trajectory.paths.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double h0 = start + (partition[v] == 0 ? 0.0 : 180.0);
    append_rotation(result.trajectory.paths[v], 0.0, h0, makespan, -1.0);
  }
  return result;
}

int sector_count(double lambda) {
  return static_cast<int>(std::floor(180.0 / lambda + 1e-12));
}

SectorResult sector_approx(const Instance& instance, const Partition& partition) {
  require_planar(instance);
  check_partition(instance, partition);
  const auto n = instance.vertex_count();
  const auto m = instance.edge_count();

  SectorResult result;
  result.lambda = lambda_cone(instance);
  if (result.lambda >= 90.0) {
    auto rotation = bipartite_rotation(instance, partition);
    result.schedule = std::move(rotation.schedule);
    result.trajectory = std::move(rotation.trajectory);
    result.schedule.algorithm_tag = "sector";
    result.rotation_fallback = true;
    return result;
  }
  if (result.lambda <= kAngleTolerance) {
    // Every vertex sees all its edges in one direction: scan everything at 0.
    result.schedule = ScanSchedule{std::vector<double>(m, 0.0), "sector"};
    result.trajectory = trajectory_from_schedule(instance, result.schedule);
    return result;
  }

  const int s = sector_count(result.lambda);
  const double w = 180.0 / s;
  const long long ring = 2LL * s;
  result.sectors = s;
  result.lambda_prime = w;

  // Sector of every edge as seen from its P1 endpoint; the P2 endpoint sees
  // the same edge in the opposite sector (index + s).
  std::vector<long long> sector(m);
  result.schedule = ScanSchedule{std::vector<double>(m, kNaN), "sector"};
  for (std::size_t e = 0; e < m; ++e) {
    const auto ei = static_cast<EdgeIndex>(e);
    const double theta = edge_heading(instance, ei, p1_endpoint(instance, partition, ei));
    const double q = theta / w;
    const double nearest = std::round(q);
    long long idx = std::abs(q - nearest) * w <= kSectorSnap ? static_cast<long long>(nearest)
                                                             : static_cast<long long>(std::floor(q));
    double rel = theta - static_cast<double>(idx) * w;
    idx = ((idx % ring) + ring) % ring;
    if (rel > 180.0) rel -= 360.0;
    sector[e] = idx;
    result.schedule.times[e] = idx % 2 == 0 ? w - rel : 2.0 * w + rel;
  }

  result.trajectory.paths.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto vi = static_cast<VertexIndex>(v);
    const long long shift = partition[v] == 0 ? 0 : s;
    std::set<long long> own;
    std::optional<long long> even;
    std::optional<long long> odd;
    for (EdgeIndex e : instance.incident(vi)) {
      own.insert((sector[e] + shift) % ring);
      (sector[e] % 2 == 0 ? even : odd) = (sector[e] + shift) % ring;
    }
    const long long spread = own.empty() ? 0 : *own.rbegin() - *own.begin();
    if (own.size() > 2 || (own.size() == 2 && spread != 1 && spread != ring - 1)) {
      throw std::logic_error("vertex '" + instance.vertex(vi).id +
                             "' has edges in non-adjacent sectors");
    }
    auto& path = result.trajectory.paths[v];
    if (even) append_rotation(path, 0.0, static_cast<double>(*even + 1) * w, w, -1.0);
    if (odd) append_rotation(path, 2.0 * w, static_cast<double>(*odd) * w, w, 1.0);
    if (path.empty()) path.push_back({0.0, heading_vector(0.0)});
  }

  normalize_with_trajectory(result.schedule, result.trajectory);
  if (result.schedule.makespan() > 3.0 * w + kAngleTolerance) {
    throw std::logic_error("sector schedule exceeds three sector widths");
  }
  return result;
}

KColorResult kcolor_decompose(const Instance& instance, const std::vector<int>& coloring) {
  require_planar(instance);
  if (!is_proper_coloring(instance, coloring)) {
    throw Error(ErrorCode::kImproperColoring, "coloring is not proper");
  }
  std::map<int, int> index;
  for (int c : coloring) index.emplace(c, 0);
  int next = 0;
  for (auto& [color, i] : index) i = next++;
  const int k = static_cast<int>(index.size());

  KColorResult result;
  result.phases = k <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(k - 1)));
  std::vector<std::vector<EdgeIndex>> groups(static_cast<std::size_t>(result.phases));
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& ed = instance.edge(static_cast<EdgeIndex>(e));
    const auto diff = static_cast<unsigned>(index[coloring[ed.u]] ^ index[coloring[ed.v]]);
    groups[std::countr_zero(diff)].push_back(static_cast<EdgeIndex>(e));
  }

  std::vector<double> placed(instance.edge_count(), kNaN);
  for (int j = 0; j < result.phases; ++j) {
    const auto& group = groups[j];
    if (group.empty()) continue;
    Partition side(instance.vertex_count());
    for (std::size_t v = 0; v < side.size(); ++v) side[v] = (index[coloring[v]] >> j) & 1;
    const Instance sub = instance.edge_subgraph(group);
    const SectorResult phase = sector_approx(sub, side);
    std::vector<double> incoming(instance.edge_count(), kNaN);
    for (std::size_t i = 0; i < group.size(); ++i) incoming[group[i]] = phase.schedule.times[i];
    result.phase_offsets.push_back(append_at_minimal_offset(instance, placed, incoming));
  }
  result.schedule = ScanSchedule{std::move(placed), "kcolor"};
  normalize_start(result.schedule);
  result.trajectory = trajectory_from_schedule(instance, result.schedule);
  return result;
}

double complete_split_bound(std::size_t n) {
  const int levels = n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
  return levels == 0 ? 0.0 : levels * 180.0 + (levels - 1) * 90.0;
}

SplitResult complete_recursive_split(const Instance& instance) {
  require_planar(instance);
  const auto n = instance.vertex_count();
  const auto m = instance.edge_count();
  if (n < 2 || !is_complete(instance)) {
    throw Error(ErrorCode::kNotComplete, "expected a complete graph on at least 2 vertices");
  }
  const int levels = static_cast<int>(std::bit_width(n - 1));

  // Per level: scan time of every cross edge within [0, 180] and the side
  // (0 = P1, 1 = P2, -1 = done) of every vertex.
  std::vector<std::vector<double>> level_times(levels, std::vector<double>(m, kNaN));
  std::vector<std::vector<int>> sides(levels, std::vector<int>(n, -1));
  std::vector<std::vector<VertexIndex>> blocks(1);
  for (std::size_t v = 0; v < n; ++v) blocks[0].push_back(static_cast<VertexIndex>(v));

  for (int l = 0; l < levels; ++l) {
    const bool by_x = l % 2 == 0;
    std::vector<std::vector<VertexIndex>> next;
    for (auto& block : blocks) {
      if (block.size() < 2) continue;
      // Ties on the split key are broken by vertex index.
      std::sort(block.begin(), block.end(), [&](VertexIndex a, VertexIndex b) {
        const Vec3 pa = instance.position(a);
        const Vec3 pb = instance.position(b);
        const double ka = by_x ? pa.x : pa.y;
        const double kb = by_x ? pb.x : pb.y;
        return ka < kb || (ka == kb && a < b);
      });
      const std::size_t half = (block.size() + 1) / 2;
      std::vector<VertexIndex> low(block.begin(), block.begin() + half);
      std::vector<VertexIndex> high(block.begin() + half, block.end());
      for (VertexIndex u : low) sides[l][u] = 0;
      for (VertexIndex v : high) sides[l][v] = 1;
      for (VertexIndex u : low) {
        for (VertexIndex v : high) {
          const EdgeIndex e = *instance.find_edge(u, v);
          const Vec3 d = instance.direction(e, u);
          const double theta = rad_to_deg(std::atan2(d.y, d.x));
          // P1 turns clockwise from north (x split) or west (y split).
          const double t = by_x ? 90.0 - theta : 180.0 - theta;
          level_times[l][e] = std::clamp(t, 0.0, 180.0);
        }
      }
      next.push_back(std::move(low));
      next.push_back(std::move(high));
    }
    blocks = std::move(next);
  }

  // Fixed windows: level l in [270 l, 270 l + 180], a 90 degree turn between.
  ScanSchedule fixed{std::vector<double>(m, kNaN), "complete-split"};
  for (int l = 0; l < levels; ++l) {
    for (std::size_t e = 0; e < m; ++e) {
      if (!std::isnan(level_times[l][e])) fixed.times[e] = 270.0 * l + level_times[l][e];
    }
  }
  Trajectory fixed_traj;
  fixed_traj.paths.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (int l = 0; l < levels; ++l) {
      if (sides[l][v] < 0) break;
      const double start = (l % 2 == 0 ? 90.0 : 180.0) + (sides[l][v] == 0 ? 0.0 : 180.0);
      append_rotation(fixed_traj.paths[v], 270.0 * l, start, 180.0, -1.0);
    }
  }
  normalize_with_trajectory(fixed, fixed_traj);

  std::vector<double> placed(m, kNaN);
  for (int l = 0; l < levels; ++l) append_at_minimal_offset(instance, placed, level_times[l]);
  ScanSchedule greedy{std::move(placed), "complete-split"};
  normalize_start(greedy);

  SplitResult result;
  result.levels = levels;
  if (greedy.makespan() < fixed.makespan() - kAngleTolerance) {
    result.trajectory = trajectory_from_schedule(instance, greedy);
    result.schedule = std::move(greedy);
  } else {
    result.schedule = std::move(fixed);
    result.trajectory = std::move(fixed_traj);
    result.fixed_windows = true;
  }
  if (result.schedule.makespan() > complete_split_bound(n) + kAngleTolerance) {
    throw std::logic_error("recursive split exceeds its makespan bound");
  }
  return result;
}

}  // namespace scancover
