#pragma once

#include <optional>
#include <vector>

#include "scancover/geometry.hpp"
#include "scancover/instance.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

// Side assignment of a bipartite instance: 0 for P1, 1 for P2.
using Partition = std::vector<int>;

// Points p with dot(normal, p) < offset lie on the P1 side.
struct Line {
  Vec3 normal;  // unit, pointing from P1 towards P2
  double offset = 0.0;
};

// A line with every point of `p1` strictly on one side and every point of
// `p2` strictly on the other, if one exists.
std::optional<Line> detect_separating_line(const std::vector<Vec3>& p1,
                                           const std::vector<Vec3>& p2);

// Smallest cone containing every edge direction at v: 360 minus the largest
// circular gap between the sorted directions. 0 for degree <= 1.
double vertex_cone(const Instance& instance, VertexIndex v);

// Maximum vertex_cone. Planar (1D or 2D) instances only.
double lambda_cone(const Instance& instance);

struct RotationResult {
  ScanSchedule schedule;
  Trajectory trajectory;
  std::optional<Line> separator;
};

// P1 starts facing north and P2 south, everyone turns clockwise; edge uv is
// scanned once u faces v, at which time v faces u. With a separating line
// the start headings are taken parallel to it. Throws kNotBipartitePartition.
RotationResult bipartite_rotation(const Instance& instance, const Partition& partition);

struct SectorResult {
  ScanSchedule schedule;
  Trajectory trajectory;
  double lambda = 0.0;
  double lambda_prime = 0.0;  // sector width; 0 when the rotation fallback ran
  int sectors = 0;            // s, half the number of sectors
  bool rotation_fallback = false;
};

// Largest s with 180/s >= lambda (lambda in (0, 90)).
int sector_count(double lambda);

// Splits the headings into 2s sectors of width 180/s >= lambda. Edges whose
// P1-side sector is even are scanned clockwise in [0, L'], odd ones
// counterclockwise in [2L', 3L']. Falls back to bipartite_rotation when
// lambda >= 90. Throws kNotBipartitePartition.
SectorResult sector_approx(const Instance& instance, const Partition& partition);

struct KColorResult {
  ScanSchedule schedule;
  Trajectory trajectory;
  int phases = 0;                    // ceil(log2 k)
  std::vector<double> phase_offsets;  // start of every nonempty phase
};

// Edges go to the bipartite subgraph of the lowest bit in which their
// endpoint colors differ; each subgraph is solved by sector_approx and the
// phases are chained at minimal offsets. Throws kImproperColoring.
KColorResult kcolor_decompose(const Instance& instance, const std::vector<int>& coloring);

struct SplitResult {
  ScanSchedule schedule;
  Trajectory trajectory;
  int levels = 0;
  bool fixed_windows = false;  // level l occupies [270 l, 270 l + 180]
};

// ceil(log2 n) * 180 + (ceil(log2 n) - 1) * 90.
double complete_split_bound(std::size_t n);

// Median splits alternating between x and y; level l scans the edges across
// the splits of that level, all blocks at once. Throws kNotComplete.
SplitResult complete_recursive_split(const Instance& instance);

}  // namespace scancover
