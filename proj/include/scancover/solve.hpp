#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scancover/instance.hpp"
#include "scancover/line.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

enum class Algorithm {
  kAuto,
  kBipRotation,
  kSector,
  kKColor,
  kCompleteSplit,
  kBits1d,
  kTree,
  kArboricity,
  kOracle,
  kOracleDiscrete,
};

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kAuto;
  double step = 0.0;       // oracle-discrete; 0 picks the smallest positive cost
  int edge_limit = 9;      // oracle
  int max_steps = 32;      // oracle-discrete
};

struct SolveResult {
  Algorithm algorithm = Algorithm::kAuto;  // the one that actually ran
  ScanSchedule schedule;
  std::optional<Trajectory> trajectory;
  std::optional<BitSchedule> bits;
  std::vector<std::pair<std::string, double>> details;  // algorithm-specific numbers
};

// Algorithm `auto` resolves to:
//   no edges                    -> arboricity (empty schedule)
//   abstract, tree              -> tree
//   abstract, otherwise         -> arboricity
//   1D                          -> bits-1d
//   2D bipartite                -> sector
//   2D complete                 -> complete-split
//   2D otherwise                -> kcolor with a greedy coloring
//   3D tree                     -> tree
//   3D otherwise                -> arboricity
Algorithm resolve_auto(const Instance& instance);

// Runs the algorithm; throws Error(kInapplicable) (or a more specific code)
// when it does not apply to the instance.
SolveResult solve(const Instance& instance, const SolveOptions& options);

}  // namespace scancover
