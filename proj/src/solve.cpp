#include "scancover/solve.hpp"

#include <cmath>
#include <limits>

#include "scancover/bounds.hpp"
#include "scancover/error.hpp"
#include "scancover/graph.hpp"
#include "scancover/oracle.hpp"
#include "scancover/planar.hpp"
#include "scancover/tree.hpp"

namespace scancover {

namespace {

constexpr std::pair<Algorithm, std::string_view> kNames[] = {
    {Algorithm::kAuto, "auto"},
    {Algorithm::kBipRotation, "bip-rotation"},
    {Algorithm::kSector, "sector"},
    {Algorithm::kKColor, "kcolor"},
    {Algorithm::kCompleteSplit, "complete-split"},
    {Algorithm::kBits1d, "bits-1d"},
    {Algorithm::kTree, "tree"},
    {Algorithm::kArboricity, "arboricity"},
    {Algorithm::kOracle, "oracle"},
    {Algorithm::kOracleDiscrete, "oracle-discrete"},
};

bool planar(const Instance& instance) {
  return instance.dimension() == Dimension::kOne || instance.dimension() == Dimension::kTwo;
}

void require(bool ok, std::string_view algo, const std::string& why) {
  if (!ok) throw Error(ErrorCode::kInapplicable, std::string(algo) + ": " + why);
}

Partition require_bipartite(const Instance& instance, std::string_view algo) {
  const auto sides = bipartition(instance);
  require(sides.has_value(), algo, "graph is not bipartite");
  return *sides;
}

bool edges_form_tree(const Instance& instance) {
  if (!is_forest(instance)) return false;
  const auto label = connected_components(instance);
  for (const Edge& e : instance.edges()) {
    if (label[e.u] != label[instance.edge(0).u]) return false;
  }
  return true;
}

double smallest_positive_cost(const Instance& instance) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto inc = instance.incident(static_cast<VertexIndex>(v));
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const double c = instance.cost(inc[i], inc[j]);
        if (c > kAngleTolerance) best = std::min(best, c);
      }
    }
  }
  return std::isfinite(best) ? best : 1.0;
}

SolveResult solve_1d(const Instance& instance) {
  SolveResult r;
  if (bipartition(instance)) {
    r.bits = solve_bipartite_1d(instance);
  } else if (is_complete(instance)) {
    r.bits = solve_complete_1d(instance);
  } else {
    const auto coloring = greedy_coloring(instance);
    r.bits = vectors_from_coloring(instance, coloring);
    r.details.emplace_back("colors", color_count(coloring));
  }
  r.schedule = bitschedule_to_schedule(*r.bits, instance);
  r.details.emplace_back("steps", r.bits->steps);
  return r;
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [algo, text] : kNames) {
    if (text == name) return algo;
  }
  throw Error(ErrorCode::kParse, "unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm algo) {
  for (const auto& [a, text] : kNames) {
    if (a == algo) return text;
  }
  return "unknown";
}

Algorithm resolve_auto(const Instance& instance) {
  if (instance.edge_count() == 0) return Algorithm::kArboricity;
  switch (instance.dimension()) {
    case Dimension::kAbstract:
      return edges_form_tree(instance) ? Algorithm::kTree : Algorithm::kArboricity;
    case Dimension::kOne:
      return Algorithm::kBits1d;
    case Dimension::kTwo:
      if (bipartition(instance)) return Algorithm::kSector;
      if (is_complete(instance)) return Algorithm::kCompleteSplit;
      return Algorithm::kKColor;
    case Dimension::kThree:
      return edges_form_tree(instance) ? Algorithm::kTree : Algorithm::kArboricity;
  }
  return Algorithm::kArboricity;
}

SolveResult solve(const Instance& instance, const SolveOptions& options) {
  const Algorithm algo =
      options.algorithm == Algorithm::kAuto ? resolve_auto(instance) : options.algorithm;
  const std::string_view name = algorithm_name(algo);
  SolveResult r;
  switch (algo) {
    case Algorithm::kAuto:
      break;
    case Algorithm::kBipRotation: {
      require(planar(instance), name, "needs a planar instance");
      auto res = bipartite_rotation(instance, require_bipartite(instance, name));
      r.schedule = std::move(res.schedule);
      r.trajectory = std::move(res.trajectory);
      r.details.emplace_back("separated", res.separator ? 1.0 : 0.0);
      break;
    }
    case Algorithm::kSector: {
      require(planar(instance), name, "needs a planar instance");
      auto res = sector_approx(instance, require_bipartite(instance, name));
      r.schedule = std::move(res.schedule);
      r.trajectory = std::move(res.trajectory);
      r.details.emplace_back("lambda", res.lambda);
      if (!res.rotation_fallback) {
        r.details.emplace_back("lambda_prime", res.lambda_prime);
        r.details.emplace_back("sector_bound", 3.0 * res.lambda_prime);
      } else {
        r.details.emplace_back("rotation_fallback", 1.0);
      }
      break;
    }
    case Algorithm::kKColor: {
      require(planar(instance), name, "needs a planar instance");
      const auto coloring = greedy_coloring(instance);
      auto res = kcolor_decompose(instance, coloring);
      r.schedule = std::move(res.schedule);
      r.trajectory = std::move(res.trajectory);
      r.details.emplace_back("colors", color_count(coloring));
      r.details.emplace_back("phases", res.phases);
      break;
    }
    case Algorithm::kCompleteSplit: {
      require(planar(instance), name, "needs a planar instance");
      require(instance.vertex_count() >= 2 && is_complete(instance), name,
              "needs a complete graph on at least 2 vertices");
      auto res = complete_recursive_split(instance);
      r.schedule = std::move(res.schedule);
      r.trajectory = std::move(res.trajectory);
      r.details.emplace_back("levels", res.levels);
      r.details.emplace_back("split_bound", complete_split_bound(instance.vertex_count()));
      break;
    }
    case Algorithm::kBits1d:
      require(instance.dimension() == Dimension::kOne, name, "needs a 1D instance");
      r = solve_1d(instance);
      break;
    case Algorithm::kTree:
      require(edges_form_tree(instance) || instance.edge_count() == 0, name,
              "graph is not a tree");
      r.schedule = tree_approx(instance);
      break;
    case Algorithm::kArboricity:
      r.schedule = arboricity_approx(instance);
      r.details.emplace_back("forests", static_cast<double>(forest_decompose(instance).size()));
      break;
    case Algorithm::kOracle: {
      auto res = exact_order_search(instance, options.edge_limit);
      r.schedule = std::move(res.schedule);
      r.details.emplace_back("nodes", static_cast<double>(res.nodes));
      break;
    }
    case Algorithm::kOracleDiscrete: {
      const double step = options.step > 0.0 ? options.step : smallest_positive_cost(instance);
      auto res = discrete_step_oracle(instance, step, options.max_steps);
      r.schedule = std::move(res.schedule);
      r.details.emplace_back("step", step);
      r.details.emplace_back("steps", res.steps);
      break;
    }
  }
  r.algorithm = algo;
  r.schedule.algorithm_tag = std::string(name);
  for (double& t : r.schedule.times) {
    if (t == 0.0) t = 0.0;  // no negative zeros in output
  }
  if (!r.trajectory && !instance.is_abstract() && instance.edge_count() > 0) {
    r.trajectory = trajectory_from_schedule(instance, r.schedule);
  }
  return r;
}

}  // namespace scancover
