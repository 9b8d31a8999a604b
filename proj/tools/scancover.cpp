// Command-line front end: solve, validate, bound, generate, export-svg.
//
// Exit codes: 0 success, 1 invalid schedule, 2 algorithm not applicable,
// 3 input error (parse failure, unreadable file, hash mismatch).

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scancover/bounds.hpp"
#include "scancover/error.hpp"
#include "scancover/formula.hpp"
#include "scancover/generators.hpp"
#include "scancover/io.hpp"
#include "scancover/oracle.hpp"
#include "scancover/schedule.hpp"
#include "scancover/solve.hpp"
#include "scancover/svg.hpp"

namespace {

using scancover::ErrorCode;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitInput = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInapplicable:
    case ErrorCode::kNotBipartite:
    case ErrorCode::kNotComplete:
    case ErrorCode::kNotATree:
    case ErrorCode::kNotAStar:
    case ErrorCode::kNotBipartitePartition:
    case ErrorCode::kTooLarge:
    case ErrorCode::kCostsNotDiscrete:
    case ErrorCode::kNoSolutionWithin:
    case ErrorCode::kImproperColoring:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kTooManyVariables:
      return kExitInapplicable;
    case ErrorCode::kInfeasibleSchedule:
    case ErrorCode::kCoverViolation:
    case ErrorCode::kInvalidTrajectory:
    case ErrorCode::kIncompleteOrder:
      return kExitInvalid;
    default:
      return kExitInput;
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

// Ordered key/value summary printed as "key: value" lines or one JSON object.
class Report {
 public:
  void add(const std::string& key, double v) { put(key, Json(v)); }
  void add(const std::string& key, int v) { put(key, Json(v)); }
  void add(const std::string& key, std::string v) { put(key, Json(std::move(v))); }
  void add(const std::string& key, bool v) { put(key, Json(v)); }

  void print(bool json) const {
    if (json) {
      Json doc = Json::object();
      for (const auto& [k, v] : items_) doc[k] = v;
      std::cout << doc.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : items_) {
      std::cout << k << ": ";
      if (v.is_number_float()) {
        std::cout << fmt(v.get<double>());
      } else if (v.is_string()) {
        std::cout << v.get<std::string>();
      } else if (v.is_boolean()) {
        std::cout << (v.get<bool>() ? "yes" : "no");
      } else {
        std::cout << v.dump();
      }
      std::cout << "\n";
    }
  }

 private:
  void put(const std::string& key, Json value) {
    for (auto& [k, v] : items_) {
      if (k == key) {
        v = std::move(value);
        return;
      }
    }
    items_.emplace_back(key, std::move(value));
  }

  std::vector<std::pair<std::string, Json>> items_;
};

void add_bounds(Report& report, const scancover::BoundReport& b) {
  if (b.lambda) report.add("lambda", *b.lambda);
  if (b.chromatic_bound) report.add("chromatic_bound", *b.chromatic_bound);
  if (b.star_bound) report.add("star_bound", *b.star_bound);
  report.add("chi_lower", b.chi_lower);
  report.add("chi_upper", b.chi_upper);
  report.add("chi_source", b.chi_source);
  report.add("lower_bound", b.best());
  report.add("lower_bound_source", b.best_source());
}

int cmd_solve(const std::string& instance_path, const std::string& algo, const std::string& out,
              double step, int max_steps, bool json) {
  const auto instance = scancover::parse_instance(scancover::read_text_file(instance_path));
  scancover::SolveOptions options;
  options.algorithm = scancover::parse_algorithm(algo);
  options.step = step;
  options.max_steps = max_steps;
  options.edge_limit = scancover::oracle_limit(scancover::kDefaultEdgeLimit);
  const auto result = scancover::solve(instance, options);

  const auto verdict = scancover::validate_schedule(instance, result.schedule);
  bool trajectory_ok = true;
  if (result.trajectory) {
    trajectory_ok =
        scancover::validate_trajectory(instance, result.schedule, *result.trajectory).valid;
  }
  if (!out.empty()) {
    scancover::ScheduleFile file{scancover::instance_hash(instance), result.schedule, result.bits,
                                 result.trajectory};
    scancover::write_text_file(out, scancover::write_schedule(instance, file));
  }

  Report report;
  report.add("algorithm", std::string(scancover::algorithm_name(result.algorithm)));
  report.add("vertices", static_cast<int>(instance.vertex_count()));
  report.add("edges", static_cast<int>(instance.edge_count()));
  report.add("makespan", verdict.makespan);
  report.add("valid", verdict.valid && trajectory_ok);
  for (const auto& [k, v] : result.details) report.add(k, v);
  const auto bounds = scancover::compute_bounds(
      instance, scancover::oracle_limit(scancover::kDefaultChromaticVertexLimit));
  add_bounds(report, bounds);
  if (bounds.best() > 0.0) report.add("ratio", verdict.makespan / bounds.best());
  report.print(json);
  return verdict.valid && trajectory_ok ? kExitOk : kExitInvalid;
}

int cmd_validate(const std::string& instance_path, const std::string& schedule_path, bool json) {
  const auto instance = scancover::parse_instance(scancover::read_text_file(instance_path));
  const auto file = scancover::parse_schedule(instance, scancover::read_text_file(schedule_path));
  const std::string hash = scancover::instance_hash(instance);
  if (file.instance_hash != hash) {
    std::cerr << "error: schedule was computed for instance " << file.instance_hash
              << ", this instance hashes to " << hash << "\n";
    return kExitInput;
  }
  const auto verdict = scancover::validate_schedule(instance, file.schedule);
  std::optional<scancover::TrajectoryVerdict> traj;
  if (file.trajectory) {
    traj = scancover::validate_trajectory(instance, file.schedule, *file.trajectory);
  }
  const bool valid = verdict.valid && (!traj || traj->valid);

  Report report;
  report.add("valid", valid);
  report.add("algorithm", file.schedule.algorithm_tag);
  report.add("makespan", verdict.makespan);
  report.add("missing", static_cast<int>(verdict.missing.size()));
  report.add("violations", static_cast<int>(verdict.violations.size()));
  if (traj) report.add("trajectory_valid", traj->valid);
  report.print(json);
  auto edge_name = [&](scancover::EdgeIndex e) {
    const auto& ed = instance.edge(e);
    return instance.vertex(ed.u).id + "-" + instance.vertex(ed.v).id;
  };
  for (auto e : verdict.missing) std::cerr << "missing: " << edge_name(e) << "\n";
  for (const auto& v : verdict.violations) {
    std::cerr << "violation: at " << instance.vertex(v.vertex).id << " edges " << edge_name(v.e1)
              << " and " << edge_name(v.e2) << " are " << fmt(v.gap) << " apart, need "
              << fmt(v.required) << "\n";
  }
  if (traj) {
    for (const auto& p : traj->problems) std::cerr << "trajectory: " << p << "\n";
  }
  return valid ? kExitOk : kExitInvalid;
}

int cmd_bound(const std::string& instance_path, bool json) {
  const auto instance = scancover::parse_instance(scancover::read_text_file(instance_path));
  Report report;
  report.add("vertices", static_cast<int>(instance.vertex_count()));
  report.add("edges", static_cast<int>(instance.edge_count()));
  add_bounds(report, scancover::compute_bounds(
                         instance, scancover::oracle_limit(scancover::kDefaultChromaticVertexLimit)));
  report.print(json);
  return kExitOk;
}

struct GenerateArgs {
  std::string kind;
  std::string out;
  std::string formula;
  double phi = 30.0;
  int ell = 1;
  int sub = 0;
  int n = 3;
  int d = 0;
  std::string random_kind = "bipartite2d";
  std::uint64_t seed = 1;
};

int cmd_generate(const GenerateArgs& args) {
  std::optional<scancover::Instance> instance;
  if (args.kind == "nae-gadget") {
    instance = scancover::gen_nae_gadget(scancover::parse_formula(args.formula), args.phi);
  } else if (args.kind == "turan-1d") {
    instance = scancover::gen_turan_1d(args.ell);
  } else if (args.kind == "geodesic-star") {
    instance = scancover::gen_geodesic_star(args.sub);
  } else if (args.kind == "orthant-star") {
    instance = scancover::gen_orthant_star(args.n, args.d > 0 ? args.d : args.n);
  } else if (args.kind == "random") {
    instance =
        scancover::gen_random(scancover::parse_random_kind(args.random_kind), args.n, args.seed).instance;
  } else {
    throw scancover::Error(ErrorCode::kParse, "unknown generator '" + args.kind + "'");
  }
  scancover::write_text_file(args.out, scancover::write_instance(*instance));
  std::cout << "vertices: " << instance->vertex_count() << "\n";
  std::cout << "edges: " << instance->edge_count() << "\n";
  return kExitOk;
}

int cmd_export_svg(const std::string& instance_path, const std::string& schedule_path,
                   const std::string& out) {
  const auto instance = scancover::parse_instance(scancover::read_text_file(instance_path));
  const auto file = scancover::parse_schedule(instance, scancover::read_text_file(schedule_path));
  if (file.instance_hash != scancover::instance_hash(instance)) {
    std::cerr << "error: schedule belongs to a different instance\n";
    return kExitInput;
  }
  scancover::write_text_file(out, scancover::render_svg(instance, file.schedule, file.trajectory));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum scan cover solver"};
  app.require_subcommand(1);
  bool json = false;

  std::string instance_path;
  std::string schedule_path;
  std::string out;
  std::string algo = "auto";
  double step = 0.0;
  int max_steps = 32;

  auto* solve = app.add_subcommand("solve", "Compute a schedule");
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_option("--algo", algo, "auto|bip-rotation|sector|kcolor|complete-split|bits-1d|tree|"
                                    "arboricity|oracle|oracle-discrete");
  solve->add_option("-o,--output", out, "Schedule file to write");
  solve->add_option("--step", step, "Slot width for oracle-discrete (default: smallest cost)");
  solve->add_option("--max-steps", max_steps, "Slot limit for oracle-discrete");
  solve->add_flag("--json", json, "Structured output");

  auto* validate = app.add_subcommand("validate", "Check a schedule file");
  validate->add_option("instance", instance_path, "Instance file")->required();
  validate->add_option("schedule", schedule_path, "Schedule file")->required();
  validate->add_flag("--json", json, "Structured output");

  auto* bound = app.add_subcommand("bound", "Report lower bounds");
  bound->add_option("instance", instance_path, "Instance file")->required();
  bound->add_flag("--json", json, "Structured output");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("generator", gen.kind, "nae-gadget|turan-1d|geodesic-star|orthant-star|random")
      ->required();
  generate->add_option("-o,--output", gen.out, "Instance file to write")->required();
  generate->add_option("--formula", gen.formula, "Clauses such as (x1,x2,!x3)(x1,!x2,x4)");
  generate->add_option("--phi", gen.phi, "Gadget cost unit in degrees");
  generate->add_option("--ell", gen.ell, "Turan parameter");
  generate->add_option("--sub", gen.sub, "Icosahedron subdivisions");
  generate->add_option("--n", gen.n, "Leaves (orthant-star) or vertices (random)");
  generate->add_option("--d", gen.d, "Dimension for orthant-star (default n)");
  generate->add_option("--family", gen.random_kind, "Random instance family");
  generate->add_option("--seed", gen.seed, "Random seed");

  auto* svg = app.add_subcommand("export-svg", "Draw a schedule");
  svg->add_option("instance", instance_path, "Instance file")->required();
  svg->add_option("schedule", schedule_path, "Schedule file")->required();
  svg->add_option("-o,--output", out, "SVG file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(instance_path, algo, out, step, max_steps, json);
    if (*validate) return cmd_validate(instance_path, schedule_path, json);
    if (*bound) return cmd_bound(instance_path, json);
    if (*generate) return cmd_generate(gen);
    if (*svg) return cmd_export_svg(instance_path, schedule_path, out);
  } catch (const scancover::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
