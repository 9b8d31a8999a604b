#include "scancover/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scancover/error.hpp"

namespace scancover {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::kParse, msg); }

void allow_only(const Json& obj, std::initializer_list<std::string_view> keys,
                const std::string& where) {
  if (!obj.is_object()) parse_error(where + " must be an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || item.key() == k;
    if (!known) parse_error("unknown field '" + item.key() + "' in " + where);
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) parse_error("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) parse_error(where + " must be a number");
  return j.get<double>();
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where + " must be a string");
  return j.get<std::string>();
}

Json parse_json(std::string_view input) {
  try {
    return Json::parse(input.begin(), input.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

std::pair<std::string, std::string> id_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) parse_error(where + " must be a pair of vertex ids");
  return {text(j[0], where), text(j[1], where)};
}

Json edge_json(const Instance& instance, EdgeIndex e) {
  const Edge& ed = instance.edge(e);
  return Json::array({instance.vertex(ed.u).id, instance.vertex(ed.v).id});
}

EdgeIndex lookup_edge(const Instance& instance, const std::pair<std::string, std::string>& ids,
                      const std::string& where) {
  const auto u = instance.find_vertex(ids.first);
  const auto v = instance.find_vertex(ids.second);
  if (!u || !v) parse_error(where + " names an unknown vertex");
  const auto e = instance.find_edge(*u, *v);
  if (!e) parse_error(where + " names a missing edge " + ids.first + "-" + ids.second);
  return *e;
}

}  // namespace

Instance parse_instance(std::string_view input) {
  const Json doc = parse_json(input);
  allow_only(doc, {"version", "dimension", "vertices", "edges", "costs"}, "instance");
  const Json& version = require(doc, "version", "instance");
  if (!version.is_number_integer() || version.get<int>() != 1) parse_error("version must be 1");

  const Json& dim_json = require(doc, "dimension", "instance");
  Dimension dim;
  if (dim_json.is_string() && dim_json.get<std::string>() == "abstract") {
    dim = Dimension::kAbstract;
  } else if (dim_json.is_number_integer() && dim_json.get<int>() >= 1 && dim_json.get<int>() <= 3) {
    dim = static_cast<Dimension>(dim_json.get<int>());
  } else {
    parse_error("dimension must be 1, 2, 3 or \"abstract\"");
  }

  const Json& vertex_list = require(doc, "vertices", "instance");
  if (!vertex_list.is_array()) parse_error("vertices must be a list");
  std::vector<Vertex> vertices;
  std::map<std::string, VertexIndex> index;
  for (const Json& v : vertex_list) {
    allow_only(v, {"id", "coords"}, "vertex");
    Vertex vertex{text(require(v, "id", "vertex"), "vertex id"), {}};
    if (v.contains("coords")) {
      if (!v["coords"].is_array()) parse_error("coords of '" + vertex.id + "' must be a list");
      for (const Json& c : v["coords"]) vertex.coords.push_back(number(c, "coordinate"));
    }
    if (!index.emplace(vertex.id, static_cast<VertexIndex>(vertices.size())).second) {
      throw Error(ErrorCode::kInvalidInstance, "duplicate vertex id '" + vertex.id + "'");
    }
    vertices.push_back(std::move(vertex));
  }

  const Json& edge_list = require(doc, "edges", "instance");
  if (!edge_list.is_array()) parse_error("edges must be a list");
  std::vector<Edge> edges;
  std::map<std::pair<VertexIndex, VertexIndex>, EdgeIndex> edge_index;
  auto vertex_of = [&](const std::string& id) {
    const auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorCode::kInvalidInstance, "unknown vertex id '" + id + "'");
    return it->second;
  };
  for (const Json& e : edge_list) {
    const auto [a, b] = id_pair(e, "edge");
    const VertexIndex u = vertex_of(a);
    const VertexIndex v = vertex_of(b);
    edge_index.emplace(std::minmax(u, v), static_cast<EdgeIndex>(edges.size()));
    edges.push_back({u, v});
  }

  if (dim != Dimension::kAbstract) {
    if (doc.contains("costs")) parse_error("costs are only allowed for abstract instances");
    return Instance::geometric(dim, std::move(vertices), std::move(edges));
  }
  std::vector<CostEntry> costs;
  if (doc.contains("costs")) {
    const Json& cost_list = doc["costs"];
    if (!cost_list.is_array()) parse_error("costs must be a list");
    auto edge_of = [&](const Json& j) {
      const auto [a, b] = id_pair(j, "cost edge");
      const auto it = edge_index.find(std::minmax(vertex_of(a), vertex_of(b)));
      if (it == edge_index.end()) {
        throw Error(ErrorCode::kInvalidInstance, "cost entry names missing edge " + a + "-" + b);
      }
      return it->second;
    };
    for (const Json& c : cost_list) {
      allow_only(c, {"e1", "e2", "cost"}, "cost entry");
      costs.push_back({edge_of(require(c, "e1", "cost entry")), edge_of(require(c, "e2", "cost entry")),
                       number(require(c, "cost", "cost entry"), "cost")});
    }
  }
  std::vector<std::string> ids;
  for (auto& v : vertices) {
    if (!v.coords.empty()) parse_error("abstract vertex '" + v.id + "' must not have coordinates");
    ids.push_back(std::move(v.id));
  }
  return Instance::abstract(std::move(ids), std::move(edges), costs);
}

std::string write_instance(const Instance& instance, bool pretty) {
  Json doc;
  doc["version"] = 1;
  if (instance.is_abstract()) {
    doc["dimension"] = "abstract";
  } else {
    doc["dimension"] = instance.spatial_dimension();
  }
  Json vertices = Json::array();
  for (const Vertex& v : instance.vertices()) {
    Json item;
    item["id"] = v.id;
    if (!instance.is_abstract()) item["coords"] = v.coords;
    vertices.push_back(std::move(item));
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    edges.push_back(edge_json(instance, static_cast<EdgeIndex>(e)));
  }
  doc["edges"] = std::move(edges);
  if (instance.is_abstract()) {
    Json costs = Json::array();
    for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
      const auto inc = instance.incident(static_cast<VertexIndex>(v));
      for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          Json c;
          c["e1"] = edge_json(instance, inc[i]);
          c["e2"] = edge_json(instance, inc[j]);
          c["cost"] = instance.cost(inc[i], inc[j]);
          costs.push_back(std::move(c));
        }
      }
    }
    doc["costs"] = std::move(costs);
  }
  return pretty ? doc.dump(2) + "\n" : doc.dump();
}

std::string instance_hash(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : write_instance(instance, false)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string write_schedule(const Instance& instance, const ScheduleFile& file) {
  Json doc;
  doc["instance_hash"] = file.instance_hash;
  doc["algorithm_tag"] = file.schedule.algorithm_tag;
  Json times = Json::array();
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    Json item;
    item["edge"] = edge_json(instance, static_cast<EdgeIndex>(e));
    const double t = e < file.schedule.times.size() ? file.schedule.times[e]
                                                    : std::numeric_limits<double>::quiet_NaN();
    item["t"] = std::isfinite(t) ? Json(t) : Json(nullptr);
    times.push_back(std::move(item));
  }
  doc["times"] = std::move(times);
  if (file.bits) {
    Json bits;
    bits["steps"] = file.bits->steps;
    Json vectors = Json::object();
    for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
      vectors[instance.vertex(static_cast<VertexIndex>(v)).id] =
          bits_to_string(file.bits->vectors[v], file.bits->steps);
    }
    bits["vectors"] = std::move(vectors);
    doc["bits"] = std::move(bits);
  }
  if (file.trajectory) {
    Json traj = Json::object();
    for (std::size_t v = 0; v < file.trajectory->paths.size(); ++v) {
      Json path = Json::array();
      for (const Waypoint& w : file.trajectory->paths[v]) {
        path.push_back(Json::array({w.time, w.heading.x, w.heading.y, w.heading.z}));
      }
      traj[instance.vertex(static_cast<VertexIndex>(v)).id] = std::move(path);
    }
    doc["trajectory"] = std::move(traj);
  }
  return doc.dump(2) + "\n";
}

ScheduleFile parse_schedule(const Instance& instance, std::string_view input) {
  const Json doc = parse_json(input);
  allow_only(doc, {"instance_hash", "algorithm_tag", "times", "bits", "trajectory"}, "schedule");
  ScheduleFile file;
  file.instance_hash = text(require(doc, "instance_hash", "schedule"), "instance_hash");
  file.schedule.algorithm_tag = text(require(doc, "algorithm_tag", "schedule"), "algorithm_tag");
  file.schedule.times.assign(instance.edge_count(), std::numeric_limits<double>::quiet_NaN());
  const Json& times = require(doc, "times", "schedule");
  if (!times.is_array()) parse_error("times must be a list");
  std::set<EdgeIndex> seen;
  for (const Json& item : times) {
    allow_only(item, {"edge", "t"}, "time entry");
    const EdgeIndex e = lookup_edge(instance, id_pair(require(item, "edge", "time entry"), "edge"),
                                    "time entry");
    if (!seen.insert(e).second) parse_error("edge listed twice in times");
    const Json& t = require(item, "t", "time entry");
    if (!t.is_null()) file.schedule.times[e] = number(t, "t");
  }
  if (doc.contains("bits")) {
    const Json& bits = doc["bits"];
    allow_only(bits, {"steps", "vectors"}, "bits");
    BitSchedule bs;
    const Json& steps = require(bits, "steps", "bits");
    if (!steps.is_number_integer() || steps.get<int>() < 1 || steps.get<int>() > kMaxSteps) {
      parse_error("bits.steps must be an integer in [1, 64]");
    }
    bs.steps = steps.get<int>();
    bs.vectors.assign(instance.vertex_count(), 0);
    const Json& vectors = require(bits, "vectors", "bits");
    if (!vectors.is_object()) parse_error("bits.vectors must be an object");
    for (const auto& item : vectors.items()) {
      const auto v = instance.find_vertex(item.key());
      if (!v) parse_error("bits names unknown vertex '" + item.key() + "'");
      const std::string word = text(item.value(), "bit vector");
      if (static_cast<int>(word.size()) != bs.steps) parse_error("bit vector length differs from steps");
      bs.vectors[*v] = bits_from_string(word);
    }
    file.bits = std::move(bs);
  }
  if (doc.contains("trajectory")) {
    const Json& traj = doc["trajectory"];
    if (!traj.is_object()) parse_error("trajectory must be an object");
    Trajectory t;
    t.paths.resize(instance.vertex_count());
    for (const auto& item : traj.items()) {
      const auto v = instance.find_vertex(item.key());
      if (!v) parse_error("trajectory names unknown vertex '" + item.key() + "'");
      if (!item.value().is_array()) parse_error("trajectory path must be a list");
      for (const Json& w : item.value()) {
        if (!w.is_array() || w.size() != 4) parse_error("waypoints are [t, x, y, z]");
        t.paths[*v].push_back({number(w[0], "waypoint time"),
                               {number(w[1], "heading"), number(w[2], "heading"),
                                number(w[3], "heading")}});
      }
    }
    file.trajectory = std::move(t);
  }
  return file;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::kParse, "failed writing '" + path + "'");
}

}  // namespace scancover
