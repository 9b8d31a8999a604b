#include "scancover/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "scancover/error.hpp"

namespace scancover {

namespace {

std::uint64_t vertex_pair_key(VertexIndex u, VertexIndex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidInstance, msg); }

}  // namespace

std::uint64_t Instance::pair_key(EdgeIndex a, EdgeIndex b) { return vertex_pair_key(a, b); }

void Instance::build_adjacency() {
  const auto n = vertices_.size();
  incident_.assign(n, {});
  id_lookup_.clear();
  edge_lookup_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i].id.empty()) invalid("vertex " + std::to_string(i) + " has an empty id");
    if (!id_lookup_.emplace(vertices_[i].id, static_cast<VertexIndex>(i)).second) {
      invalid("duplicate vertex id '" + vertices_[i].id + "'");
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.v < 0 || static_cast<std::size_t>(ed.u) >= n ||
        static_cast<std::size_t>(ed.v) >= n) {
      invalid("edge " + std::to_string(e) + " references a missing vertex");
    }
    if (ed.u == ed.v) invalid("self-loop at vertex '" + vertices_[ed.u].id + "'");
    if (!edge_lookup_.emplace(vertex_pair_key(ed.u, ed.v), static_cast<EdgeIndex>(e)).second) {
      invalid("duplicate edge " + vertices_[ed.u].id + "-" + vertices_[ed.v].id);
    }
    incident_[ed.u].push_back(static_cast<EdgeIndex>(e));
    incident_[ed.v].push_back(static_cast<EdgeIndex>(e));
  }
}

Instance Instance::geometric(Dimension dimension, std::vector<Vertex> vertices,
                             std::vector<Edge> edges) {
  if (dimension == Dimension::kAbstract) invalid("geometric instance needs dimension 1, 2 or 3");
  Instance inst;
  inst.dimension_ = dimension;
  inst.vertices_ = std::move(vertices);
  inst.edges_ = std::move(edges);
  const auto d = static_cast<std::size_t>(dimension);
  for (const Vertex& v : inst.vertices_) {
    if (v.coords.size() != d) {
      invalid("vertex '" + v.id + "' has " + std::to_string(v.coords.size()) +
              " coordinates, expected " + std::to_string(d));
    }
    for (double c : v.coords) {
      if (!std::isfinite(c)) invalid("vertex '" + v.id + "' has a non-finite coordinate");
    }
  }
  inst.build_adjacency();
  inst.edge_direction_.reserve(inst.edges_.size());
  for (const Edge& ed : inst.edges_) {
    const Vec3 delta = inst.position(ed.v) - inst.position(ed.u);
    if (norm(delta) == 0.0) {
      throw Error(ErrorCode::kDegenerateEdge, "edge " + inst.vertices_[ed.u].id + "-" +
                                                  inst.vertices_[ed.v].id +
                                                  " joins coincident points");
    }
    inst.edge_direction_.push_back(normalized(delta));
  }
  return inst;
}

Instance Instance::abstract(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                            const std::vector<CostEntry>& costs) {
  Instance inst;
  inst.dimension_ = Dimension::kAbstract;
  inst.vertices_.reserve(vertex_ids.size());
  for (auto& id : vertex_ids) inst.vertices_.push_back(Vertex{std::move(id), {}});
  inst.edges_ = std::move(edges);
  inst.build_adjacency();
  const auto m = static_cast<EdgeIndex>(inst.edges_.size());
  for (const CostEntry& c : costs) {
    if (c.a < 0 || c.b < 0 || c.a >= m || c.b >= m) invalid("cost entry references a missing edge");
    if (!inst.shared_vertex(c.a, c.b)) {
      invalid("cost entry for non-incident edges " + std::to_string(c.a) + "," +
              std::to_string(c.b));
    }
    if (!std::isfinite(c.cost) || c.cost < 0.0) invalid("costs must be finite and nonnegative");
    const auto key = pair_key(c.a, c.b);
    auto [it, inserted] = inst.costs_.emplace(key, c.cost);
    if (!inserted && it->second != c.cost) {
      invalid("conflicting costs for edge pair " + std::to_string(c.a) + "," +
              std::to_string(c.b));
    }
  }
  for (std::size_t v = 0; v < inst.vertices_.size(); ++v) {
    const auto& inc = inst.incident_[v];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (!inst.costs_.count(pair_key(inc[i], inc[j]))) {
          invalid("missing cost for incident edges " + std::to_string(inc[i]) + "," +
                  std::to_string(inc[j]) + " at vertex '" + inst.vertices_[v].id + "'");
        }
      }
    }
  }
  return inst;
}

std::optional<VertexIndex> Instance::shared_vertex(EdgeIndex a, EdgeIndex b) const {
  if (a == b) return std::nullopt;
  const Edge& x = edge(a);
  const Edge& y = edge(b);
  if (y.contains(x.u)) return x.u;
  if (y.contains(x.v)) return x.v;
  return std::nullopt;
}

std::optional<EdgeIndex> Instance::find_edge(VertexIndex u, VertexIndex v) const {
  const auto it = edge_lookup_.find(vertex_pair_key(u, v));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexIndex> Instance::find_vertex(std::string_view id) const {
  const auto it = id_lookup_.find(std::string(id));
  if (it == id_lookup_.end()) return std::nullopt;
  return it->second;
}

Vec3 Instance::position(VertexIndex v) const {
  const auto& c = vertex(v).coords;
  Vec3 p;
  if (c.size() > 0) p.x = c[0];
  if (c.size() > 1) p.y = c[1];
  if (c.size() > 2) p.z = c[2];
  return p;
}

Vec3 Instance::direction(EdgeIndex e, VertexIndex from) const {
  const Vec3& d = edge_direction_[static_cast<std::size_t>(e)];
  return edge(e).u == from ? d : -d;
}

double Instance::cost(EdgeIndex a, EdgeIndex b) const { return angular_cost(*this, a, b); }

std::vector<VertexIndex> Instance::line_order() const {
  std::vector<VertexIndex> order(vertices_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    return vertex(a).coords[0] < vertex(b).coords[0];
  });
  return order;
}

std::vector<int> Instance::line_rank() const {
  const auto order = line_order();
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

Instance Instance::edge_subgraph(std::span<const EdgeIndex> subset) const {
  std::vector<Edge> sub_edges;
  sub_edges.reserve(subset.size());
  for (EdgeIndex e : subset) sub_edges.push_back(edge(e));
  if (!is_abstract()) return geometric(dimension_, vertices_, std::move(sub_edges));

  std::vector<std::string> ids;
  for (const Vertex& v : vertices_) ids.push_back(v.id);
  std::unordered_map<EdgeIndex, EdgeIndex> renumber;
  for (std::size_t i = 0; i < subset.size(); ++i) renumber[subset[i]] = static_cast<EdgeIndex>(i);
  std::vector<CostEntry> sub_costs;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    std::vector<EdgeIndex> kept;
    for (EdgeIndex e : incident_[v]) {
      if (renumber.count(e)) kept.push_back(e);
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t j = i + 1; j < kept.size(); ++j) {
        sub_costs.push_back({renumber[kept[i]], renumber[kept[j]], cost(kept[i], kept[j])});
      }
    }
  }
  return abstract(std::move(ids), std::move(sub_edges), sub_costs);
}

bool operator==(const Instance& a, const Instance& b) {
  return a.dimension_ == b.dimension_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
         a.costs_ == b.costs_;
}

double angular_cost(const Instance& instance, EdgeIndex e1, EdgeIndex e2) {
  const auto shared = instance.shared_vertex(e1, e2);
  if (!shared) {
    throw Error(ErrorCode::kNotIncident,
                "edges " + std::to_string(e1) + " and " + std::to_string(e2) + " share no vertex");
  }
  if (instance.is_abstract()) {
    return instance.abstract_costs().at(Instance::pair_key(e1, e2));
  }
  const Vec3 a = instance.direction(e1, *shared);
  const Vec3 b = instance.direction(e2, *shared);
  if (instance.dimension() == Dimension::kOne) return (a.x > 0) == (b.x > 0) ? 0.0 : 180.0;
  return angle_between(a, b);
}

std::vector<MetricViolation> check_metric(const Instance& instance, double tolerance) {
  std::vector<MetricViolation> out;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto inc = instance.incident(static_cast<VertexIndex>(v));
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t k = i + 1; k < inc.size(); ++k) {
        const double direct = instance.cost(inc[i], inc[k]);
        for (std::size_t j = 0; j < inc.size(); ++j) {
          if (j == i || j == k) continue;
          const double detour = instance.cost(inc[i], inc[j]) + instance.cost(inc[j], inc[k]);
          if (direct > detour + tolerance) {
            out.push_back({static_cast<VertexIndex>(v), inc[i], inc[j], inc[k], direct - detour});
          }
        }
      }
    }
  }
  return out;
}

Instance induced_abstract(const Instance& instance) {
  std::vector<std::string> ids;
  for (const Vertex& v : instance.vertices()) ids.push_back(v.id);
  std::vector<CostEntry> costs;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto inc = instance.incident(static_cast<VertexIndex>(v));
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        costs.push_back({inc[i], inc[j], instance.cost(inc[i], inc[j])});
      }
    }
  }
  return Instance::abstract(std::move(ids), instance.edges(), costs);
}

}  // namespace scancover
