#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scancover/geometry.hpp"

namespace scancover {

using VertexIndex = int;
using EdgeIndex = int;

enum class Dimension { kAbstract = 0, kOne = 1, kTwo = 2, kThree = 3 };

struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;

  bool contains(VertexIndex w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Vertex {
  std::string id;
  std::vector<double> coords;  // empty for abstract instances

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// One entry of an abstract transition-cost table, addressed by edge index.
struct CostEntry {
  EdgeIndex a = 0;
  EdgeIndex b = 0;
  double cost = 0.0;
};

// A simple graph together with either a point embedding in R^1..R^3 or an
// abstract table of transition costs between incident edges. Immutable after
// construction; every factory validates the structural invariants and throws
// scancover::Error on violation.
class Instance {
 public:
  static Instance geometric(Dimension dimension, std::vector<Vertex> vertices,
                            std::vector<Edge> edges);
  static Instance abstract(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                           const std::vector<CostEntry>& costs);

  Dimension dimension() const { return dimension_; }
  bool is_abstract() const { return dimension_ == Dimension::kAbstract; }
  // 1, 2 or 3 for geometric instances, 0 for abstract ones.
  int spatial_dimension() const { return static_cast<int>(dimension_); }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const EdgeIndex> incident(VertexIndex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(VertexIndex v) const { return incident(v).size(); }

  VertexIndex other(EdgeIndex e, VertexIndex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }
  std::optional<VertexIndex> shared_vertex(EdgeIndex a, EdgeIndex b) const;
  std::optional<EdgeIndex> find_edge(VertexIndex u, VertexIndex v) const;
  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  bool adjacent(VertexIndex u, VertexIndex v) const { return find_edge(u, v).has_value(); }

  // Position padded to three coordinates; zero for abstract instances.
  Vec3 position(VertexIndex v) const;
  // Unit direction of edge e as seen from its endpoint `from`.
  Vec3 direction(EdgeIndex e, VertexIndex from) const;

  // Transition cost between two incident edges (see angular_cost).
  double cost(EdgeIndex a, EdgeIndex b) const;

  // Raw abstract table keyed by pair_key(a, b) with a < b.
  const std::unordered_map<std::uint64_t, double>& abstract_costs() const { return costs_; }
  static std::uint64_t pair_key(EdgeIndex a, EdgeIndex b);

  // Vertices sorted along the line (coordinate, then index). 1D only.
  std::vector<VertexIndex> line_order() const;
  // Rank of every vertex in line_order(). 1D only.
  std::vector<int> line_rank() const;

  // Same vertex set restricted to the given edges; edge i of the result is
  // edges[subset[i]] of this instance.
  Instance edge_subgraph(std::span<const EdgeIndex> subset) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  Instance() = default;
  void build_adjacency();

  Dimension dimension_ = Dimension::kAbstract;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::unordered_map<std::uint64_t, EdgeIndex> edge_lookup_;
  std::unordered_map<std::string, VertexIndex> id_lookup_;
  std::vector<Vec3> edge_direction_;  // unit u->v per edge, geometric only
  std::unordered_map<std::uint64_t, double> costs_;
};

// Smaller angle at the shared vertex between the two edges (1D: 0 or 180),
// or the table value for abstract instances. Throws kNotIncident.
double angular_cost(const Instance& instance, EdgeIndex e1, EdgeIndex e2);

struct MetricViolation {
  VertexIndex vertex = 0;
  EdgeIndex e1 = 0;
  EdgeIndex e2 = 0;
  EdgeIndex e3 = 0;
  double excess = 0.0;  // cost(e1,e3) - cost(e1,e2) - cost(e2,e3)
};

// Triangle-inequality violations among edges incident to a common vertex,
// reported once per (e1 < e3, e2) triple.
std::vector<MetricViolation> check_metric(const Instance& instance,
                                          double tolerance = kAngleTolerance);

// Abstract instance carrying the same graph and the angular costs of a
// geometric one.
Instance induced_abstract(const Instance& instance);

}  // namespace scancover
