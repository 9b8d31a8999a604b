#pragma once

#include <optional>
#include <vector>

#include "scancover/instance.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

inline constexpr int kExactPathThreshold = 12;

// Visiting order of the edges around one vertex together with the cost of
// the corresponding open path.
struct StarOrder {
  std::vector<EdgeIndex> order;
  double path_cost = 0.0;
  bool exact = false;  // minimum-cost path, not the greedy fallback
};

// Cheapest Hamiltonian path through the edges incident to v under the
// transition costs at v: Held-Karp when deg(v) <= threshold, otherwise
// nearest neighbor starting from the cheapest pair.
StarOrder vertex_path_order(const Instance& instance, VertexIndex v,
                            int exact_threshold = kExactPathThreshold);

// vertex_path_order at the center of a star. Throws kNotAStar unless every
// edge is incident to `center`.
StarOrder star_order(const Instance& instance, VertexIndex center,
                     int exact_threshold = kExactPathThreshold);

// The path order of a vertex closed into a cycle.
struct CyclicOrder {
  std::vector<EdgeIndex> edges;
  std::vector<double> offsets;  // cumulative cost from edges[0]
  double cycle_length = 0.0;    // path cost plus the closing transition
};

CyclicOrder cyclic_order(const Instance& instance, VertexIndex v,
                         int exact_threshold = kExactPathThreshold);

// The root scans its cyclic order from time 0; every other vertex runs its
// cycle once, shifted so that its parent edge keeps the parent's time.
// Makespan <= max cycle length. Throws kNotATree on cycles or when the edges
// span more than one component. Isolated vertices are allowed.
ScanSchedule tree_approx(const Instance& instance, std::optional<VertexIndex> root = std::nullopt,
                         int exact_threshold = kExactPathThreshold);

// Edge-disjoint forests covering E, at most degeneracy many: edges point
// from the earlier to the later vertex of a min-degree removal order, and the
// i-th outgoing edge of every vertex goes to forest i.
std::vector<std::vector<EdgeIndex>> forest_decompose(const Instance& instance);

// tree_approx on every component of every forest, forests chained at
// minimal offsets.
ScanSchedule arboricity_approx(const Instance& instance,
                               int exact_threshold = kExactPathThreshold);

}  // namespace scancover
