#pragma once

#include <optional>
#include <vector>

#include "scancover/instance.hpp"

namespace scancover {

// Proper 2-coloring (0/1 per vertex, BFS from the smallest index of every
// component), or nullopt if the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const Instance& instance);

bool is_complete(const Instance& instance);

// Acyclic graph (possibly disconnected).
bool is_forest(const Instance& instance);

// Connected acyclic graph on all vertices.
bool is_tree(const Instance& instance);

// Component label per vertex, numbered by smallest member.
std::vector<int> connected_components(const Instance& instance);

// True if some vertex is incident to every edge.
std::optional<VertexIndex> star_center(const Instance& instance);

struct DegeneracyOrder {
  std::vector<VertexIndex> removal;  // repeated minimum-degree removal, ties by index
  int degeneracy = 0;
};

DegeneracyOrder degeneracy_order(const Instance& instance);

// Whether the coloring uses different colors on every edge.
bool is_proper_coloring(const Instance& instance, const std::vector<int>& coloring);

}  // namespace scancover
