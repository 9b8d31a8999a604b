#include "scancover/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace scancover {

std::optional<std::vector<int>> bipartition(const Instance& instance) {
  const auto n = instance.vertex_count();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<VertexIndex> queue{static_cast<VertexIndex>(s)};
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (EdgeIndex e : instance.incident(v)) {
        const VertexIndex w = instance.other(e, v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_complete(const Instance& instance) {
  const auto n = instance.vertex_count();
  return instance.edge_count() == n * (n - 1) / 2;
}

std::vector<int> connected_components(const Instance& instance) {
  const auto n = instance.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    std::vector<VertexIndex> stack{static_cast<VertexIndex>(s)};
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : instance.incident(v)) {
        const VertexIndex w = instance.other(e, v);
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_forest(const Instance& instance) {
  const auto labels = connected_components(instance);
  const int components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  return instance.edge_count() + static_cast<std::size_t>(components) == instance.vertex_count();
}

bool is_tree(const Instance& instance) {
  return instance.vertex_count() > 0 && instance.edge_count() + 1 == instance.vertex_count() &&
         is_forest(instance);
}

std::optional<VertexIndex> star_center(const Instance& instance) {
  if (instance.edge_count() == 0) return std::nullopt;
  const Edge& first = instance.edge(0);
  for (VertexIndex c : {first.u, first.v}) {
    if (instance.degree(c) == instance.edge_count()) return c;
  }
  return std::nullopt;
}

DegeneracyOrder degeneracy_order(const Instance& instance) {
  const auto n = instance.vertex_count();
  std::vector<int> deg(n);
  std::set<std::pair<int, VertexIndex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(instance.degree(static_cast<VertexIndex>(v)));
    queue.emplace(deg[v], static_cast<VertexIndex>(v));
  }
  DegeneracyOrder out;
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    out.removal.push_back(v);
    out.degeneracy = std::max(out.degeneracy, d);
    for (EdgeIndex e : instance.incident(v)) {
      const VertexIndex w = instance.other(e, v);
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return out;
}

bool is_proper_coloring(const Instance& instance, const std::vector<int>& coloring) {
  if (coloring.size() != instance.vertex_count()) return false;
  return std::all_of(instance.edges().begin(), instance.edges().end(),
                     [&](const Edge& e) { return coloring[e.u] != coloring[e.v]; });
}

}  // namespace scancover
