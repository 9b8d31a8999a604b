#include "scancover/tree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "scancover/error.hpp"
#include "scancover/graph.hpp"

namespace scancover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

StarOrder held_karp(const std::vector<EdgeIndex>& edges,
                    const std::vector<std::vector<double>>& cost) {
  const int k = static_cast<int>(edges.size());
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<double> dp((full + 1) * k, kInf);
  std::vector<int> parent((full + 1) * k, -1);
  auto at = [k](std::size_t mask, int last) { return mask * k + last; };
  for (int i = 0; i < k; ++i) dp[at(std::size_t{1} << i, i)] = 0.0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (int last = 0; last < k; ++last) {
      const double base = dp[at(mask, last)];
      if (base == kInf) continue;
      for (int nxt = 0; nxt < k; ++nxt) {
        if (mask & (std::size_t{1} << nxt)) continue;
        const std::size_t grown = mask | (std::size_t{1} << nxt);
        const double c = base + cost[last][nxt];
        if (c < dp[at(grown, nxt)]) {
          dp[at(grown, nxt)] = c;
          parent[at(grown, nxt)] = last;
        }
      }
    }
  }
  int best = 0;
  for (int last = 1; last < k; ++last) {
    if (dp[at(full, last)] < dp[at(full, best)]) best = last;
  }
  StarOrder out{{}, dp[at(full, best)], true};
  std::size_t mask = full;
  for (int cur = best; cur != -1;) {
    out.order.push_back(edges[cur]);
    const int prev = parent[at(mask, cur)];
    mask &= ~(std::size_t{1} << cur);
    cur = prev;
  }
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

StarOrder nearest_neighbor(const std::vector<EdgeIndex>& edges,
                           const std::vector<std::vector<double>>& cost) {
  const int k = static_cast<int>(edges.size());
  int a = 0;
  int b = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (cost[i][j] < cost[a][b]) {
        a = i;
        b = j;
      }
    }
  }
  std::vector<bool> used(k, false);
  StarOrder out{{edges[a], edges[b]}, cost[a][b], false};
  used[a] = used[b] = true;
  int last = b;
  for (int step = 2; step < k; ++step) {
    int pick = -1;
    for (int j = 0; j < k; ++j) {
      if (!used[j] && (pick == -1 || cost[last][j] < cost[last][pick])) pick = j;
    }
    used[pick] = true;
    out.order.push_back(edges[pick]);
    out.path_cost += cost[last][pick];
    last = pick;
  }
  return out;
}

// One pass of the shifted cyclic schedules over the component of `root`,
// writing into `times`. Assumes the component is a tree.
void schedule_component(const Instance& instance, VertexIndex root, int exact_threshold,
                        std::vector<double>& times) {
  std::deque<VertexIndex> queue{root};
  std::vector<bool> seen(instance.vertex_count(), false);
  seen[root] = true;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    const CyclicOrder cyc = cyclic_order(instance, v, exact_threshold);
    if (cyc.edges.empty()) continue;
    std::size_t q = cyc.edges.size();
    for (std::size_t j = 0; j < cyc.edges.size(); ++j) {
      if (!std::isnan(times[cyc.edges[j]])) q = j;
    }
    const double len = cyc.cycle_length;
    for (std::size_t j = 0; j < cyc.edges.size(); ++j) {
      double t = cyc.offsets[j];
      if (q < cyc.edges.size()) {
        const double anchor = times[cyc.edges[q]];
        const double cq = cyc.offsets[q];
        if (len <= kAngleTolerance) {
          t = anchor;
        } else if (anchor < len) {
          // One full cycle inside [0, len) passing the parent edge at anchor.
          t = std::fmod(anchor + cyc.offsets[j] - cq + len, len);
        } else {
          // One full cycle ending at the parent edge.
          t = anchor - std::fmod(cq - cyc.offsets[j] + len, len);
        }
        if (j == q) t = anchor;
      }
      if (std::isnan(times[cyc.edges[j]])) times[cyc.edges[j]] = t;
    }
    for (EdgeIndex e : cyc.edges) {
      const VertexIndex w = instance.other(e, v);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
}

bool edges_form_tree(const Instance& instance) {
  if (!is_forest(instance)) return false;
  const auto label = connected_components(instance);
  int edge_component = -1;
  for (const Edge& e : instance.edges()) {
    if (edge_component == -1) edge_component = label[e.u];
    if (label[e.u] != edge_component) return false;
  }
  return true;
}

}  // namespace

StarOrder vertex_path_order(const Instance& instance, VertexIndex v, int exact_threshold) {
  const auto inc = instance.incident(v);
  std::vector<EdgeIndex> edges(inc.begin(), inc.end());
  std::sort(edges.begin(), edges.end());
  const int k = static_cast<int>(edges.size());
  if (k <= 1) return StarOrder{edges, 0.0, true};
  std::vector<std::vector<double>> cost(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) cost[i][j] = cost[j][i] = instance.cost(edges[i], edges[j]);
  }
  return k <= exact_threshold ? held_karp(edges, cost) : nearest_neighbor(edges, cost);
}

StarOrder star_order(const Instance& instance, VertexIndex center, int exact_threshold) {
  if (instance.edge_count() == 0 || instance.degree(center) != instance.edge_count()) {
    throw Error(ErrorCode::kNotAStar,
                "not every edge is incident to '" + instance.vertex(center).id + "'");
  }
  return vertex_path_order(instance, center, exact_threshold);
}

CyclicOrder cyclic_order(const Instance& instance, VertexIndex v, int exact_threshold) {
  const StarOrder path = vertex_path_order(instance, v, exact_threshold);
  CyclicOrder cyc;
  cyc.edges = path.order;
  double acc = 0.0;
  for (std::size_t j = 0; j < cyc.edges.size(); ++j) {
    if (j > 0) acc += instance.cost(cyc.edges[j - 1], cyc.edges[j]);
    cyc.offsets.push_back(acc);
  }
  cyc.cycle_length = acc;
  if (cyc.edges.size() >= 2) cyc.cycle_length += instance.cost(cyc.edges.back(), cyc.edges.front());
  return cyc;
}

ScanSchedule tree_approx(const Instance& instance, std::optional<VertexIndex> root,
                         int exact_threshold) {
  if (!edges_form_tree(instance)) {
    throw Error(ErrorCode::kNotATree, "graph has a cycle or more than one nontrivial component");
  }
  ScanSchedule schedule{std::vector<double>(instance.edge_count(), kNaN), "tree"};
  if (instance.edge_count() == 0) return schedule;
  if (!root) {
    for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
      if (instance.degree(static_cast<VertexIndex>(v)) > 0) {
        root = static_cast<VertexIndex>(v);
        break;
      }
    }
  }
  if (*root < 0 || static_cast<std::size_t>(*root) >= instance.vertex_count() ||
      instance.degree(*root) == 0) {
    throw Error(ErrorCode::kNotATree, "root must be a vertex with at least one edge");
  }
  schedule_component(instance, *root, exact_threshold, schedule.times);

  double horizon = 0.0;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    horizon = std::max(horizon,
                       cyclic_order(instance, static_cast<VertexIndex>(v), exact_threshold).cycle_length);
  }
  if (schedule.makespan() > horizon + kAngleTolerance) {
    throw std::logic_error("tree schedule exceeds the longest cycle");
  }
  return schedule;
}

std::vector<std::vector<EdgeIndex>> forest_decompose(const Instance& instance) {
  const auto order = degeneracy_order(instance);
  std::vector<int> position(instance.vertex_count());
  for (std::size_t i = 0; i < order.removal.size(); ++i) position[order.removal[i]] = static_cast<int>(i);
  std::vector<int> out_count(instance.vertex_count(), 0);
  std::vector<std::vector<EdgeIndex>> forests;
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& ed = instance.edge(static_cast<EdgeIndex>(e));
    const VertexIndex tail = position[ed.u] < position[ed.v] ? ed.u : ed.v;
    const int slot = out_count[tail]++;
    if (static_cast<std::size_t>(slot) >= forests.size()) forests.resize(slot + 1);
    forests[slot].push_back(static_cast<EdgeIndex>(e));
  }
  return forests;
}

ScanSchedule arboricity_approx(const Instance& instance, int exact_threshold) {
  std::vector<double> placed(instance.edge_count(), kNaN);
  for (const auto& forest : forest_decompose(instance)) {
    const Instance sub = instance.edge_subgraph(forest);
    std::vector<double> local(sub.edge_count(), kNaN);
    std::vector<bool> rooted(sub.vertex_count(), false);
    const auto label = connected_components(sub);
    for (std::size_t v = 0; v < sub.vertex_count(); ++v) {
      const auto vi = static_cast<VertexIndex>(v);
      if (sub.degree(vi) == 0 || rooted[label[v]]) continue;
      rooted[label[v]] = true;
      schedule_component(sub, vi, exact_threshold, local);
    }
    std::vector<double> incoming(instance.edge_count(), kNaN);
    for (std::size_t i = 0; i < forest.size(); ++i) incoming[forest[i]] = local[i];
    append_at_minimal_offset(instance, placed, incoming);
  }
  ScanSchedule schedule{std::move(placed), "arboricity"};
  normalize_start(schedule);
  return schedule;
}

}  // namespace scancover
