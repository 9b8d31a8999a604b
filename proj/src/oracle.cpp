#include "scancover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "scancover/bounds.hpp"
#include "scancover/error.hpp"
#include "scancover/tree.hpp"

namespace scancover {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Every vertex scans its edges one after another, so the cheapest path
// through them bounds the makespan from below.
double vertex_path_bound(const Instance& instance) {
  double bound = 0.0;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto vi = static_cast<VertexIndex>(v);
    const auto inc = instance.incident(vi);
    if (inc.size() < 2) continue;
    if (static_cast<int>(inc.size()) <= kExactPathThreshold) {
      bound = std::max(bound, vertex_path_order(instance, vi).path_cost);
      continue;
    }
    double cheapest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        cheapest = std::min(cheapest, instance.cost(inc[i], inc[j]));
      }
    }
    bound = std::max(bound, static_cast<double>(inc.size() - 1) * cheapest);
  }
  return bound;
}

struct Neighbor {
  EdgeIndex edge;
  double cost;
};

std::vector<std::vector<Neighbor>> edge_neighbors(const Instance& instance) {
  std::vector<std::vector<Neighbor>> out(instance.edge_count());
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto inc = instance.incident(static_cast<VertexIndex>(v));
    for (EdgeIndex a : inc) {
      for (EdgeIndex b : inc) {
        if (a != b) out[a].push_back({b, instance.cost(a, b)});
      }
    }
  }
  return out;
}

class OrderSearch {
 public:
  OrderSearch(const Instance& instance, double static_bound)
      : m_(instance.edge_count()),
        neighbors_(edge_neighbors(instance)),
        static_bound_(static_bound),
        times_(m_, kNaN) {}

  void run(std::vector<EdgeIndex> incumbent, double incumbent_value) {
    best_order_ = std::move(incumbent);
    best_ = incumbent_value;
    if (best_ <= static_bound_ + kAngleTolerance) return;
    order_.reserve(m_);
    dfs(-1, 0.0);
  }

  const std::vector<EdgeIndex>& best_order() const { return best_order_; }
  long long nodes() const { return nodes_; }

 private:
  double earliest(EdgeIndex f) const {
    double t = 0.0;
    for (const Neighbor& g : neighbors_[f]) {
      if (!std::isnan(times_[g.edge])) t = std::max(t, times_[g.edge] + g.cost);
    }
    return t;
  }

  bool incident(EdgeIndex a, EdgeIndex b) const {
    return std::any_of(neighbors_[a].begin(), neighbors_[a].end(),
                       [b](const Neighbor& n) { return n.edge == b; });
  }

  void dfs(EdgeIndex last, double makespan) {
    ++nodes_;
    if (order_.size() == m_) {
      if (makespan < best_ - kAngleTolerance) {
        best_ = makespan;
        best_order_ = order_;
      }
      return;
    }
    std::vector<double> start(m_, kNaN);
    double bound = std::max(makespan, static_bound_);
    for (std::size_t f = 0; f < m_; ++f) {
      if (!std::isnan(times_[f])) continue;
      start[f] = earliest(static_cast<EdgeIndex>(f));
      bound = std::max(bound, start[f]);
    }
    if (bound >= best_ - kAngleTolerance) return;
    for (std::size_t f = 0; f < m_; ++f) {
      if (std::isnan(start[f])) continue;
      const auto fi = static_cast<EdgeIndex>(f);
      // Swapping adjacent independent edges yields the same schedule.
      if (last >= 0 && fi < last && !incident(fi, last)) continue;
      times_[f] = start[f];
      order_.push_back(fi);
      dfs(fi, std::max(makespan, start[f]));
      order_.pop_back();
      times_[f] = kNaN;
      if (best_ <= static_bound_ + kAngleTolerance) return;
    }
  }

  std::size_t m_;
  std::vector<std::vector<Neighbor>> neighbors_;
  double static_bound_;
  std::vector<double> times_;
  std::vector<EdgeIndex> order_;
  std::vector<EdgeIndex> best_order_;
  double best_ = 0.0;
  long long nodes_ = 0;
};

struct SlotNeighbor {
  EdgeIndex edge;
  int gap;
};

class SlotSearch {
 public:
  SlotSearch(std::vector<std::vector<SlotNeighbor>> neighbors, int top)
      : neighbors_(std::move(neighbors)), top_(top), value_(neighbors_.size(), -1) {}

  bool run() {
    const std::uint64_t full = top_ >= 63 ? ~0ull : (1ull << (top_ + 1)) - 1;
    return search(std::vector<std::uint64_t>(neighbors_.size(), full), true);
  }

  const std::vector<int>& values() const { return value_; }

 private:
  bool search(const std::vector<std::uint64_t>& domain, bool first) {
    int pick = -1;
    for (std::size_t e = 0; e < domain.size(); ++e) {
      if (value_[e] >= 0) continue;
      if (pick < 0 || std::popcount(domain[e]) < std::popcount(domain[pick])) {
        pick = static_cast<int>(e);
      }
    }
    if (pick < 0) return true;
    std::uint64_t options = domain[pick];
    // Reversing time maps solutions to solutions; fix the first edge in the
    // lower half.
    if (first) options &= (top_ / 2 >= 63) ? ~0ull : (1ull << (top_ / 2 + 1)) - 1;
    while (options) {
      const int s = std::countr_zero(options);
      options &= options - 1;
      std::vector<std::uint64_t> next = domain;
      value_[pick] = s;
      bool alive = true;
      for (const SlotNeighbor& nb : neighbors_[pick]) {
        if (value_[nb.edge] >= 0 || nb.gap == 0) continue;
        const int lo = std::max(0, s - nb.gap + 1);
        const int hi = std::min(top_, s + nb.gap - 1);
        for (int x = lo; x <= hi; ++x) next[nb.edge] &= ~(1ull << x);
        if (!next[nb.edge]) {
          alive = false;
          break;
        }
      }
      if (alive && search(next, false)) return true;
      value_[pick] = -1;
    }
    return false;
  }

  std::vector<std::vector<SlotNeighbor>> neighbors_;
  int top_;
  std::vector<int> value_;
};

}  // namespace

int oracle_limit(int fallback) {
  const char* env = std::getenv("SCANCOVER_ORACLE_LIMIT");
  if (!env) return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  return (end && *end == '\0' && v > 0 && v < 1000) ? static_cast<int>(v) : fallback;
}

OrderSearchResult exact_order_search(const Instance& instance, int edge_limit) {
  const auto m = instance.edge_count();
  if (static_cast<int>(m) > edge_limit) {
    throw Error(ErrorCode::kTooLarge, std::to_string(m) + " edges exceed the order-search limit " +
                                          std::to_string(edge_limit));
  }
  std::vector<EdgeIndex> identity(m);
  for (std::size_t e = 0; e < m; ++e) identity[e] = static_cast<EdgeIndex>(e);
  const double start_value = schedule_from_order(instance, identity).makespan();

  OrderSearch search(instance, vertex_path_bound(instance));
  search.run(identity, start_value);
  OrderSearchResult result;
  result.order = search.best_order();
  result.schedule = schedule_from_order(instance, result.order, "oracle");
  result.nodes = search.nodes();
  return result;
}

StepResult discrete_step_oracle(const Instance& instance, double step, int max_steps) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::kCostsNotDiscrete, "step must be positive");
  }
  max_steps = std::min(max_steps, 64);
  const auto m = instance.edge_count();
  std::vector<std::vector<SlotNeighbor>> neighbors(m);
  int need = 0;
  for (std::size_t v = 0; v < instance.vertex_count(); ++v) {
    const auto inc = instance.incident(static_cast<VertexIndex>(v));
    for (EdgeIndex a : inc) {
      for (EdgeIndex b : inc) {
        if (a == b) continue;
        const double c = instance.cost(a, b);
        const double ratio = c / step;
        const double k = std::round(ratio);
        if (std::abs(ratio - k) * step > kAngleTolerance) {
          throw Error(ErrorCode::kCostsNotDiscrete, "cost " + std::to_string(c) +
                                                        " is not a multiple of " +
                                                        std::to_string(step));
        }
        neighbors[a].push_back({b, static_cast<int>(k)});
        need = std::max(need, static_cast<int>(k));
      }
    }
  }
  // A pair with gap k forces at least k + 1 slots.
  for (int top = need; top < max_steps; ++top) {
    SlotSearch search(neighbors, top);
    if (!search.run()) continue;
    StepResult result;
    result.steps = top + 1;
    result.schedule = ScanSchedule{std::vector<double>(m), "oracle-discrete"};
    for (std::size_t e = 0; e < m; ++e) result.schedule.times[e] = search.values()[e] * step;
    normalize_start(result.schedule);
    return result;
  }
  throw Error(ErrorCode::kNoSolutionWithin,
              "no schedule with at most " + std::to_string(max_steps) + " steps");
}

LineResult exact_1d(const Instance& instance, int vertex_limit) {
  if (instance.dimension() != Dimension::kOne) {
    throw Error(ErrorCode::kInapplicable, "bit schedules need a 1D instance");
  }
  const auto n = instance.vertex_count();
  if (static_cast<int>(n) > vertex_limit) {
    throw Error(ErrorCode::kTooLarge, std::to_string(n) + " vertices exceed the 1D oracle limit " +
                                          std::to_string(vertex_limit));
  }
  LineResult result;
  result.bits.vectors.assign(n, 0);
  if (instance.edge_count() == 0) {
    result.steps = result.bits.steps = 1;
    return result;
  }
  const auto order = instance.line_order();
  const auto rank = instance.line_rank();
  std::vector<std::vector<int>> left(n);  // positions of left neighbors
  std::vector<bool> has_right(n, false);
  for (const Edge& e : instance.edges()) {
    const int a = std::min(rank[e.u], rank[e.v]);
    const int b = std::max(rank[e.u], rank[e.v]);
    left[b].push_back(a);
    has_right[a] = true;
  }

  const int top = std::max(1, static_cast<int>(std::bit_width(n - 1)));
  for (int steps = 1; steps <= top; ++steps) {
    const std::uint64_t mask = (1ull << steps) - 1;
    std::vector<std::uint64_t> value(n, 0);

    // Steps are interchangeable: columns that agree on all placed vertices
    // must carry non-increasing bits for the next vertex.
    auto canonical = [&](int p, std::uint64_t s) {
      for (int a = 0; a < steps; ++a) {
        for (int b = a + 1; b < steps; ++b) {
          if (((s >> a) & 1u) >= ((s >> b) & 1u)) continue;
          bool same = true;
          for (int q = 0; q < p && same; ++q) same = ((value[q] >> a) & 1u) == ((value[q] >> b) & 1u);
          if (same) return false;
        }
      }
      return true;
    };
    auto place = [&](auto&& self, int p) -> bool {
      if (p == static_cast<int>(n)) return true;
      std::vector<std::uint64_t> options;
      if (left[p].empty()) {
        options.push_back(0);  // facing right never hurts
      } else if (!has_right[p]) {
        options.push_back(mask);  // facing left never hurts
      } else {
        for (std::uint64_t s = 0; s <= mask; ++s) options.push_back(s);
      }
      for (std::uint64_t s : options) {
        if (!canonical(p, s)) continue;
        bool ok = true;
        for (int q : left[p]) ok = ok && (~value[q] & s & mask);
        if (!ok) continue;
        value[p] = s;
        if (self(self, p + 1)) return true;
      }
      return false;
    };
    if (place(place, 0)) {
      result.steps = result.bits.steps = steps;
      for (std::size_t p = 0; p < n; ++p) result.bits.vectors[order[p]] = value[p];
      return result;
    }
  }
  throw std::logic_error("1D search exhausted the rank construction");
}

NaeResult nae3sat_check(const Formula& formula) {
  NaeResult result;
  result.variables = formula_variables(formula);
  const auto count = result.variables.size();
  if (count > static_cast<std::size_t>(kNaeVariableLimit)) {
    throw Error(ErrorCode::kTooManyVariables, std::to_string(count) + " variables exceed " +
                                                  std::to_string(kNaeVariableLimit));
  }
  std::vector<std::array<int, 3>> index(formula.size());
  for (std::size_t c = 0; c < formula.size(); ++c) {
    for (int k = 0; k < 3; ++k) {
      index[c][k] = static_cast<int>(
          std::find(result.variables.begin(), result.variables.end(), formula[c][k].variable) -
          result.variables.begin());
    }
  }
  for (std::uint64_t mask = 0; mask < (1ull << count); ++mask) {
    bool ok = true;
    for (std::size_t c = 0; c < formula.size() && ok; ++c) {
      int truths = 0;
      for (int k = 0; k < 3; ++k) {
        const bool value = (mask >> index[c][k]) & 1u;
        truths += value != formula[c][k].negated;
      }
      ok = truths != 0 && truths != 3;
    }
    if (ok) {
      result.satisfiable = true;
      for (std::size_t i = 0; i < count; ++i) result.witness.push_back((mask >> i) & 1u);
      return result;
    }
  }
  return result;
}

int exact_chromatic(const Instance& instance, int vertex_limit) {
  const auto n = instance.vertex_count();
  if (static_cast<int>(n) > vertex_limit) {
    throw Error(ErrorCode::kTooLarge, std::to_string(n) + " vertices exceed the coloring limit " +
                                          std::to_string(vertex_limit));
  }
  if (n == 0) return 0;
  if (instance.edge_count() == 0) return 1;
  std::vector<VertexIndex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<VertexIndex>(v);
  std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) {
    return instance.degree(a) > instance.degree(b);
  });
  std::vector<int> color(n, -1);
  auto colorable = [&](auto&& self, std::size_t p, int k, int used) -> bool {
    if (p == n) return true;
    const VertexIndex v = order[p];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool free = true;
      for (EdgeIndex e : instance.incident(v)) free = free && color[instance.other(e, v)] != c;
      if (!free) continue;
      color[v] = c;
      if (self(self, p + 1, k, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int k = clique_lower_bound(instance);; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (colorable(colorable, 0, k, 0)) return k;
  }
}

}  // namespace scancover
