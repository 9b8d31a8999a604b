#include "scancover/line.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "scancover/error.hpp"
#include "scancover/graph.hpp"

namespace scancover {

namespace {

void require_line(const Instance& instance) {
  if (instance.dimension() != Dimension::kOne) {
    throw Error(ErrorCode::kInapplicable, "bit schedules need a 1D instance");
  }
}

// Steps where the left endpoint faces right and the right endpoint faces left.
std::uint64_t covering_steps(const BitSchedule& bs, VertexIndex left, VertexIndex right) {
  const std::uint64_t mask = bs.steps >= 64 ? ~0ull : (1ull << bs.steps) - 1;
  return ~bs.vectors[left] & bs.vectors[right] & mask;
}

}  // namespace

std::string bits_to_string(std::uint64_t bits, int steps) {
  std::string s(static_cast<std::size_t>(steps), '0');
  for (int i = 0; i < steps; ++i) {
    if ((bits >> i) & 1u) s[i] = '1';
  }
  return s;
}

std::uint64_t bits_from_string(const std::string& text) {
  if (text.size() > static_cast<std::size_t>(kMaxSteps)) {
    throw Error(ErrorCode::kParse, "bit vector longer than 64 steps");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= 1ull << i;
    } else if (text[i] != '0') {
      throw Error(ErrorCode::kParse, "bit vector '" + text + "' contains a non-binary character");
    }
  }
  return bits;
}

bool covers(const Instance& instance, const BitSchedule& bs) {
  const auto rank = instance.line_rank();
  for (const Edge& e : instance.edges()) {
    const bool u_left = rank[e.u] < rank[e.v];
    if (!covering_steps(bs, u_left ? e.u : e.v, u_left ? e.v : e.u)) return false;
  }
  return true;
}

BitSchedule solve_bipartite_1d(const Instance& instance) {
  require_line(instance);
  const auto sides = bipartition(instance);
  if (!sides) throw Error(ErrorCode::kNotBipartite, "graph contains an odd cycle");
  const auto rank = instance.line_rank();
  const auto n = instance.vertex_count();

  BitSchedule one{1, std::vector<std::uint64_t>(n, 0)};
  bool one_sided = true;
  for (std::size_t v = 0; v < n && one_sided; ++v) {
    bool left = false;
    bool right = false;
    for (EdgeIndex e : instance.incident(static_cast<VertexIndex>(v))) {
      const VertexIndex w = instance.other(e, static_cast<VertexIndex>(v));
      (rank[w] < rank[v] ? left : right) = true;
    }
    one_sided = !(left && right);
    one.vectors[v] = left ? 1 : 0;
  }
  if (one_sided) return one;

  // Class 0 gets "01" and class 1 gets "10": whichever class is on the left
  // of an edge, one of the two steps covers it.
  BitSchedule two{2, std::vector<std::uint64_t>(n, 0)};
  for (std::size_t v = 0; v < n; ++v) two.vectors[v] = (*sides)[v] == 0 ? 0b10 : 0b01;
  return two;
}

BitSchedule solve_complete_1d(const Instance& instance) {
  require_line(instance);
  const auto n = instance.vertex_count();
  if (n < 2 || !is_complete(instance)) {
    throw Error(ErrorCode::kNotComplete, "expected a complete graph on at least 2 vertices");
  }
  const int steps = std::bit_width(n - 1);
  const auto rank = instance.line_rank();
  BitSchedule bs{steps, std::vector<std::uint64_t>(n, 0)};
  for (std::size_t v = 0; v < n; ++v) {
    for (int j = 0; j < steps; ++j) {
      if ((static_cast<std::uint64_t>(rank[v]) >> (steps - 1 - j)) & 1u) bs.vectors[v] |= 1ull << j;
    }
  }
  return bs;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

int steps_for_colors(int colors) {
  const double c = std::max(colors, 2);
  const double raw = std::log2(c) + 0.5 * std::log2(std::log2(c)) + 1.0;
  int steps = static_cast<int>(std::ceil(raw - 1e-12));
  if (binomial(steps, steps / 2) < static_cast<std::uint64_t>(c)) {
    throw std::logic_error("step formula infeasible for " + std::to_string(colors) + " colors");
  }
  while (steps > 1 && binomial(steps - 1, (steps - 1) / 2) >= static_cast<std::uint64_t>(c)) {
    --steps;
  }
  return steps;
}

BitSchedule vectors_from_coloring(const Instance& instance, const std::vector<int>& coloring) {
  require_line(instance);
  if (coloring.size() != instance.vertex_count()) {
    throw Error(ErrorCode::kImproperColoring, "coloring size does not match the vertex count");
  }
  for (const Edge& e : instance.edges()) {
    if (coloring[e.u] == coloring[e.v]) {
      throw Error(ErrorCode::kImproperColoring, "adjacent vertices '" + instance.vertex(e.u).id +
                                                    "' and '" + instance.vertex(e.v).id +
                                                    "' share color " + std::to_string(coloring[e.u]));
    }
  }
  std::map<int, int> class_index;
  for (int c : coloring) class_index.emplace(c, 0);
  int next = 0;
  for (auto& [color, index] : class_index) index = next++;

  const int steps = steps_for_colors(static_cast<int>(class_index.size()));
  const int ones = steps / 2;
  if (steps > 20) throw Error(ErrorCode::kTooLarge, "too many colors for vector enumeration");
  // Strings of length `steps` with `ones` ones, lexicographically: exactly the
  // permutations of "0..01..1".
  std::string word = std::string(steps - ones, '0') + std::string(ones, '1');
  std::vector<std::uint64_t> family;
  do {
    family.push_back(bits_from_string(word));
  } while (family.size() < class_index.size() && std::next_permutation(word.begin(), word.end()));

  BitSchedule bs{steps, std::vector<std::uint64_t>(instance.vertex_count(), 0)};
  for (std::size_t v = 0; v < coloring.size(); ++v) bs.vectors[v] = family[class_index[coloring[v]]];
  return bs;
}

ScanSchedule bitschedule_to_schedule(const BitSchedule& bs, const Instance& instance) {
  require_line(instance);
  if (bs.vectors.size() != instance.vertex_count()) {
    throw Error(ErrorCode::kCoverViolation, "bit schedule size does not match the vertex count");
  }
  const auto rank = instance.line_rank();
  ScanSchedule schedule{std::vector<double>(instance.edge_count(), 0.0), "bits-1d"};
  for (std::size_t e = 0; e < instance.edge_count(); ++e) {
    const Edge& ed = instance.edge(static_cast<EdgeIndex>(e));
    const bool u_left = rank[ed.u] < rank[ed.v];
    const std::uint64_t steps = covering_steps(bs, u_left ? ed.u : ed.v, u_left ? ed.v : ed.u);
    if (!steps) {
      throw Error(ErrorCode::kCoverViolation, "no step covers edge " + instance.vertex(ed.u).id +
                                                  "-" + instance.vertex(ed.v).id);
    }
    schedule.times[e] = 180.0 * std::countr_zero(steps);
  }
  return schedule;
}

}  // namespace scancover
