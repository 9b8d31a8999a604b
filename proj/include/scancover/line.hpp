#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scancover/instance.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

// Discrete 1D scan cover: at every step each vertex faces right (bit 0) or
// left (bit 1). Bit i of vectors[v] is the heading of v during step i + 1.
struct BitSchedule {
  int steps = 0;
  std::vector<std::uint64_t> vectors;  // indexed by vertex

  bool bit(VertexIndex v, int step) const { return (vectors[v] >> step) & 1u; }
};

inline constexpr int kMaxSteps = 64;

// "0110": character i is the heading during step i + 1.
std::string bits_to_string(std::uint64_t bits, int steps);
std::uint64_t bits_from_string(const std::string& text);

// Some edge uv with u left of v lacks a step where u faces right and v left.
bool covers(const Instance& instance, const BitSchedule& bs);

// One step when every vertex sees all its neighbors on one side, else two.
// Throws kNotBipartite.
BitSchedule solve_bipartite_1d(const Instance& instance);

// ceil(log2 n) steps: step j splits the line by bit j of the vertex rank,
// most significant first. Throws kNotComplete.
BitSchedule solve_complete_1d(const Instance& instance);

std::uint64_t binomial(int n, int k);

// ceil(log2 C + 1/2 log2 log2 C + 1), lowered while C <= binom(N, N/2)
// still holds. C < 2 is treated as 2.
int steps_for_colors(int colors);

// Weight floor(N/2) vectors in lexicographic order, one per color class
// (classes ordered by color value). Throws kImproperColoring.
BitSchedule vectors_from_coloring(const Instance& instance, const std::vector<int>& coloring);

// Each edge at 180 * (i - 1) for the first step i that covers it. Throws
// kCoverViolation.
ScanSchedule bitschedule_to_schedule(const BitSchedule& bs, const Instance& instance);

}  // namespace scancover
