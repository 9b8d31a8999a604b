#pragma once

#include <string>
#include <vector>

#include "scancover/formula.hpp"
#include "scancover/instance.hpp"
#include "scancover/line.hpp"
#include "scancover/schedule.hpp"

namespace scancover {

inline constexpr int kDefaultEdgeLimit = 9;
inline constexpr int kDefaultLineVertexLimit = 10;
inline constexpr int kDefaultChromaticVertexLimit = 14;
inline constexpr int kNaeVariableLimit = 20;

// Value of SCANCOVER_ORACLE_LIMIT if set to a positive integer, else
// `fallback`.
int oracle_limit(int fallback);

struct OrderSearchResult {
  ScanSchedule schedule;
  std::vector<EdgeIndex> order;
  long long nodes = 0;  // search nodes expanded
};

// Optimal schedule by depth-first branch and bound over edge orders
// (lexicographic, consecutive non-incident edges kept in increasing index
// order). Throws kTooLarge above `edge_limit` edges.
OrderSearchResult exact_order_search(const Instance& instance, int edge_limit = kDefaultEdgeLimit);

struct StepResult {
  int steps = 0;  // number of distinct time slots, K + 1
  ScanSchedule schedule;
};

// Fewest slots {0, step, ..., K step} admitting a valid schedule. Throws
// kCostsNotDiscrete unless every transition cost is a multiple of `step`,
// kNoSolutionWithin if more than `max_steps` slots would be needed.
StepResult discrete_step_oracle(const Instance& instance, double step, int max_steps);

struct LineResult {
  int steps = 0;
  BitSchedule bits;
};

// Fewest steps of a bit schedule by backtracking along the line. Throws
// kTooLarge above `vertex_limit` vertices.
LineResult exact_1d(const Instance& instance, int vertex_limit = kDefaultLineVertexLimit);

struct NaeResult {
  bool satisfiable = false;
  std::vector<std::string> variables;  // order of first appearance
  std::vector<bool> witness;           // assignment for `variables`
};

// Brute force over all assignments in increasing binary order (variable i
// is bit i). Throws kTooManyVariables above 20 variables.
NaeResult nae3sat_check(const Formula& formula);

// Exact chromatic number by backtracking. Throws kTooLarge above
// `vertex_limit` vertices.
int exact_chromatic(const Instance& instance, int vertex_limit = kDefaultChromaticVertexLimit);

}  // namespace scancover
