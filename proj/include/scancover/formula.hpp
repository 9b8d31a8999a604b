#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace scancover {

struct Literal {
  std::string variable;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;
using Formula = std::vector<Clause>;

// "(x1,x2,!x3)(x1,!x2,x4)": parenthesized triples of literals, '!' negates.
// Whitespace is ignored. Throws kMalformedFormula.
Formula parse_formula(std::string_view text);

std::string format_formula(const Formula& formula);

// Variable names in order of first appearance.
std::vector<std::string> formula_variables(const Formula& formula);

}  // namespace scancover
