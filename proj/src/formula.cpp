#include "scancover/formula.hpp"

#include <algorithm>
#include <cctype>

#include "scancover/error.hpp"

namespace scancover {

namespace {

[[noreturn]] void malformed(const std::string& msg) {
  throw Error(ErrorCode::kMalformedFormula, msg);
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

}  // namespace

Formula parse_formula(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  Formula formula;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') malformed("expected '(' at position " + std::to_string(i));
    ++i;
    Clause clause;
    for (int k = 0; k < 3; ++k) {
      Literal lit;
      if (i < s.size() && s[i] == '!') {
        lit.negated = true;
        ++i;
      }
      const std::size_t start = i;
      while (i < s.size() && is_name_char(s[i])) ++i;
      if (i == start) malformed("missing variable name at position " + std::to_string(i));
      lit.variable = s.substr(start, i - start);
      clause[k] = std::move(lit);
      const char want = k < 2 ? ',' : ')';
      if (i >= s.size() || s[i] != want) {
        malformed(std::string("expected '") + want + "' at position " + std::to_string(i));
      }
      ++i;
    }
    formula.push_back(std::move(clause));
  }
  if (formula.empty()) malformed("formula has no clauses");
  return formula;
}

std::string format_formula(const Formula& formula) {
  std::string out;
  for (const Clause& clause : formula) {
    out += '(';
    for (int k = 0; k < 3; ++k) {
      if (k) out += ',';
      if (clause[k].negated) out += '!';
      out += clause[k].variable;
    }
    out += ')';
  }
  return out;
}

std::vector<std::string> formula_variables(const Formula& formula) {
  std::vector<std::string> vars;
  for (const Clause& clause : formula) {
    for (const Literal& lit : clause) {
      if (std::find(vars.begin(), vars.end(), lit.variable) == vars.end()) {
        vars.push_back(lit.variable);
      }
    }
  }
  return vars;
}

}  // namespace scancover
