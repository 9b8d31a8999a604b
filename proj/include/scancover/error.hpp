#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scancover {

enum class ErrorCode {
  kInvalidInstance,
  kParse,
  kNotIncident,
  kDegenerateEdge,
  kIncompleteOrder,
  kInfeasibleSchedule,
  kNotBipartite,
  kNotComplete,
  kImproperColoring,
  kCoverViolation,
  kNotBipartitePartition,
  kInvalidTrajectory,
  kNotAStar,
  kNotATree,
  kTooLarge,
  kCostsNotDiscrete,
  kNoSolutionWithin,
  kTooManyVariables,
  kMalformedFormula,
  kDimensionMismatch,
  kInapplicable,
};

std::string_view error_code_name(ErrorCode code);

// All recoverable failures of the library surface as this exception; the
// code lets callers (tests, the CLI) branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scancover
