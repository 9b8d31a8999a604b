#include "scancover/error.hpp"

namespace scancover {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotIncident: return "NotIncident";
    case ErrorCode::kDegenerateEdge: return "DegenerateEdge";
    case ErrorCode::kIncompleteOrder: return "IncompleteOrder";
    case ErrorCode::kInfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kNotComplete: return "NotComplete";
    case ErrorCode::kImproperColoring: return "ImproperColoring";
    case ErrorCode::kCoverViolation: return "CoverViolation";
    case ErrorCode::kNotBipartitePartition: return "NotBipartitePartition";
    case ErrorCode::kInvalidTrajectory: return "InvalidTrajectory";
    case ErrorCode::kNotAStar: return "NotAStar";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCostsNotDiscrete: return "CostsNotDiscrete";
    case ErrorCode::kNoSolutionWithin: return "NoSolutionWithin";
    case ErrorCode::kTooManyVariables: return "TooManyVariables";
    case ErrorCode::kMalformedFormula: return "MalformedFormula";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInapplicable: return "Inapplicable";
  }
  return "Unknown";
}

}  // namespace scancover
