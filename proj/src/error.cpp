#include "cubekit/error.hpp"

namespace cubekit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRejectLoop: return "REJECT_LOOP";
    case ErrorCode::kRejectRange: return "REJECT_RANGE";
    case ErrorCode::kDisconnectedPair: return "DISCONNECTED_PAIR";
    case ErrorCode::kNotAnEdge: return "NOT_AN_EDGE";
    case ErrorCode::kNotPartialCube: return "NOT_PARTIAL_CUBE";
    case ErrorCode::kLabelingNotIsometric: return "LABELING_NOT_ISOMETRIC";
    case ErrorCode::kInducedDisconnected: return "INDUCED_DISCONNECTED";
    case ErrorCode::kNotACycle: return "NOT_A_CYCLE";
    case ErrorCode::kOracleBoundExceeded: return "ORACLE_BOUND_EXCEEDED";
    case ErrorCode::kParamRange: return "PARAM_RANGE";
    case ErrorCode::kNotAPath: return "NOT_A_PATH";
    case ErrorCode::kPathTooShort: return "PATH_TOO_SHORT";
    case ErrorCode::kSizeBoundExceeded: return "SIZE_BOUND_EXCEEDED";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kInternalTheoremViolation: return "INTERNAL_THEOREM_VIOLATION";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + message),
      line_(line),
      column_(column) {}

}  // namespace cubekit
