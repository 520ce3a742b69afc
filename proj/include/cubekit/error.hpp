#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubekit {

enum class ErrorCode {
  kRejectLoop,
  kRejectRange,
  kDisconnectedPair,
  kNotAnEdge,
  kNotPartialCube,
  kLabelingNotIsometric,
  kInducedDisconnected,
  kNotACycle,
  kOracleBoundExceeded,
  kParamRange,
  kNotAPath,
  kPathTooShort,
  kSizeBoundExceeded,
  kParseError,
  kInternalTheoremViolation,
};

// Upper-snake name used in reports and CLI diagnostics, e.g. "NOT_AN_EDGE".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry a 1-based position into the input text.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cubekit
