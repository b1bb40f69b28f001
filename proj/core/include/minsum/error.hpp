#pragma once

#include <stdexcept>
#include <string>

namespace minsum {

enum class ErrorCode {
  kInvalidSpace,
  kInvalidPosition,
  kDegenerateSegment,
  kDuplicatePosition,
  kIndexOutOfRange,
  kCalledOnAsymmetric,
  kConfigSymmetric,
  kTooLarge,
  kPreconditionViolated,
  kUnsolvable,
  kInvalidPolicy,
  kParse,
  kCollision,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Scenario/trace parse failure with a 1-based line number (0 = unknown).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what, ErrorCode code = ErrorCode::kParse)
      : Error(code, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace minsum
