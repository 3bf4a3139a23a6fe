#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bmat {

enum class ErrorKind {
  kNotBMatrix,
  kNotSdd,
  kNotSddMMatrix,
  kDimensionTooSmall,
  kDimensionTooLarge,
  kDimensionMismatch,
  kSingularMatrix,
  kNonFiniteEntry,
  kParameterOutOfRange,
  kNoSolutionFound,
  kSampleBudgetExceeded,
  kParse,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this type; callers dispatch on
// kind() (the CLI maps kinds to exit codes).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the 1-based line number of the offending input line
// (0 when the failure is not tied to a line, e.g. an empty file).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorKind::kParse, what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace bmat
