#include "bmat/error.hpp"

namespace bmat {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotBMatrix: return "NotBMatrix";
    case ErrorKind::kNotSdd: return "NotSDD";
    case ErrorKind::kNotSddMMatrix: return "NotSddMMatrix";
    case ErrorKind::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kSingularMatrix: return "SingularMatrix";
    case ErrorKind::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorKind::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::kNoSolutionFound: return "NoSolutionFound";
    case ErrorKind::kSampleBudgetExceeded: return "SampleBudgetExceeded";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace bmat
