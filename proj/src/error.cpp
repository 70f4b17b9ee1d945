#include "snakeforge/error.hpp"

namespace snakeforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MalformedTree: return "MalformedTree";
    case ErrorKind::EqualPolynomials: return "EqualPolynomials";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::DuplicateValues: return "DuplicateValues";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::LeafOnly: return "LeafOnly";
    case ErrorKind::UnsortedRoots: return "UnsortedRoots";
    case ErrorKind::DuplicateRoot: return "DuplicateRoot";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NotBinary: return "NotBinary";
    case ErrorKind::NotEndRooted: return "NotEndRooted";
    case ErrorKind::NonBinaryTree: return "NonBinaryTree";
    case ErrorKind::NotASnake: return "NotASnake";
    case ErrorKind::WrongOrientation: return "WrongOrientation";
    case ErrorKind::WitnessSearchExhausted: return "WitnessSearchExhausted";
    case ErrorKind::NonPositiveLeading: return "NonPositiveLeading";
    case ErrorKind::NotMorse: return "NotMorse";
    case ErrorKind::ContractViolation: return "ContractViolation";
  }
  return "UnknownError";
}

ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UsageError:
    case ErrorKind::InvalidPermutation:
    case ErrorKind::InvalidArgument:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::MalformedTree:
      return ErrorCategory::Usage;
    case ErrorKind::ContractViolation:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Domain;
  }
}

}  // namespace snakeforge
