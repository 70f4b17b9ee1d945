#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snakeforge {

enum class ErrorKind {
  // input / usage
  ParseError,
  UsageError,
  InvalidPermutation,
  InvalidArgument,
  IndexOutOfRange,
  MalformedTree,
  // domain
  EqualPolynomials,
  NotAlternating,
  DuplicateValues,
  NotSeparable,
  LeafOnly,
  UnsortedRoots,
  DuplicateRoot,
  NonzeroConstantTerm,
  NotBinary,
  NotEndRooted,
  NonBinaryTree,
  NotASnake,
  WrongOrientation,
  WitnessSearchExhausted,
  NonPositiveLeading,
  NotMorse,
  // a formula disagreed with its oracle, or a proven property failed
  ContractViolation,
};

std::string_view to_string(ErrorKind kind);

enum class ErrorCategory { Usage, Domain, Internal };

ErrorCategory category_of(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace snakeforge
