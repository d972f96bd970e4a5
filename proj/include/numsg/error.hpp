#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

enum class ErrorCode {
  EmptyInput,
  InvalidArgument,
  NonCoprime,
  Overflow,
  NotAMember,
  NotSymmetric,
  NotCoprime,
  PNotMember,
  QNotMember,
  PIsGenerator,
  QIsGenerator,
  NotSpecific,
  NotRepresentable,
  UnknownTheorem,
  BoundsTooSmall,
};

std::string_view to_string(ErrorCode code);

/// Recoverable failure caused by bad input (the caller asked for something
/// that is not defined, e.g. an Apéry set with respect to a non-member).
class SemigroupError : public std::runtime_error {
 public:
  SemigroupError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A proved identity failed to hold. Always a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw SemigroupError(code, what);
}

inline void ensure_invariant(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace numsg
