#pragma once

#include <stdexcept>
#include <string>

namespace relheight {

enum class ErrorKind {
  ZeroInput,
  DegreeLimit,
  CertificationFailure,
  IllConditioned,
  InconclusiveCheck,
  NotAField,
  PrecisionExhausted,
  TheoremInapplicable,
  HypothesisViolated,
  DomainError,
  DegreeTooSmall,
  NoUnconditionalBound,
  InvalidArgument,
  ParseError,
};

// Single exception type for the library; the kind is what callers branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace relheight
