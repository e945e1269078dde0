#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace folint {

enum class ErrorKind {
  DivisionByZero,
  MixedFields,
  ZeroPolynomial,
  FactorDegreeCap,
  UnsupportedExtension,
  Unsupported,
  InhomogeneousInput,
  EulerViolation,
  NotCoprime,
  UnequalDegrees,
  DegenerateFoliation,
  NonIsolated,
  SingularJacobian,
  AmbiguousChain,
  NotReduced,
  BasePointCollision,
  ParseError,
  NotSquarefreeExtension,
  ReducibleExtension,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace folint
