#include "folint/error.hpp"

namespace folint {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::FactorDegreeCap: return "FactorDegreeCap";
    case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::UnequalDegrees: return "UnequalDegrees";
    case ErrorKind::DegenerateFoliation: return "DegenerateFoliation";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::AmbiguousChain: return "AmbiguousChain";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::BasePointCollision: return "BasePointCollision";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSquarefreeExtension: return "NotSquarefreeExtension";
    case ErrorKind::ReducibleExtension: return "ReducibleExtension";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace folint
