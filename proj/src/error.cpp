#include "tlab/error.hpp"

namespace tlab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::AlreadySymmetric: return "AlreadySymmetric";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::ValidityViolated: return "ValidityViolated";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::VariableMissing: return "VariableMissing";
    case ErrorKind::InconsistentCount: return "InconsistentCount";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::OutOfFormulaRange: return "OutOfFormulaRange";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace tlab
