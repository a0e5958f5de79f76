#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tlab {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  NodeOutOfRange,
  NotBipartite,
  LengthMismatch,
  GuardExceeded,
  Timeout,
  AlreadySymmetric,
  WeightOutOfRange,
  ValidityViolated,
  BadParameter,
  VariableMissing,
  InconsistentCount,
  IdentityViolated,
  OutOfFormulaRange,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind. `witness` holds offending node
/// ids when the failure has one (an odd cycle, a bad edge, a node index).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace tlab
