#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace boxorient {

enum class ErrorCode {
  ParseError,
  InvalidEdge,
  DuplicateEdge,
  InvalidVertex,
  NotBipartite,
  NotConnected,
  NotATree,
  NotBridgeless,
  EmptyFactor,
  FactorTooSmall,
  InvalidCycleLength,
  WrongEdgeKind,
  TooLarge,
  PreconditionViolated,
  RuleConflict,
  BoundViolated,
  CertificationFailed,
  VerifyMismatch,
};

const char* error_code_name(ErrorCode code);

/// Process exit class for a code: 2 = parse error, 3 = precondition
/// violated, 4 = certification failed.
int error_exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  Error(ErrorCode code, const std::string& message, std::vector<int> detail)
      : Error(code, message) {
    detail_ = std::move(detail);
  }

  ErrorCode code() const { return code_; }

  /// Extra vertex payload, e.g. the odd cycle behind NotBipartite.
  const std::vector<int>& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::vector<int> detail_;
};

}  // namespace boxorient
