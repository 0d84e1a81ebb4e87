#include "boxorient/error.hpp"

namespace boxorient {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::InvalidEdge:
      return "InvalidEdge";
    case ErrorCode::DuplicateEdge:
      return "DuplicateEdge";
    case ErrorCode::InvalidVertex:
      return "InvalidVertex";
    case ErrorCode::NotBipartite:
      return "NotBipartite";
    case ErrorCode::NotConnected:
      return "NotConnected";
    case ErrorCode::NotATree:
      return "NotATree";
    case ErrorCode::NotBridgeless:
      return "NotBridgeless";
    case ErrorCode::EmptyFactor:
      return "EmptyFactor";
    case ErrorCode::FactorTooSmall:
      return "FactorTooSmall";
    case ErrorCode::InvalidCycleLength:
      return "InvalidCycleLength";
    case ErrorCode::WrongEdgeKind:
      return "WrongEdgeKind";
    case ErrorCode::TooLarge:
      return "TooLarge";
    case ErrorCode::PreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::RuleConflict:
      return "RuleConflict";
    case ErrorCode::BoundViolated:
      return "BoundViolated";
    case ErrorCode::CertificationFailed:
      return "CertificationFailed";
    case ErrorCode::VerifyMismatch:
      return "VerifyMismatch";
  }
  return "Unknown";
}

int error_exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidEdge:
    case ErrorCode::DuplicateEdge:
      return 2;
    case ErrorCode::InvalidVertex:
    case ErrorCode::NotBipartite:
    case ErrorCode::NotConnected:
    case ErrorCode::NotATree:
    case ErrorCode::NotBridgeless:
    case ErrorCode::EmptyFactor:
    case ErrorCode::FactorTooSmall:
    case ErrorCode::InvalidCycleLength:
    case ErrorCode::WrongEdgeKind:
    case ErrorCode::TooLarge:
    case ErrorCode::PreconditionViolated:
      return 3;
    case ErrorCode::RuleConflict:
    case ErrorCode::BoundViolated:
    case ErrorCode::CertificationFailed:
    case ErrorCode::VerifyMismatch:
      return 4;
  }
  return 1;
}

}  // namespace boxorient
