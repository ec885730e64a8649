// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcond/error.hpp"

namespace hcond {

bool is_internal(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InternalInvariant:
    case ErrorCode::DisconnectedCover:
    case ErrorCode::NonIntegralSelfIntersection:
    case ErrorCode::GenusMismatch:
    case ErrorCode::InequalityViolated:
      return true;
    default:
      return false;
  }
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::EvenResidueCharacteristic: return "EvenResidueCharacteristic";
    case ErrorCode::DuplicateRoots: return "DuplicateRoots";
    case ErrorCode::NonIntegralRoot: return "NonIntegralRoot";
    case ErrorCode::OddRootCount: return "OddRootCount";
    case ErrorCode::TooFewRoots: return "TooFewRoots";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::UltrametricViolation: return "UltrametricViolation";
    case ErrorCode::StrictWarning: return "StrictWarning";
    case ErrorCode::InternalInvariant: return "InternalInvariantViolation";
    case ErrorCode::DisconnectedCover: return "DisconnectedCover";
    case ErrorCode::NonIntegralSelfIntersection: return "NonIntegralSelfIntersection";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::InequalityViolated: return "InequalityViolated";
  }
  return "Unknown";
}

}  // namespace hcond
