// Copyright 2026 The hcond Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hcond {

enum class ErrorCode {
  // Invalid input: the caller handed us something outside the supported domain.
  MalformedFile,
  BadPrime,
  EvenResidueCharacteristic,
  DuplicateRoots,
  NonIntegralRoot,
  OddRootCount,
  TooFewRoots,
  MalformedMatrix,
  UltrametricViolation,
  StrictWarning,
  // Internal: a proven identity failed. Always a bug in this library.
  InternalInvariant,
  DisconnectedCover,
  NonIntegralSelfIntersection,
  GenusMismatch,
  InequalityViolated,
};

bool is_internal(ErrorCode code) noexcept;
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool internal() const noexcept { return is_internal(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hcond
