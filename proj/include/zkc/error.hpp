// Copyright 2026 The zk-compliance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zkc {

enum class Errc {
  // algebra
  InversionOfZero,
  MalformedEncoding,
  // circuit
  InvalidBitWidth,
  InvalidStatement,
  PredicateUnsatisfied,
  RangeOverflow,
  SaltMismatch,
  LengthMismatch,
  // groth16
  DegenerateSystem,
  UnsatisfiedWitness,
  InputLengthMismatch,
  MalformedProof,
  // registry / chain
  InvalidProof,
  InvalidDuration,
  StaleStatement,
  NoActiveGrant,
  NegativeTimeStep,
  // vault
  WeakPassphrase,
  IoFailure,
  AuthenticationFailure,
  UnknownAttribute,
  InvalidAttributeValue,
  EntropyUnavailable,
  VaultLocked,
  // cli
  ParseError,
  ExpectationFailed,
};

std::string_view errc_name(Errc code) noexcept;

/// Every module reports failures by throwing zkc::Error with a stable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  explicit Error(Errc code) : std::runtime_error(std::string(errc_name(code))), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zkc
