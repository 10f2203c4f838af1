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

#include "zkc/error.hpp"

namespace zkc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InversionOfZero:
      return "InversionOfZero";
    case Errc::MalformedEncoding:
      return "MalformedEncoding";
    case Errc::InvalidBitWidth:
      return "InvalidBitWidth";
    case Errc::InvalidStatement:
      return "InvalidStatement";
    case Errc::PredicateUnsatisfied:
      return "PredicateUnsatisfied";
    case Errc::RangeOverflow:
      return "RangeOverflow";
    case Errc::SaltMismatch:
      return "SaltMismatch";
    case Errc::LengthMismatch:
      return "LengthMismatch";
    case Errc::DegenerateSystem:
      return "DegenerateSystem";
    case Errc::UnsatisfiedWitness:
      return "UnsatisfiedWitness";
    case Errc::InputLengthMismatch:
      return "InputLengthMismatch";
    case Errc::MalformedProof:
      return "MalformedProof";
    case Errc::InvalidProof:
      return "InvalidProof";
    case Errc::InvalidDuration:
      return "InvalidDuration";
    case Errc::StaleStatement:
      return "StaleStatement";
    case Errc::NoActiveGrant:
      return "NoActiveGrant";
    case Errc::NegativeTimeStep:
      return "NegativeTimeStep";
    case Errc::WeakPassphrase:
      return "WeakPassphrase";
    case Errc::IoFailure:
      return "IoFailure";
    case Errc::AuthenticationFailure:
      return "AuthenticationFailure";
    case Errc::UnknownAttribute:
      return "UnknownAttribute";
    case Errc::InvalidAttributeValue:
      return "InvalidAttributeValue";
    case Errc::EntropyUnavailable:
      return "EntropyUnavailable";
    case Errc::VaultLocked:
      return "VaultLocked";
    case Errc::ParseError:
      return "ParseError";
    case Errc::ExpectationFailed:
      return "ExpectationFailed";
  }
  return "Unknown";
}

}  // namespace zkc
