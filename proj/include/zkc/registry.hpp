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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zkc/groth16.hpp"
#include "zkc/keccak.hpp"

namespace zkc::registry {

using algebra::Scalar;
using groth16::Proof;
using groth16::VerifyingKey;

/// 20-byte account address.
struct Address {
  std::array<std::uint8_t, 20> bytes{};
  /// Last 20 bytes of keccak256(label); convenient stable test identities.
  static Address from_label(std::string_view label);
  friend auto operator<=>(const Address&, const Address&) = default;
};

/// Opaque 32-byte verifier / dApp identifier.
struct ScopeId {
  std::array<std::uint8_t, 32> bytes{};
  /// keccak256(label).
  static ScopeId from_label(std::string_view label);
  friend auto operator<=>(const ScopeId&, const ScopeId&) = default;
};

using Timestamp = std::int64_t;  // seconds since the Unix epoch

struct AccessRecord {
  Address subject;
  ScopeId scope;
  Timestamp granted_at = 0;
  Timestamp expires_at = 0;
  Digest256 statement_digest{};

  friend bool operator==(const AccessRecord&, const AccessRecord&) = default;
};

struct RecordKey {
  Address subject;
  ScopeId scope;
  friend bool operator==(const RecordKey&, const RecordKey&) = default;
};

struct RecordKeyHash {
  std::size_t operator()(const RecordKey& k) const noexcept;
};

using RecordMap = std::unordered_map<RecordKey, AccessRecord, RecordKeyHash>;

/// UTC calendar year containing `t`.
std::int64_t calendar_year(Timestamp t);

/// keccak256 over the concatenated 32-byte big-endian public inputs.
Digest256 statement_digest(std::span<const Scalar> public_inputs);

/// The access registry state machine. The verifying key is fixed at
/// deployment. Grants are self-service, keyed by (caller, scope); proofs are
/// not bound to the caller address.
class Registry {
 public:
  explicit Registry(VerifyingKey vk);

  /// Verifies the proof and mints (or overwrites) the caller's record.
  /// Throws Error with InvalidDuration, StaleStatement (public current year is
  /// not the calendar year of `now`), or InvalidProof. State is unchanged on
  /// any error.
  AccessRecord grant_access(const Address& caller, const ScopeId& scope, const Proof& proof,
                            std::span<const Scalar> public_inputs, std::int64_t duration_seconds, Timestamp now);

  /// Map lookup and one comparison; no cryptography.
  bool validate_access(const Address& subject, const ScopeId& scope, Timestamp now) const;

  /// Deletes the caller's record. Throws Error(NoActiveGrant) if none exists.
  void revoke_access(const Address& caller, const ScopeId& scope);

  std::optional<AccessRecord> find(const Address& subject, const ScopeId& scope) const;
  const RecordMap& records() const { return records_; }
  const VerifyingKey& verifying_key() const { return vk_; }

  /// Restores records from a snapshot; each record must satisfy
  /// expires_at > granted_at.
  void restore(std::vector<AccessRecord> records);

 private:
  VerifyingKey vk_;
  RecordMap records_;
};

}  // namespace zkc::registry
