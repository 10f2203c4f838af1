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

#include "zkc/registry.hpp"

#include <chrono>
#include <cstring>
#include <stdexcept>
#include <string>

#include "zkc/algebra/encoding.hpp"
#include "zkc/error.hpp"

namespace zkc::registry {

Address Address::from_label(std::string_view label) {
  const auto d = keccak256(label);
  Address a;
  std::memcpy(a.bytes.data(), d.data() + 12, 20);
  return a;
}

ScopeId ScopeId::from_label(std::string_view label) { return ScopeId{keccak256(label)}; }

std::size_t RecordKeyHash::operator()(const RecordKey& k) const noexcept {
  // Both halves are already uniformly distributed hash outputs.
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::memcpy(&a, k.subject.bytes.data(), sizeof(a));
  std::memcpy(&b, k.scope.bytes.data(), sizeof(b));
  return static_cast<std::size_t>(a ^ (b * 0x9e3779b97f4a7c15ULL));
}

std::int64_t calendar_year(Timestamp t) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{t}};
  const year_month_day ymd{floor<days>(tp)};
  return static_cast<int>(ymd.year());
}

Digest256 statement_digest(std::span<const Scalar> public_inputs) {
  std::vector<std::uint8_t> buf;
  buf.reserve(public_inputs.size() * 32);
  for (const auto& s : public_inputs) {
    const auto enc = algebra::encode_scalar(s);
    buf.insert(buf.end(), enc.begin(), enc.end());
  }
  return keccak256(buf);
}

Registry::Registry(VerifyingKey vk) : vk_(std::move(vk)) {}

AccessRecord Registry::grant_access(const Address& caller, const ScopeId& scope, const Proof& proof,
                                    std::span<const Scalar> public_inputs, std::int64_t duration_seconds,
                                    Timestamp now) {
  if (duration_seconds <= 0) {
    throw Error(Errc::InvalidDuration, "duration must be positive, got " + std::to_string(duration_seconds));
  }
  if (public_inputs.empty()) throw Error(Errc::InvalidProof, "missing public inputs");

  const auto year = public_inputs[0].to_canonical();
  const auto expected = static_cast<std::uint64_t>(calendar_year(now));
  if (year != algebra::U256(expected)) {
    throw Error(Errc::StaleStatement, "statement year does not match chain year " + std::to_string(expected));
  }

  bool ok = false;
  try {
    ok = groth16::verify(vk_, public_inputs, proof);
  } catch (const Error& e) {
    throw Error(Errc::InvalidProof, e.what());
  }
  if (!ok) throw Error(Errc::InvalidProof, "pairing check failed");

  AccessRecord rec{caller, scope, now, now + duration_seconds, statement_digest(public_inputs)};
  records_.insert_or_assign(RecordKey{caller, scope}, rec);
  return rec;
}

bool Registry::validate_access(const Address& subject, const ScopeId& scope, Timestamp now) const {
  const auto it = records_.find(RecordKey{subject, scope});
  return it != records_.end() && now < it->second.expires_at;
}

void Registry::revoke_access(const Address& caller, const ScopeId& scope) {
  if (records_.erase(RecordKey{caller, scope}) == 0) {
    throw Error(Errc::NoActiveGrant, "no record for caller and scope");
  }
}

std::optional<AccessRecord> Registry::find(const Address& subject, const ScopeId& scope) const {
  const auto it = records_.find(RecordKey{subject, scope});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void Registry::restore(std::vector<AccessRecord> records) {
  RecordMap fresh;
  for (auto& r : records) {
    if (r.expires_at <= r.granted_at) throw std::invalid_argument("record expires before it was granted");
    fresh.insert_or_assign(RecordKey{r.subject, r.scope}, r);
  }
  records_ = std::move(fresh);
}

}  // namespace zkc::registry
