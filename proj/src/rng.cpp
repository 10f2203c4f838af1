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

#include "zkc/rng.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>

#include "zkc/error.hpp"

namespace zkc {

namespace {

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw Error(Errc::EntropyUnavailable, "libsodium initialisation failed");
}

}  // namespace

SystemRandom::SystemRandom() { ensure_sodium(); }

void SystemRandom::fill(std::span<std::uint8_t> out) { randombytes_buf(out.data(), out.size()); }

SeededRandom::SeededRandom(std::span<const std::uint8_t> seed) {
  ensure_sodium();
  crypto_generichash(key_.data(), key_.size(), seed.data(), seed.size(), nullptr, 0);
}

void SeededRandom::refill() {
  static_assert(crypto_stream_chacha20_ietf_KEYBYTES == 32);
  const std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  std::array<std::uint8_t, 64> zeros{};
  crypto_stream_chacha20_ietf_xor_ic(block_.data(), zeros.data(), block_.size(), nonce.data(), counter_++,
                                     key_.data());
  used_ = 0;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t off = 0;
  while (off < out.size()) {
    if (used_ == block_.size()) refill();
    const std::size_t n = std::min(out.size() - off, block_.size() - used_);
    std::memcpy(out.data() + off, block_.data() + used_, n);
    used_ += n;
    off += n;
  }
}

algebra::Scalar random_scalar(RandomSource& rng) {
  std::array<std::uint8_t, 32> buf{};
  for (;;) {
    rng.fill(buf);
    buf[0] &= 0x3f;  // r < 2^254
    const auto v = algebra::U256::from_be_bytes(buf);
    if (auto s = algebra::Scalar::from_canonical(v)) return *s;
  }
}

algebra::Scalar random_nonzero_scalar(RandomSource& rng) {
  for (;;) {
    auto s = random_scalar(rng);
    if (!s.is_zero()) return s;
  }
}

std::uint64_t random_u64(RandomSource& rng) {
  std::array<std::uint8_t, 8> buf{};
  rng.fill(buf);
  std::uint64_t v = 0;
  for (auto b : buf) v = (v << 8) | b;
  return v;
}

}  // namespace zkc
