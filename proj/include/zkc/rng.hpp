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
#include <span>

#include "zkc/algebra/fields.hpp"

namespace zkc {

/// Source of uniform random bytes.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system entropy (libsodium randombytes).
class SystemRandom final : public RandomSource {
 public:
  /// Throws Error(EntropyUnavailable) if the entropy pool cannot be initialised.
  SystemRandom();
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic ChaCha20 keystream keyed by BLAKE2b-256(seed). Test and
/// reproducible-run use only.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::span<const std::uint8_t> seed);
  void fill(std::span<std::uint8_t> out) override;

 private:
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::array<std::uint8_t, 64> block_{};
  std::uint32_t counter_ = 0;
  std::size_t used_ = 64;
};

/// Uniform element of Fr by rejection sampling.
algebra::Scalar random_scalar(RandomSource& rng);
algebra::Scalar random_nonzero_scalar(RandomSource& rng);
std::uint64_t random_u64(RandomSource& rng);

}  // namespace zkc
