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

#include <span>
#include <string_view>
#include <vector>

#include "zkc/circuit.hpp"
#include "zkc/groth16.hpp"
#include "zkc/registry.hpp"

namespace zkc::testing {

/// Age circuit with keys from a fixed seed, shared across a test binary.
struct AgeFixture {
  circuit::ConstraintSystem cs = circuit::build_age_circuit(8);
  groth16::KeyPair keys;

  struct Submission {
    groth16::Proof proof;
    std::vector<algebra::Scalar> inputs;
  };

  static const AgeFixture& get() {
    static const AgeFixture f;
    return f;
  }

  Submission make(std::uint64_t year, std::uint64_t threshold, std::uint64_t birth, RandomSource& rng) const {
    const auto salt = random_nonzero_scalar(rng);
    const circuit::AgeStatement st{algebra::Scalar::from_u64(year), algebra::Scalar::from_u64(threshold),
                                   salt.square()};
    const auto w = circuit::synthesize_witness(cs, st, {algebra::Scalar::from_u64(birth), salt});
    const auto pub = st.public_inputs();
    return {groth16::prove(keys.pk, cs, w, rng), {pub.begin(), pub.end()}};
  }

  /// Honest proof presented with a perturbed public input.
  Submission make_invalid(RandomSource& rng) const {
    auto sub = make(2025, 18, 2000, rng);
    sub.inputs[1 + random_u64(rng) % 2] += algebra::Scalar::one();
    return sub;
  }

 private:
  AgeFixture() {
    const std::string_view seed = "shared-age-fixture";
    keys = groth16::setup(cs, std::span(reinterpret_cast<const std::uint8_t*>(seed.data()), seed.size()));
  }
};

inline constexpr registry::Timestamp kJan2025 = 1'735'689'600;

}  // namespace zkc::testing
