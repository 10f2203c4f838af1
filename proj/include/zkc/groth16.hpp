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
#include <string>
#include <vector>

#include "zkc/algebra/curve.hpp"
#include "zkc/algebra/polynomial.hpp"
#include "zkc/circuit.hpp"
#include "zkc/rng.hpp"

namespace zkc::groth16 {

using algebra::G1Point;
using algebra::G2Point;
using algebra::Scalar;
using circuit::ConstraintSystem;
using circuit::WitnessVector;

/// Structured reference string held by the prover.
struct ProvingKey {
  std::size_t domain_size = 0;
  std::size_t num_public = 0;
  std::size_t num_variables = 0;
  G1Point alpha_g1, beta_g1, delta_g1;
  G2Point beta_g2, delta_g2;
  std::vector<G1Point> a_query;     // [u_i(tau)]_1 for every wire
  std::vector<G1Point> b_g1_query;  // [v_i(tau)]_1
  std::vector<G2Point> b_g2_query;  // [v_i(tau)]_2
  std::vector<G1Point> l_query;     // [(beta u_i + alpha v_i + w_i)(tau) / delta]_1, private wires only
  std::vector<G1Point> h_query;     // [tau^k Z(tau) / delta]_1, k < domain_size - 1

  friend bool operator==(const ProvingKey&, const ProvingKey&) = default;
};

struct VerifyingKey {
  G1Point alpha_g1;
  G2Point beta_g2, gamma_g2, delta_g2;
  std::vector<G1Point> ic;  // num_public + 1 entries

  friend bool operator==(const VerifyingKey&, const VerifyingKey&) = default;
};

struct Proof {
  G1Point a;
  G2Point b;
  G1Point c;

  friend bool operator==(const Proof&, const Proof&) = default;
};

struct KeyPair {
  ProvingKey pk;
  VerifyingKey vk;
};

inline constexpr std::size_t kProofSize = 256;
using ProofBytes = std::array<std::uint8_t, kProofSize>;

/// Deterministic trusted setup keyed by `seed`. The sampled trapdoor scalars
/// never leave this call. Single-party seeded setup is for reproducible
/// testing only; production keys need a multi-party ceremony.
/// Throws Error(DegenerateSystem) for a system without constraints and
/// std::invalid_argument for an empty seed.
KeyPair setup(const ConstraintSystem& cs, std::span<const std::uint8_t> seed);

/// Throws Error(UnsatisfiedWitness) if check_witness fails.
Proof prove(const ProvingKey& pk, const ConstraintSystem& cs, const WitnessVector& w, const Scalar& r,
            const Scalar& s);
Proof prove(const ProvingKey& pk, const ConstraintSystem& cs, const WitnessVector& w, RandomSource& rng);

/// Pairing-product check e(A, B) = e(alpha, beta) e(L, gamma) e(C, delta).
/// Throws Error(InputLengthMismatch) or Error(MalformedProof).
bool verify(const VerifyingKey& vk, std::span<const Scalar> public_inputs, const Proof& proof);

/// A || B || C, uncompressed.
ProofBytes serialize_proof(const Proof& p);
/// Throws Error(MalformedEncoding).
Proof deserialize_proof(std::span<const std::uint8_t> bytes);

/// JSON documents with hex-encoded points; see docs/formats.md.
std::string export_vk(const VerifyingKey& vk);
VerifyingKey import_vk(const std::string& text);
std::string export_pk(const ProvingKey& pk);
ProvingKey import_pk(const std::string& text);

/// QAP view of an R1CS. Rows 0..m-1 are the constraints; rows m..m+num_public
/// add the input-consistency rows  w_i * 0 = 0  that make the public-input
/// polynomials linearly independent. The domain is the smallest power of two
/// covering all rows.
namespace qap {

algebra::EvaluationDomain<Scalar> domain_for(const ConstraintSystem& cs);

struct Evaluation {
  std::vector<Scalar> u, v, w;  // per wire
  Scalar vanishing;
};

/// u_i(x), v_i(x), w_i(x), Z(x) at a point outside the domain, by Lagrange
/// interpolation.
Evaluation evaluate_at(const ConstraintSystem& cs, const algebra::EvaluationDomain<Scalar>& domain,
                       const Scalar& x);

/// Coefficients of h = (A B - C) / Z for the witness, or nullopt if Z does not
/// divide (the witness is not satisfying).
std::optional<algebra::Polynomial<Scalar>> quotient(const ConstraintSystem& cs,
                                                    const algebra::EvaluationDomain<Scalar>& domain,
                                                    const WitnessVector& w);

}  // namespace qap

}  // namespace zkc::groth16
