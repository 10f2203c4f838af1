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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zkc/algebra/fields.hpp"

namespace zkc::circuit {

using algebra::Scalar;

struct Term {
  std::size_t wire;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse sum of coefficient * wire.
class LinearCombination {
 public:
  LinearCombination() = default;
  LinearCombination(std::initializer_list<Term> terms);

  LinearCombination& add(std::size_t wire, const Scalar& coeff);
  /// Merges duplicate wires, drops zero coefficients, sorts by wire.
  void normalize();

  Scalar evaluate(std::span<const Scalar> assignment) const;
  std::span<const Term> terms() const { return terms_; }
  std::size_t max_wire_plus_one() const;

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  std::vector<Term> terms_;
};

/// One rank-1 constraint  <a, w> * <b, w> = <c, w>.
struct Constraint {
  LinearCombination a, b, c;
};

/// Immutable R1CS. Wire 0 is the constant one, wires 1..num_public are the
/// public inputs, private wires follow.
class ConstraintSystem {
 public:
  /// Throws std::invalid_argument if a term references a wire >= num_variables
  /// or num_public + 1 > num_variables.
  ConstraintSystem(std::vector<Constraint> constraints, std::size_t num_public, std::size_t num_variables,
                   unsigned bit_width = 0);

  std::span<const Constraint> constraints() const { return constraints_; }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::size_t num_public() const { return num_public_; }
  std::size_t num_variables() const { return num_variables_; }
  /// Range-check width of the age circuit; 0 for other systems.
  unsigned bit_width() const { return bit_width_; }

 private:
  std::vector<Constraint> constraints_;
  std::size_t num_public_;
  std::size_t num_variables_;
  unsigned bit_width_;
};

/// Wire layout of the age circuit.
namespace wires {
inline constexpr std::size_t kOne = 0;
inline constexpr std::size_t kCurrentYear = 1;
inline constexpr std::size_t kThreshold = 2;
inline constexpr std::size_t kSaltSquared = 3;
inline constexpr std::size_t kBirthYear = 4;
inline constexpr std::size_t kSalt = 5;
inline constexpr std::size_t kFirstBit = 6;  // bits are LSB first
}  // namespace wires

inline constexpr unsigned kDefaultBitWidth = 8;
inline constexpr std::size_t kAgePublicInputs = 3;

/// Public statement, in public-input order.
struct AgeStatement {
  Scalar current_year;
  Scalar threshold;
  Scalar salt_squared;

  std::array<Scalar, kAgePublicInputs> public_inputs() const { return {current_year, threshold, salt_squared}; }
};

struct AgeSecrets {
  Scalar birth_year;
  Scalar salt;
};

struct WitnessVector {
  std::vector<Scalar> values;

  std::span<const Scalar> public_inputs(const ConstraintSystem& cs) const {
    return std::span<const Scalar>(values).subspan(1, cs.num_public());
  }
};

/// Range check  current_year - birth_year - threshold in [0, 2^bit_width)
/// plus salt_squared = salt * salt. Emits bit_width + 2 constraints.
/// Throws Error(InvalidBitWidth) unless 1 <= bit_width <= 64.
ConstraintSystem build_age_circuit(unsigned bit_width = kDefaultBitWidth);

/// Checks the predicate over the integers before assigning wires. Throws
/// Error with SaltMismatch, PredicateUnsatisfied, RangeOverflow, or
/// InvalidStatement (a year or threshold that is not a small integer, or a
/// zero salt).
WitnessVector synthesize_witness(const ConstraintSystem& cs, const AgeStatement& statement,
                                 const AgeSecrets& secrets);

/// Direct evaluation of every constraint. Throws Error(LengthMismatch) if the
/// witness length differs from num_variables.
bool check_witness(const ConstraintSystem& cs, const WitnessVector& w);

/// JSON debugging export; see docs/formats.md.
std::string export_constraint_system(const ConstraintSystem& cs);

}  // namespace zkc::circuit
