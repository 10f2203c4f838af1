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

#include "zkc/circuit.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "zkc/error.hpp"

namespace zkc::circuit {

LinearCombination::LinearCombination(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }

LinearCombination& LinearCombination::add(std::size_t wire, const Scalar& coeff) {
  terms_.push_back({wire, coeff});
  return *this;
}

void LinearCombination::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.wire < y.wire; });
  std::vector<Term> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().wire == t.wire) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

Scalar LinearCombination::evaluate(std::span<const Scalar> assignment) const {
  Scalar acc;
  for (const auto& t : terms_) acc += t.coeff * assignment[t.wire];
  return acc;
}

std::size_t LinearCombination::max_wire_plus_one() const {
  std::size_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.wire + 1);
  return m;
}

ConstraintSystem::ConstraintSystem(std::vector<Constraint> constraints, std::size_t num_public,
                                   std::size_t num_variables, unsigned bit_width)
    : constraints_(std::move(constraints)),
      num_public_(num_public),
      num_variables_(num_variables),
      bit_width_(bit_width) {
  if (num_public_ + 1 > num_variables_) throw std::invalid_argument("too few wires for public inputs");
  for (const auto& c : constraints_) {
    for (const auto* lc : {&c.a, &c.b, &c.c}) {
      if (lc->max_wire_plus_one() > num_variables_) throw std::invalid_argument("term references unknown wire");
    }
  }
}

ConstraintSystem build_age_circuit(unsigned bit_width) {
  if (bit_width < 1 || bit_width > 64) {
    throw Error(Errc::InvalidBitWidth, "bit width must be in [1, 64], got " + std::to_string(bit_width));
  }
  using namespace wires;
  const Scalar one = Scalar::one();
  const Scalar minus_one = -one;

  std::vector<Constraint> cs;
  cs.reserve(bit_width + 2);

  // b_i * (b_i - 1) = 0
  for (unsigned i = 0; i < bit_width; ++i) {
    const std::size_t bit = kFirstBit + i;
    cs.push_back({{{bit, one}}, {{bit, one}, {kOne, minus_one}}, {}});
  }

  // (sum 2^i b_i) * 1 = current_year - threshold - birth_year
  LinearCombination recomposed;
  Scalar weight = one;
  for (unsigned i = 0; i < bit_width; ++i) {
    recomposed.add(kFirstBit + i, weight);
    weight = weight.dbl();
  }
  recomposed.normalize();
  cs.push_back({recomposed, {{kOne, one}}, {{kCurrentYear, one}, {kThreshold, minus_one}, {kBirthYear, minus_one}}});

  // salt * salt = salt_squared
  cs.push_back({{{kSalt, one}}, {{kSalt, one}}, {{kSaltSquared, one}}});

  return ConstraintSystem(std::move(cs), kAgePublicInputs, kFirstBit + bit_width, bit_width);
}

namespace {

// Calendar values must be small non-negative integers to be interpreted over Z.
std::optional<std::int64_t> small_integer(const Scalar& s) {
  const auto v = s.to_canonical();
  if (v.limb[1] != 0 || v.limb[2] != 0 || v.limb[3] != 0) return std::nullopt;
  if (v.limb[0] > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) return std::nullopt;
  return static_cast<std::int64_t>(v.limb[0]);
}

std::int64_t require_small(const Scalar& s, const char* what) {
  auto v = small_integer(s);
  if (!v) throw Error(Errc::InvalidStatement, std::string(what) + " is not a calendar-sized integer");
  return *v;
}

}  // namespace

WitnessVector synthesize_witness(const ConstraintSystem& cs, const AgeStatement& statement,
                                 const AgeSecrets& secrets) {
  const unsigned width = cs.bit_width();
  if (width == 0 || cs.num_variables() != wires::kFirstBit + width) {
    throw std::invalid_argument("constraint system is not an age circuit");
  }
  if (secrets.salt.is_zero()) throw Error(Errc::InvalidStatement, "salt must be nonzero");
  if (secrets.salt.square() != statement.salt_squared) {
    throw Error(Errc::SaltMismatch, "public salt_squared does not equal salt^2");
  }

  const std::int64_t year = require_small(statement.current_year, "current year");
  const std::int64_t threshold = require_small(statement.threshold, "threshold");
  const std::int64_t birth = require_small(secrets.birth_year, "birth year");
  const std::int64_t diff = year - birth - threshold;
  if (diff < 0) {
    throw Error(Errc::PredicateUnsatisfied, "age difference " + std::to_string(diff) + " is negative");
  }
  if (width < 63 && diff >= (std::int64_t{1} << width)) {
    throw Error(Errc::RangeOverflow,
                "age difference " + std::to_string(diff) + " does not fit in " + std::to_string(width) + " bits");
  }

  WitnessVector w;
  w.values.resize(cs.num_variables());
  w.values[wires::kOne] = Scalar::one();
  w.values[wires::kCurrentYear] = statement.current_year;
  w.values[wires::kThreshold] = statement.threshold;
  w.values[wires::kSaltSquared] = statement.salt_squared;
  w.values[wires::kBirthYear] = secrets.birth_year;
  w.values[wires::kSalt] = secrets.salt;
  const auto udiff = static_cast<std::uint64_t>(diff);
  for (unsigned i = 0; i < width; ++i) {
    w.values[wires::kFirstBit + i] = Scalar::from_u64((udiff >> i) & 1U);
  }
  return w;
}

bool check_witness(const ConstraintSystem& cs, const WitnessVector& w) {
  if (w.values.size() != cs.num_variables()) {
    throw Error(Errc::LengthMismatch, "witness has " + std::to_string(w.values.size()) + " values, system has " +
                                          std::to_string(cs.num_variables()) + " wires");
  }
  return std::all_of(cs.constraints().begin(), cs.constraints().end(), [&](const Constraint& c) {
    return c.a.evaluate(w.values) * c.b.evaluate(w.values) == c.c.evaluate(w.values);
  });
}

std::string export_constraint_system(const ConstraintSystem& cs) {
  auto lc_json = [](const LinearCombination& lc) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : lc.terms()) arr.push_back({t.wire, t.coeff.to_decimal()});
    return arr;
  };
  nlohmann::ordered_json doc;
  doc["format"] = "zkc-r1cs-v1";
  doc["numPublic"] = cs.num_public();
  doc["numVariables"] = cs.num_variables();
  doc["bitWidth"] = cs.bit_width();
  doc["constraints"] = nlohmann::ordered_json::array();
  for (const auto& c : cs.constraints()) {
    doc["constraints"].push_back({{"a", lc_json(c.a)}, {"b", lc_json(c.b)}, {"c", lc_json(c.c)}});
  }
  return doc.dump(2);
}

}  // namespace zkc::circuit
