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

#include "zkc/groth16.hpp"

#include <sodium.h>

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "zkc/algebra/encoding.hpp"
#include "zkc/algebra/pairing.hpp"
#include "zkc/error.hpp"
#include "zkc/hex.hpp"

namespace zkc::groth16 {

using algebra::EvaluationDomain;
using algebra::Polynomial;
using circuit::LinearCombination;

namespace {

// Row j of the QAP matrices; see qap:: in the header.
struct RowView {
  const LinearCombination* a = nullptr;
  const LinearCombination* b = nullptr;
  const LinearCombination* c = nullptr;
  std::size_t input_wire = 0;  // used when a == nullptr
};

std::size_t num_rows(const ConstraintSystem& cs) { return cs.num_constraints() + cs.num_public() + 1; }

RowView row(const ConstraintSystem& cs, std::size_t j) {
  if (j < cs.num_constraints()) {
    const auto& c = cs.constraints()[j];
    return {&c.a, &c.b, &c.c, 0};
  }
  return {nullptr, nullptr, nullptr, j - cs.num_constraints()};
}

template <typename T>
void wipe(T& value) {
  sodium_memzero(&value, sizeof(value));
}

}  // namespace

namespace qap {

EvaluationDomain<Scalar> domain_for(const ConstraintSystem& cs) {
  return EvaluationDomain<Scalar>::at_least(num_rows(cs));
}

Evaluation evaluate_at(const ConstraintSystem& cs, const EvaluationDomain<Scalar>& domain, const Scalar& x) {
  const auto basis = domain.lagrange_basis_at(x);
  Evaluation ev;
  ev.u.resize(cs.num_variables());
  ev.v.resize(cs.num_variables());
  ev.w.resize(cs.num_variables());
  ev.vanishing = domain.vanishing_at(x);
  for (std::size_t j = 0; j < num_rows(cs); ++j) {
    const RowView r = row(cs, j);
    if (r.a == nullptr) {
      ev.u[r.input_wire] += basis[j];
      continue;
    }
    for (const auto& t : r.a->terms()) ev.u[t.wire] += t.coeff * basis[j];
    for (const auto& t : r.b->terms()) ev.v[t.wire] += t.coeff * basis[j];
    for (const auto& t : r.c->terms()) ev.w[t.wire] += t.coeff * basis[j];
  }
  return ev;
}

std::optional<Polynomial<Scalar>> quotient(const ConstraintSystem& cs, const EvaluationDomain<Scalar>& domain,
                                           const WitnessVector& w) {
  const std::size_t n = domain.size();
  std::vector<Scalar> a(n), b(n), c(n);
  for (std::size_t j = 0; j < num_rows(cs); ++j) {
    const RowView r = row(cs, j);
    if (r.a == nullptr) {
      a[j] = w.values[r.input_wire];
      continue;
    }
    a[j] = r.a->evaluate(w.values);
    b[j] = r.b->evaluate(w.values);
    c[j] = r.c->evaluate(w.values);
  }
  domain.ifft(a);
  domain.ifft(b);
  domain.ifft(c);
  Polynomial<Scalar> p = algebra::multiply<Scalar>(a, b);
  for (std::size_t k = 0; k < n; ++k) p[k] -= c[k];
  return algebra::divide_by_vanishing(std::move(p), n);
}

}  // namespace qap

KeyPair setup(const ConstraintSystem& cs, std::span<const std::uint8_t> seed) {
  if (cs.num_constraints() == 0) throw Error(Errc::DegenerateSystem, "constraint system has no constraints");
  if (seed.empty()) throw std::invalid_argument("setup seed must be nonempty");

  const auto domain = qap::domain_for(cs);
  SeededRandom rng(seed);

  Scalar tau = random_nonzero_scalar(rng);
  while (domain.vanishing_at(tau).is_zero()) tau = random_nonzero_scalar(rng);
  Scalar alpha = random_nonzero_scalar(rng);
  Scalar beta = random_nonzero_scalar(rng);
  Scalar gamma = random_nonzero_scalar(rng);
  Scalar delta = random_nonzero_scalar(rng);

  const auto& g1 = G1Point::generator();
  const auto& g2 = G2Point::generator();
  auto ev = qap::evaluate_at(cs, domain, tau);
  Scalar gamma_inv = gamma.inverse();
  Scalar delta_inv = delta.inverse();

  KeyPair keys;
  ProvingKey& pk = keys.pk;
  VerifyingKey& vk = keys.vk;
  pk.domain_size = domain.size();
  pk.num_public = cs.num_public();
  pk.num_variables = cs.num_variables();
  pk.alpha_g1 = g1 * alpha;
  pk.beta_g1 = g1 * beta;
  pk.delta_g1 = g1 * delta;
  pk.beta_g2 = g2 * beta;
  pk.delta_g2 = g2 * delta;

  vk.alpha_g1 = pk.alpha_g1;
  vk.beta_g2 = pk.beta_g2;
  vk.gamma_g2 = g2 * gamma;
  vk.delta_g2 = pk.delta_g2;

  for (std::size_t i = 0; i < cs.num_variables(); ++i) {
    pk.a_query.push_back(g1 * ev.u[i]);
    pk.b_g1_query.push_back(g1 * ev.v[i]);
    pk.b_g2_query.push_back(g2 * ev.v[i]);
    const Scalar combined = beta * ev.u[i] + alpha * ev.v[i] + ev.w[i];
    if (i <= cs.num_public()) {
      vk.ic.push_back(g1 * (combined * gamma_inv));
    } else {
      pk.l_query.push_back(g1 * (combined * delta_inv));
    }
  }

  Scalar tau_pow = ev.vanishing * delta_inv;
  for (std::size_t k = 0; k + 1 < domain.size(); ++k) {
    pk.h_query.push_back(g1 * tau_pow);
    tau_pow *= tau;
  }

  wipe(tau);
  wipe(alpha);
  wipe(beta);
  wipe(gamma);
  wipe(delta);
  wipe(gamma_inv);
  wipe(delta_inv);
  wipe(tau_pow);
  for (auto* vec : {&ev.u, &ev.v, &ev.w}) sodium_memzero(vec->data(), vec->size() * sizeof(Scalar));
  return keys;
}

Proof prove(const ProvingKey& pk, const ConstraintSystem& cs, const WitnessVector& w, const Scalar& r,
            const Scalar& s) {
  if (pk.num_variables != cs.num_variables() || pk.num_public != cs.num_public()) {
    throw std::invalid_argument("proving key does not match constraint system");
  }
  if (!circuit::check_witness(cs, w)) throw Error(Errc::UnsatisfiedWitness, "witness violates a constraint");

  const auto domain = qap::domain_for(cs);
  auto h = qap::quotient(cs, domain, w);
  if (!h) throw Error(Errc::UnsatisfiedWitness, "QAP quotient has a nonzero remainder");
  h->resize(pk.h_query.size());

  const std::span<const Scalar> all(w.values);
  const auto priv = all.subspan(cs.num_public() + 1);

  const G1Point a = pk.alpha_g1 + algebra::multi_exp(pk.a_query, all) + pk.delta_g1 * r;
  const G2Point b = pk.beta_g2 + algebra::multi_exp(pk.b_g2_query, all) + pk.delta_g2 * s;
  const G1Point b1 = pk.beta_g1 + algebra::multi_exp(pk.b_g1_query, all) + pk.delta_g1 * s;
  const G1Point c = algebra::multi_exp(pk.l_query, priv) + algebra::multi_exp(pk.h_query, *h) + a * s + b1 * r -
                    pk.delta_g1 * (r * s);
  return {a, b, c};
}

Proof prove(const ProvingKey& pk, const ConstraintSystem& cs, const WitnessVector& w, RandomSource& rng) {
  const Scalar r = random_scalar(rng);
  const Scalar s = random_scalar(rng);
  return prove(pk, cs, w, r, s);
}

bool verify(const VerifyingKey& vk, std::span<const Scalar> public_inputs, const Proof& proof) {
  if (vk.ic.empty() || public_inputs.size() != vk.ic.size() - 1) {
    throw Error(Errc::InputLengthMismatch, "expected " + std::to_string(vk.ic.empty() ? 0 : vk.ic.size() - 1) +
                                               " public inputs, got " + std::to_string(public_inputs.size()));
  }
  if (!proof.a.in_subgroup() || !proof.b.in_subgroup() || !proof.c.in_subgroup()) {
    throw Error(Errc::MalformedProof, "proof element outside its group");
  }
  const G1Point l =
      vk.ic[0] + algebra::multi_exp(std::span<const G1Point>(vk.ic).subspan(1), public_inputs);
  const algebra::PairingInput pairs[] = {
      {-proof.a, proof.b},
      {vk.alpha_g1, vk.beta_g2},
      {l, vk.gamma_g2},
      {proof.c, vk.delta_g2},
  };
  return algebra::pairing_product_is_one(pairs);
}

ProofBytes serialize_proof(const Proof& p) {
  ProofBytes out{};
  const auto a = algebra::encode_point(p.a);
  const auto b = algebra::encode_point(p.b);
  const auto c = algebra::encode_point(p.c);
  std::copy(a.begin(), a.end(), out.begin());
  std::copy(b.begin(), b.end(), out.begin() + 64);
  std::copy(c.begin(), c.end(), out.begin() + 192);
  return out;
}

Proof deserialize_proof(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kProofSize) {
    throw Error(Errc::MalformedEncoding, "proof must be 256 bytes, got " + std::to_string(bytes.size()));
  }
  return {algebra::decode_g1(bytes.subspan(0, 64)), algebra::decode_g2(bytes.subspan(64, 128)),
          algebra::decode_g1(bytes.subspan(192, 64))};
}

namespace {

using Json = nlohmann::ordered_json;

std::string g1_hex(const G1Point& p) { return to_hex(algebra::encode_point(p)); }
std::string g2_hex(const G2Point& p) { return to_hex(algebra::encode_point(p)); }

G1Point g1_from(const Json& j) { return algebra::decode_g1(from_hex(j.get<std::string>())); }
G2Point g2_from(const Json& j) { return algebra::decode_g2(from_hex(j.get<std::string>())); }

template <typename Point, typename Enc>
Json point_array(const std::vector<Point>& pts, Enc enc) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(enc(p));
  return arr;
}

template <typename Dec>
auto read_array(const Json& j, Dec dec) {
  std::vector<decltype(dec(j[0]))> out;
  for (const auto& e : j) out.push_back(dec(e));
  return out;
}

Json parse_document(const std::string& text, const char* format) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::MalformedEncoding, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != format) {
    throw Error(Errc::MalformedEncoding, std::string("expected document format ") + format);
  }
  return doc;
}

template <typename Fn>
auto guard_json(Fn fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(Errc::MalformedEncoding, std::string("bad key document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::MalformedEncoding, std::string("bad key document: ") + e.what());
  }
}

}  // namespace

std::string export_vk(const VerifyingKey& vk) {
  Json doc;
  doc["format"] = "zkc-groth16-vk-v1";
  doc["alphaG1"] = g1_hex(vk.alpha_g1);
  doc["betaG2"] = g2_hex(vk.beta_g2);
  doc["gammaG2"] = g2_hex(vk.gamma_g2);
  doc["deltaG2"] = g2_hex(vk.delta_g2);
  doc["ic"] = point_array(vk.ic, g1_hex);
  return doc.dump(2);
}

VerifyingKey import_vk(const std::string& text) {
  const Json doc = parse_document(text, "zkc-groth16-vk-v1");
  return guard_json([&] {
    VerifyingKey vk;
    vk.alpha_g1 = g1_from(doc.at("alphaG1"));
    vk.beta_g2 = g2_from(doc.at("betaG2"));
    vk.gamma_g2 = g2_from(doc.at("gammaG2"));
    vk.delta_g2 = g2_from(doc.at("deltaG2"));
    vk.ic = read_array(doc.at("ic"), g1_from);
    if (vk.ic.empty()) throw Error(Errc::MalformedEncoding, "ic must be nonempty");
    return vk;
  });
}

std::string export_pk(const ProvingKey& pk) {
  Json doc;
  doc["format"] = "zkc-groth16-pk-v1";
  doc["domainSize"] = pk.domain_size;
  doc["numPublic"] = pk.num_public;
  doc["numVariables"] = pk.num_variables;
  doc["alphaG1"] = g1_hex(pk.alpha_g1);
  doc["betaG1"] = g1_hex(pk.beta_g1);
  doc["deltaG1"] = g1_hex(pk.delta_g1);
  doc["betaG2"] = g2_hex(pk.beta_g2);
  doc["deltaG2"] = g2_hex(pk.delta_g2);
  doc["aQuery"] = point_array(pk.a_query, g1_hex);
  doc["bG1Query"] = point_array(pk.b_g1_query, g1_hex);
  doc["bG2Query"] = point_array(pk.b_g2_query, g2_hex);
  doc["lQuery"] = point_array(pk.l_query, g1_hex);
  doc["hQuery"] = point_array(pk.h_query, g1_hex);
  return doc.dump(2);
}

ProvingKey import_pk(const std::string& text) {
  const Json doc = parse_document(text, "zkc-groth16-pk-v1");
  return guard_json([&] {
    ProvingKey pk;
    pk.domain_size = doc.at("domainSize").get<std::size_t>();
    pk.num_public = doc.at("numPublic").get<std::size_t>();
    pk.num_variables = doc.at("numVariables").get<std::size_t>();
    pk.alpha_g1 = g1_from(doc.at("alphaG1"));
    pk.beta_g1 = g1_from(doc.at("betaG1"));
    pk.delta_g1 = g1_from(doc.at("deltaG1"));
    pk.beta_g2 = g2_from(doc.at("betaG2"));
    pk.delta_g2 = g2_from(doc.at("deltaG2"));
    pk.a_query = read_array(doc.at("aQuery"), g1_from);
    pk.b_g1_query = read_array(doc.at("bG1Query"), g1_from);
    pk.b_g2_query = read_array(doc.at("bG2Query"), g2_from);
    pk.l_query = read_array(doc.at("lQuery"), g1_from);
    pk.h_query = read_array(doc.at("hQuery"), g1_from);
    const bool consistent = pk.a_query.size() == pk.num_variables && pk.b_g1_query.size() == pk.num_variables &&
                            pk.b_g2_query.size() == pk.num_variables &&
                            pk.l_query.size() + pk.num_public + 1 == pk.num_variables &&
                            pk.h_query.size() + 1 == pk.domain_size;
    if (!consistent) throw Error(Errc::MalformedEncoding, "proving key vector lengths are inconsistent");
    return pk;
  });
}

}  // namespace zkc::groth16
