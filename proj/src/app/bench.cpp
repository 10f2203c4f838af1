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

#include "zkc/app/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "zkc/circuit.hpp"
#include "zkc/groth16.hpp"
#include "zkc/registry.hpp"

namespace zkc::app {

using algebra::Scalar;

namespace {

std::vector<double> sorted(std::span<const double> s) {
  if (s.empty()) throw std::invalid_argument("no samples");
  std::vector<double> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

nlohmann::ordered_json stats_json(const LatencyStats& s) {
  return {{"min", s.min}, {"median", s.median}, {"p95", s.p95}};
}

}  // namespace

double median(std::span<const double> samples) {
  const auto v = sorted(samples);
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

double percentile_nearest_rank(std::span<const double> samples, double q) {
  const auto v = sorted(samples);
  const auto rank = static_cast<std::size_t>(std::ceil(q / 100.0 * static_cast<double>(v.size())));
  return v[std::clamp<std::size_t>(rank, 1, v.size()) - 1];
}

LatencyStats summarize(std::span<const double> samples) {
  return {sorted(samples).front(), median(samples), percentile_nearest_rank(samples, 95)};
}

BenchReport run_bench(std::size_t iterations, unsigned bit_width, RandomSource& rng) {
  if (iterations < kMinBenchIterations) throw std::invalid_argument("bench needs at least 20 iterations");
  BenchReport rep;
  rep.iterations = iterations;
  rep.bit_width = bit_width;

  const auto cs = circuit::build_age_circuit(bit_width);
  rep.constraint_count = cs.num_constraints();
  std::array<std::uint8_t, 32> seed{};
  rng.fill(seed);
  const auto keys = groth16::setup(cs, seed);

  const std::int64_t year = registry::calendar_year(
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count());
  const std::int64_t threshold = 18;
  // Eligible birth years: the difference year - birth - threshold must fit in bit_width bits.
  const std::uint64_t span = bit_width >= 7 ? 100 : (std::uint64_t{1} << bit_width);

  for (std::size_t i = 0; i < iterations; ++i) {
    const std::int64_t birth = year - threshold - static_cast<std::int64_t>(random_u64(rng) % span);
    const Scalar salt = random_nonzero_scalar(rng);
    const circuit::AgeStatement st{Scalar::from_u64(static_cast<std::uint64_t>(year)),
                                   Scalar::from_u64(threshold), salt.square()};

    const auto t0 = std::chrono::steady_clock::now();
    const auto w = circuit::synthesize_witness(cs, st, {Scalar::from_u64(static_cast<std::uint64_t>(birth)), salt});
    const auto proof = groth16::prove(keys.pk, cs, w, rng);
    rep.prove_samples_ms.push_back(ms_since(t0));

    const auto pub = st.public_inputs();
    const auto t1 = std::chrono::steady_clock::now();
    const bool ok = groth16::verify(keys.vk, pub, proof);
    rep.verify_samples_ms.push_back(ms_since(t1));
    rep.all_verified = rep.all_verified && ok;
  }
  rep.prove_ms = summarize(rep.prove_samples_ms);
  rep.verify_ms = summarize(rep.verify_samples_ms);

  rep.gas_receipt = chain::estimate_grant_gas(circuit::kAgePublicInputs);
  const auto& ref = rep.reference;
  for (const std::uint64_t g : {rep.gas_receipt.total_gas, ref.grant_gas}) {
    rep.cost_quotes.push_back(chain::quote_cost(g, ref.gas_price_gwei, ref.eth_usd, chain::Layer::L1));
    rep.cost_quotes.push_back(chain::quote_cost(g, ref.gas_price_gwei, ref.eth_usd, chain::Layer::L2));
  }
  return rep;
}

std::string format_bench_text(const BenchReport& r) {
  const auto& ref = r.reference;
  const auto& g = r.gas_receipt;
  std::string out;
  auto line = [&](const std::string& s) { out += s + "\n"; };
  auto stats = [&](const char* name, const LatencyStats& s) {
    return std::string(name) + " min=" + fmt("%.3f", s.min) + " median=" + fmt("%.3f", s.median) +
           " p95=" + fmt("%.3f", s.p95);
  };
  auto samples = [&](const char* name, const std::vector<double>& v) {
    std::string s = std::string(name);
    for (const double x : v) s += " " + fmt("%.3f", x);
    return s;
  };

  line("bench iterations=" + std::to_string(r.iterations) + " bitWidth=" + std::to_string(r.bit_width) +
       " constraints=" + std::to_string(r.constraint_count) + " verified=" + (r.all_verified ? "all" : "NOT ALL"));
  line(stats("prove_ms ", r.prove_ms) + "   reference: < " + fmt("%.0f", ref.prove_ms_upper) + " (browser prover)");
  line(stats("verify_ms", r.verify_ms));
  line(samples("prove_samples_ms", r.prove_samples_ms));
  line(samples("verify_samples_ms", r.verify_samples_ms));
  line("grant_gas total=" + std::to_string(g.total_gas) + "   reference: ~" + std::to_string(ref.grant_gas));
  line("  intrinsic=" + std::to_string(g.intrinsic_gas) + " calldata=" + std::to_string(g.calldata_gas) +
       " multi_exp=" + std::to_string(g.multi_exp_gas) + " pairing=" + std::to_string(g.pairing_gas) +
       " storage=" + std::to_string(g.storage_gas) + " overhead=" + std::to_string(g.overhead_gas));
  for (const auto& q : r.cost_quotes) {
    std::string s = "cost " + std::string(chain::to_string(q.layer)) + " gas=" + std::to_string(q.gas) + " " +
                    fmt("%.0f", q.gas_price_gwei) + " gwei $" + fmt("%.0f", q.eth_usd) + "/ETH" +
                    (q.layer == chain::Layer::L2 ? " factor=" + fmt("%.4f", q.layer_factor) : "") + " -> $" +
                    fmt("%.2f", q.usd);
    if (q.gas == ref.grant_gas) {
      s += q.layer == chain::Layer::L1 ? "   reference: ~$" + fmt("%.2f", ref.l1_usd)
                                       : "   reference: < $" + fmt("%.2f", ref.l2_usd_upper);
    }
    line(s);
  }
  return out;
}

std::string format_bench_json(const BenchReport& r) {
  const auto& g = r.gas_receipt;
  nlohmann::ordered_json quotes = nlohmann::ordered_json::array();
  for (const auto& q : r.cost_quotes) {
    quotes.push_back({{"layer", chain::to_string(q.layer)},
                      {"gas", q.gas},
                      {"gasPriceGwei", q.gas_price_gwei},
                      {"ethUsd", q.eth_usd},
                      {"layerFactor", q.layer_factor},
                      {"usd", q.usd}});
  }
  const nlohmann::ordered_json doc = {
      {"format", "zkc-bench-v1"},
      {"iterations", r.iterations},
      {"bitWidth", r.bit_width},
      {"constraintCount", r.constraint_count},
      {"allVerified", r.all_verified},
      {"proveLatencyMs", stats_json(r.prove_ms)},
      {"verifyLatencyMs", stats_json(r.verify_ms)},
      {"proveSamplesMs", r.prove_samples_ms},
      {"verifySamplesMs", r.verify_samples_ms},
      {"gasReceipt",
       {{"intrinsic", g.intrinsic_gas},
        {"calldata", g.calldata_gas},
        {"multiExp", g.multi_exp_gas},
        {"pairing", g.pairing_gas},
        {"storage", g.storage_gas},
        {"overhead", g.overhead_gas},
        {"total", g.total_gas}}},
      {"costQuotes", quotes},
      {"reference",
       {{"proveMsUpper", r.reference.prove_ms_upper},
        {"grantGas", r.reference.grant_gas},
        {"gasPriceGwei", r.reference.gas_price_gwei},
        {"ethUsd", r.reference.eth_usd},
        {"l1Usd", r.reference.l1_usd},
        {"l2UsdUpper", r.reference.l2_usd_upper}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace zkc::app
