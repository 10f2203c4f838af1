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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zkc/chainsim.hpp"
#include "zkc/rng.hpp"

namespace zkc::app {

inline constexpr std::size_t kMinBenchIterations = 20;

/// Median of the samples; the mean of the two middle values for even counts.
double median(std::span<const double> samples);
/// Nearest-rank percentile: the ceil(q/100 * n)-th smallest sample.
double percentile_nearest_rank(std::span<const double> samples, double q);

struct LatencyStats {
  double min = 0;
  double median = 0;
  double p95 = 0;
};

/// Throws std::invalid_argument on an empty sample set.
LatencyStats summarize(std::span<const double> samples);

/// Published figures the report prints next to the measurements.
struct ReferenceFigures {
  double prove_ms_upper = 200;
  std::uint64_t grant_gas = 240'512;
  double gas_price_gwei = 20;
  double eth_usd = 3000;
  double l1_usd = 15.00;
  double l2_usd_upper = 0.50;
};

struct BenchReport {
  std::size_t iterations = 0;
  unsigned bit_width = 0;
  std::size_t constraint_count = 0;
  bool all_verified = true;
  std::vector<double> prove_samples_ms;   // witness synthesis + proving
  std::vector<double> verify_samples_ms;
  LatencyStats prove_ms;
  LatencyStats verify_ms;
  chain::GasReceipt gas_receipt;          // estimate_grant_gas(3)
  /// L1 and L2 quotes at the modelled gas, then at the reference gas.
  std::vector<chain::CostQuote> cost_quotes;
  ReferenceFigures reference;
};

/// One setup, then `iterations` prove/verify rounds on fresh eligible
/// witnesses. Throws std::invalid_argument when iterations < 20.
BenchReport run_bench(std::size_t iterations, unsigned bit_width, RandomSource& rng);

std::string format_bench_text(const BenchReport& report);
std::string format_bench_json(const BenchReport& report);

}  // namespace zkc::app
