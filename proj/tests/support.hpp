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

#include <stdlib.h>

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "zkc/algebra/fields.hpp"
#include "zkc/rng.hpp"

namespace zkc::testing {

inline SeededRandom seeded(std::string_view label) {
  return SeededRandom(std::span(reinterpret_cast<const std::uint8_t*>(label.data()), label.size()));
}

inline algebra::U256 random_u256(RandomSource& rng) {
  std::array<std::uint8_t, 32> b{};
  rng.fill(b);
  return algebra::U256::from_be_bytes(b);
}

inline algebra::Fq random_fq(RandomSource& rng) { return algebra::Fq::from_u256_reduced(random_u256(rng)); }

inline algebra::Fq2 random_fq2(RandomSource& rng) { return {random_fq(rng), random_fq(rng)}; }

inline algebra::Fq6 random_fq6(RandomSource& rng) { return {random_fq2(rng), random_fq2(rng), random_fq2(rng)}; }

inline algebra::Fq12 random_fq12(RandomSource& rng) { return {random_fq6(rng), random_fq6(rng)}; }

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "zkc-test-XXXXXX").string();
    path_ = ::mkdtemp(tmpl.data());
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace zkc::testing
