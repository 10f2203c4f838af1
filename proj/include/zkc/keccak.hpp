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
#include <string_view>

namespace zkc {

using Digest256 = std::array<std::uint8_t, 32>;

/// Original Keccak-256 (0x01 domain padding), as used by the EVM; not SHA3-256.
Digest256 keccak256(std::span<const std::uint8_t> data);
Digest256 keccak256(std::string_view text);

}  // namespace zkc
