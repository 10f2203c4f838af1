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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zkc {

/// Lowercase hex, no prefix.
std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts an optional 0x prefix; throws std::invalid_argument on odd length
/// or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace zkc
