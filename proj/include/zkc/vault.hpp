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
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zkc/algebra/fields.hpp"
#include "zkc/rng.hpp"

namespace zkc::vault {

using AttributeValue = std::variant<std::int64_t, std::string>;
using AttributeMap = std::map<std::string, AttributeValue>;

inline constexpr std::size_t kMinPassphraseLength = 8;
inline constexpr std::int64_t kMinBirthYear = 1900;
inline constexpr std::string_view kBirthYearKey = "birthYear";

/// Argon2id cost parameters, stored in the vault file.
struct KdfCost {
  std::uint64_t opslimit = 0;
  std::uint64_t memlimit = 0;  // bytes

  /// libsodium's interactive preset (64 MiB).
  static KdfCost interactive();
  /// 1 pass over 1 MiB; for throwaway vaults and tests.
  static KdfCost light();
};

/// On-disk envelope. Layout (little-endian integers):
///
///   0   "SDV1"
///   4   kdf salt        16 bytes
///   20  opslimit        u64
///   28  memlimit        u64
///   36  nonce           12 bytes
///   48  ciphertext len  u32
///   52  ciphertext      len bytes
///   ..  auth tag        16 bytes
///
/// Bytes 0..51 are authenticated as associated data.
struct VaultFile {
  static constexpr std::uint32_t kFormatVersion = 1;

  std::array<std::uint8_t, 16> kdf_salt{};
  KdfCost kdf;
  std::array<std::uint8_t, 12> nonce{};
  std::vector<std::uint8_t> ciphertext;
  std::array<std::uint8_t, 16> tag{};

  std::vector<std::uint8_t> serialize() const;
  /// Throws Error(IoFailure) on a truncated or foreign file.
  static VaultFile parse(std::span<const std::uint8_t> bytes);
};

/// Creates an empty vault at `path`, replacing any existing file.
/// Throws Error with WeakPassphrase or IoFailure.
VaultFile vault_init(const std::filesystem::path& path, const std::string& passphrase,
                     KdfCost cost = KdfCost::interactive());

/// Decrypts the whole attribute map. Throws Error(AuthenticationFailure) on a
/// wrong passphrase or any tampering.
AttributeMap vault_open(const std::filesystem::path& path, const std::string& passphrase);

/// Stores one attribute and re-seals under a fresh nonce. birthYear must be
/// an integer in [1900, current_year]; current_year defaults to the UTC year
/// now. Throws Error(InvalidAttributeValue) otherwise.
void vault_put(const std::filesystem::path& path, const std::string& passphrase, const std::string& key,
               const AttributeValue& value, std::optional<std::int64_t> current_year = std::nullopt);

/// Throws Error(UnknownAttribute) if absent.
AttributeValue vault_get(const std::filesystem::path& path, const std::string& passphrase, const std::string& key);

/// Exclusive advisory lock on `<path>.lock`, held for the lifetime of the
/// object. Throws Error(VaultLocked) if another holder exists.
class VaultLock {
 public:
  explicit VaultLock(const std::filesystem::path& vault_path);
  ~VaultLock();
  VaultLock(const VaultLock&) = delete;
  VaultLock& operator=(const VaultLock&) = delete;

 private:
  int fd_ = -1;
};

/// Fresh per-proof salt: uniform nonzero field element. Never persisted.
algebra::Scalar generate_salt(RandomSource& entropy);

std::string to_string(const AttributeValue& v);

}  // namespace zkc::vault
