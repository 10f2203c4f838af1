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

#include "zkc/vault.hpp"

#include <fcntl.h>
#include <sodium.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>

#include <nlohmann/json.hpp>

#include "zkc/error.hpp"
#include "zkc/registry.hpp"

namespace zkc::vault {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'S', 'D', 'V', '1'};
constexpr std::size_t kHeaderSize = 52;
constexpr std::size_t kTagSize = 16;

static_assert(crypto_aead_chacha20poly1305_ietf_NPUBBYTES == 12);
static_assert(crypto_aead_chacha20poly1305_ietf_ABYTES == kTagSize);
static_assert(crypto_pwhash_SALTBYTES == 16);

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, std::size_t width) {
  for (std::size_t i = 0; i < width; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, std::size_t width) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(in[offset + i]) << (8 * i);
  return v;
}

void ensure_sodium() {
  if (sodium_init() < 0) throw Error(Errc::EntropyUnavailable, "libsodium initialisation failed");
}

using Key = std::array<std::uint8_t, crypto_aead_chacha20poly1305_ietf_KEYBYTES>;

// Zeroes the derived key on scope exit.
struct KeyGuard {
  Key key{};
  ~KeyGuard() { sodium_memzero(key.data(), key.size()); }
};

void derive_key(Key& key, const std::string& passphrase, const VaultFile& f) {
  if (crypto_pwhash(key.data(), key.size(), passphrase.data(), passphrase.size(), f.kdf_salt.data(),
                    f.kdf.opslimit, static_cast<std::size_t>(f.kdf.memlimit), crypto_pwhash_ALG_ARGON2ID13) != 0) {
    throw Error(Errc::IoFailure, "key derivation failed (out of memory?)");
  }
}

std::vector<std::uint8_t> header_bytes(const VaultFile& f, std::size_t ct_len) {
  std::vector<std::uint8_t> h(kMagic.begin(), kMagic.end());
  h.insert(h.end(), f.kdf_salt.begin(), f.kdf_salt.end());
  put_le(h, f.kdf.opslimit, 8);
  put_le(h, f.kdf.memlimit, 8);
  h.insert(h.end(), f.nonce.begin(), f.nonce.end());
  put_le(h, ct_len, 4);
  return h;
}

std::string encode_payload(const AttributeMap& attrs) {
  nlohmann::ordered_json doc;
  doc["attributes"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : attrs) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) {
      doc["attributes"][k] = *i;
    } else {
      doc["attributes"][k] = std::get<std::string>(v);
    }
  }
  return doc.dump();
}

AttributeMap decode_payload(std::span<const std::uint8_t> plain) {
  const auto doc = nlohmann::json::parse(plain.begin(), plain.end(), nullptr, false);
  if (doc.is_discarded() || !doc.contains("attributes")) {
    throw Error(Errc::AuthenticationFailure, "payload is not a well-formed attribute map");
  }
  AttributeMap out;
  for (const auto& [k, v] : doc["attributes"].items()) {
    if (v.is_number_integer()) {
      out[k] = v.get<std::int64_t>();
    } else {
      out[k] = v.get<std::string>();
    }
  }
  return out;
}

VaultFile seal(const AttributeMap& attrs, const std::string& passphrase, std::array<std::uint8_t, 16> kdf_salt,
               KdfCost cost) {
  VaultFile f;
  f.kdf_salt = kdf_salt;
  f.kdf = cost;
  randombytes_buf(f.nonce.data(), f.nonce.size());

  const std::string plain = encode_payload(attrs);
  const auto aad = header_bytes(f, plain.size());
  KeyGuard k;
  derive_key(k.key, passphrase, f);
  f.ciphertext.resize(plain.size());
  unsigned long long tag_len = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt_detached(
      f.ciphertext.data(), f.tag.data(), &tag_len, reinterpret_cast<const unsigned char*>(plain.data()),
      plain.size(), aad.data(), aad.size(), nullptr, f.nonce.data(), k.key.data());
  return f;
}

AttributeMap unseal(const VaultFile& f, const std::string& passphrase) {
  const auto aad = header_bytes(f, f.ciphertext.size());
  KeyGuard k;
  derive_key(k.key, passphrase, f);
  std::vector<std::uint8_t> plain(f.ciphertext.size());
  if (crypto_aead_chacha20poly1305_ietf_decrypt_detached(plain.data(), nullptr, f.ciphertext.data(),
                                                         f.ciphertext.size(), f.tag.data(), aad.data(), aad.size(),
                                                         f.nonce.data(), k.key.data()) != 0) {
    throw Error(Errc::AuthenticationFailure, "wrong passphrase or tampered vault");
  }
  auto attrs = decode_payload(plain);
  sodium_memzero(plain.data(), plain.size());
  return attrs;
}

VaultFile read_vault(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoFailure, "cannot open vault " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return VaultFile::parse(bytes);
}

// Write-then-rename so a crash leaves either the old or the new vault.
void write_vault(const fs::path& path, const VaultFile& f) {
  const auto bytes = f.serialize();
  fs::path tmp = path;
  tmp += ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
  if (fd < 0) throw Error(Errc::IoFailure, "cannot write " + tmp.string() + ": " + std::strerror(errno));
  std::size_t off = 0;
  while (off < bytes.size()) {
    const ssize_t n = ::write(fd, bytes.data() + off, bytes.size() - off);
    if (n <= 0) {
      ::close(fd);
      throw Error(Errc::IoFailure, "short write to " + tmp.string());
    }
    off += static_cast<std::size_t>(n);
  }
  ::fsync(fd);
  ::close(fd);
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(Errc::IoFailure, "cannot replace " + path.string() + ": " + ec.message());
}

void validate_attribute(const std::string& key, const AttributeValue& value, std::optional<std::int64_t> current) {
  if (key != kBirthYearKey) return;
  const auto* year = std::get_if<std::int64_t>(&value);
  const std::int64_t now_year = current.value_or(registry::calendar_year(
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count()));
  if (year == nullptr || *year < kMinBirthYear || *year > now_year) {
    throw Error(Errc::InvalidAttributeValue,
                "birthYear must be an integer in [1900, " + std::to_string(now_year) + "]");
  }
}

}  // namespace

KdfCost KdfCost::interactive() {
  return {crypto_pwhash_OPSLIMIT_INTERACTIVE, crypto_pwhash_MEMLIMIT_INTERACTIVE};
}

KdfCost KdfCost::light() { return {1, 1U << 20}; }

std::vector<std::uint8_t> VaultFile::serialize() const {
  auto out = header_bytes(*this, ciphertext.size());
  out.insert(out.end(), ciphertext.begin(), ciphertext.end());
  out.insert(out.end(), tag.begin(), tag.end());
  return out;
}

VaultFile VaultFile::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize + kTagSize || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(Errc::IoFailure, "not a vault file");
  }
  VaultFile f;
  std::copy_n(bytes.begin() + 4, 16, f.kdf_salt.begin());
  f.kdf.opslimit = get_le(bytes, 20, 8);
  f.kdf.memlimit = get_le(bytes, 28, 8);
  std::copy_n(bytes.begin() + 36, 12, f.nonce.begin());
  const std::size_t len = get_le(bytes, 48, 4);
  if (bytes.size() != kHeaderSize + len + kTagSize) throw Error(Errc::IoFailure, "vault file length mismatch");
  f.ciphertext.assign(bytes.begin() + kHeaderSize, bytes.begin() + static_cast<std::ptrdiff_t>(kHeaderSize + len));
  std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(kHeaderSize + len), kTagSize, f.tag.begin());
  return f;
}

VaultLock::VaultLock(const fs::path& vault_path) {
  fs::path lock = vault_path;
  lock += ".lock";
  fd_ = ::open(lock.c_str(), O_RDWR | O_CREAT, 0600);
  if (fd_ < 0) throw Error(Errc::IoFailure, "cannot open lock file " + lock.string());
  if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd_);
    fd_ = -1;
    throw Error(Errc::VaultLocked, "vault " + vault_path.string() + " is in use by another process");
  }
}

VaultLock::~VaultLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

VaultFile vault_init(const fs::path& path, const std::string& passphrase, KdfCost cost) {
  ensure_sodium();
  if (passphrase.size() < kMinPassphraseLength) {
    throw Error(Errc::WeakPassphrase, "passphrase must have at least 8 characters");
  }
  if (path.has_parent_path() && !fs::exists(path.parent_path())) {
    throw Error(Errc::IoFailure, "directory does not exist: " + path.parent_path().string());
  }
  VaultLock lock(path);
  std::array<std::uint8_t, 16> kdf_salt{};
  randombytes_buf(kdf_salt.data(), kdf_salt.size());
  auto f = seal({}, passphrase, kdf_salt, cost);
  write_vault(path, f);
  return f;
}

AttributeMap vault_open(const fs::path& path, const std::string& passphrase) {
  ensure_sodium();
  VaultLock lock(path);
  return unseal(read_vault(path), passphrase);
}

void vault_put(const fs::path& path, const std::string& passphrase, const std::string& key,
               const AttributeValue& value, std::optional<std::int64_t> current_year) {
  ensure_sodium();
  validate_attribute(key, value, current_year);
  VaultLock lock(path);
  const VaultFile old = read_vault(path);
  auto attrs = unseal(old, passphrase);
  attrs[key] = value;
  write_vault(path, seal(attrs, passphrase, old.kdf_salt, old.kdf));
}

AttributeValue vault_get(const fs::path& path, const std::string& passphrase, const std::string& key) {
  const auto attrs = vault_open(path, passphrase);
  const auto it = attrs.find(key);
  if (it == attrs.end()) throw Error(Errc::UnknownAttribute, "no attribute named " + key);
  return it->second;
}

algebra::Scalar generate_salt(RandomSource& entropy) { return random_nonzero_scalar(entropy); }

std::string to_string(const AttributeValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

}  // namespace zkc::vault
