/*
 * Copyright 2026 The PPGRT Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPGRT_SERIALIZATION_HPP_
#define PPGRT_SERIALIZATION_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppgrt/edb.hpp"
#include "ppgrt/key_exchange.hpp"
#include "ppgrt/matcher.hpp"
#include "ppgrt/otp.hpp"
#include "ppgrt/paillier.hpp"
#include "ppgrt/spu_key.hpp"
#include "ppgrt/system_keys.hpp"

// Text file formats. Every file starts with a magic tag line; the remaining
// lines are `label=value`. Ring and group elements are lowercase big-endian
// hex without a prefix, counts are decimal, byte strings are two hex digits
// per byte. Parsers throw FormatError naming the offending line.
namespace ppgrt::io {

inline constexpr std::string_view kPublicKeyTag = "PPGRT1-PK";
inline constexpr std::string_view kSecretKeyTag = "PPGRT1-SK";
inline constexpr std::string_view kSpuKeyTag = "PPGRT1-SPK";
inline constexpr std::string_view kEdbTag = "PPGRT1-EDB";
inline constexpr std::string_view kQueryTag = "PPGRT1-QRY";
inline constexpr std::string_view kResultTag = "PPGRT1-RES";
inline constexpr std::string_view kPadsTag = "PPGRT1-OTP";
inline constexpr std::string_view kSecretTag = "PPGRT1-SECRET";
inline constexpr std::string_view kDhPublicTag = "PPGRT1-DH";
inline constexpr std::string_view kDhPrivateTag = "PPGRT1-DHPRIV";
inline constexpr std::string_view kPaillierPublicTag = "PPGRT1-PAILLIER-PK";
inline constexpr std::string_view kPaillierSecretTag = "PPGRT1-PAILLIER-SK";

// A parsed `label=value` record.
struct Record {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> fields;

  // Throws FormatError when the label is missing.
  const std::string& Get(std::string_view label) const;
  bool Has(std::string_view label) const;
  std::vector<std::string> Labels() const;
};

Record ParseRecord(std::string_view text);
std::string FormatRecord(const Record& record);

std::string HexBytes(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> ParseHexBytes(std::string_view hex);

std::string SerializePaillierPublic(const paillier::PublicKey& pk);
paillier::PublicKey ParsePaillierPublic(std::string_view text);
std::string SerializePaillierSecret(const paillier::KeyPair& keys);
paillier::KeyPair ParsePaillierSecret(std::string_view text);

std::string SerializePublicParams(const PublicParams& pk);
// Accepts a public or a secret key file.
PublicParams ParsePublicParams(std::string_view text);

std::string SerializeSystemKeys(const SystemKeys& keys);
// Recomputes the derived values and rejects inconsistent files.
SystemKeys ParseSystemKeys(std::string_view text);

// Fields: k, L, n, beta.
std::string SerializeSpuKey(const SpuKey& spk);
// Rejects anything but a PPGRT1-SPK file, in particular secret keys.
SpuKey ParseSpuKey(std::string_view text);

std::string SerializeEdb(const Edb& edb);
Edb ParseEdb(std::string_view text);

std::string SerializeQuery(const EncryptedQuery& query);
EncryptedQuery ParseQuery(std::string_view text);

// Magic line, then `entry_id<TAB>algo<TAB>shared_length` or
// `entry_id<TAB>algo<TAB>ERROR:<code>` per entry.
std::string SerializeResults(const QueryResultList& results);
QueryResultList ParseResults(std::string_view text);

std::string SerializePads(std::span<const OtpKey> pads);
std::vector<OtpKey> ParsePads(std::string_view text);

std::string SerializeSharedSecret(const SharedSecret& secret);
SharedSecret ParseSharedSecret(std::string_view text);

std::string SerializeDhPublic(const DhPublicMessage& message);
DhPublicMessage ParseDhPublic(std::string_view text);
std::string SerializeDhKeyPair(const DhKeyPair& pair);
DhKeyPair ParseDhKeyPair(std::string_view text);

std::string ReadFile(const std::filesystem::path& path);
// Writes via a temporary file in the same directory, then renames.
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace ppgrt::io

#endif  // PPGRT_SERIALIZATION_HPP_
