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

#include "ppgrt/hash.hpp"

#include <openssl/evp.h>

#include <array>

#include "ppgrt/error.hpp"

namespace ppgrt {

std::string_view HashAlgorithmName(HashAlgorithm algorithm) {
  switch (algorithm) {
    case HashAlgorithm::kSha256:
      return "sha256";
    case HashAlgorithm::kMd5:
      return "md5";
  }
  return "unknown";
}

HashAlgorithm ParseHashAlgorithm(std::string_view name) {
  if (name == "sha256") return HashAlgorithm::kSha256;
  if (name == "md5") return HashAlgorithm::kMd5;
  throw UsageError("unknown hash algorithm '" + std::string(name) + "'");
}

std::vector<std::uint8_t> Digest(HashAlgorithm algorithm,
                                 std::span<const std::uint8_t> data) {
  const EVP_MD* md =
      algorithm == HashAlgorithm::kMd5 ? EVP_md5() : EVP_sha256();
  std::vector<std::uint8_t> out(EVP_MD_get_size(md));
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, md, nullptr) !=
      1) {
    throw CryptoError("digest evaluation failed");
  }
  out.resize(len);
  return out;
}

Hasher::Hasher(HashAlgorithm algorithm, BigInt modulus)
    : algorithm_(algorithm),
      modulus_(std::move(modulus)),
      element_bytes_((BitLength(modulus_) + 7) / 8) {
  if (modulus_ < 2) throw UsageError("hash modulus must be at least 2");
}

BigInt Hasher::ToZn(std::string_view tag,
                    std::span<const std::uint8_t> input) const {
  const std::size_t wanted_bytes = (BitLength(modulus_) + 128 + 7) / 8;
  std::vector<std::uint8_t> message;
  message.reserve(tag.size() + 5 + input.size());
  message.insert(message.end(), tag.begin(), tag.end());
  message.push_back(0);
  const std::size_t counter_at = message.size();
  message.resize(counter_at + 4);
  message.insert(message.end(), input.begin(), input.end());

  std::vector<std::uint8_t> stream;
  for (std::uint32_t counter = 0; stream.size() < wanted_bytes; ++counter) {
    for (int i = 0; i < 4; ++i) {
      message[counter_at + i] =
          static_cast<std::uint8_t>(counter >> (24 - 8 * i));
    }
    auto block = Digest(algorithm_, message);
    stream.insert(stream.end(), block.begin(), block.end());
  }
  stream.resize(wanted_bytes);
  return Mod(FromBytes(stream), modulus_);
}

BigInt Hasher::Letter(ppgrt::Letter letter) const {
  const std::uint8_t byte = Encode(letter);
  return ToZn("H", std::span(&byte, 1));
}

BigInt Hasher::PositionLetter(std::uint64_t position,
                              ppgrt::Letter letter) const {
  std::array<std::uint8_t, 9> input{};
  for (int i = 0; i < 8; ++i) {
    input[i] = static_cast<std::uint8_t>(position >> (56 - 8 * i));
  }
  input[8] = Encode(letter);
  return ToZn("H", input);
}

BigInt Hasher::GroupElement(const BigInt& element) const {
  return ToZn("H0", FixedWidth(element));
}

BigInt Hasher::SaltedLetter(ppgrt::Letter letter, const BigInt& salt) const {
  std::vector<std::uint8_t> input{Encode(letter)};
  auto salt_bytes = FixedWidth(salt);
  input.insert(input.end(), salt_bytes.begin(), salt_bytes.end());
  return ToZn("Hp", input);
}

std::vector<std::uint8_t> Hasher::FixedWidth(const BigInt& value) const {
  return ToBytes(Mod(value, modulus_), element_bytes_);
}

}  // namespace ppgrt
