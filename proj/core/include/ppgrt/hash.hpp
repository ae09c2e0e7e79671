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

#ifndef PPGRT_HASH_HPP_
#define PPGRT_HASH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppgrt/bigint.hpp"
#include "ppgrt/haplotype.hpp"

namespace ppgrt {

enum class HashAlgorithm {
  kSha256,
  // Compatibility with the MD5-based reference evaluation. Not for new
  // deployments.
  kMd5,
};

std::string_view HashAlgorithmName(HashAlgorithm algorithm);
HashAlgorithm ParseHashAlgorithm(std::string_view name);

// Raw digest of `data` under the chosen algorithm.
std::vector<std::uint8_t> Digest(HashAlgorithm algorithm,
                                 std::span<const std::uint8_t> data);

// Hash family onto Z_n. Every member is the same digest function expanded in
// counter mode to bitlen(n) + 128 bits and reduced mod n; members differ
// only by their domain-separation tag.
//
//   H(W)        tag "H",  input: letter byte
//   H(p || W)   tag "H",  input: 8-byte big-endian position, letter byte
//   H0(eta*P)   tag "H0", input: group element, fixed width
//   H'(W, s)    tag "Hp", input: letter byte, salt, fixed width
//   KDF         tag "kdf-a" / "kdf-b", input: shared DH value
class Hasher {
 public:
  Hasher(HashAlgorithm algorithm, BigInt modulus);

  HashAlgorithm algorithm() const { return algorithm_; }
  const BigInt& modulus() const { return modulus_; }

  BigInt ToZn(std::string_view tag, std::span<const std::uint8_t> input) const;

  BigInt Letter(ppgrt::Letter letter) const;
  BigInt PositionLetter(std::uint64_t position, ppgrt::Letter letter) const;
  BigInt GroupElement(const BigInt& element) const;
  BigInt SaltedLetter(ppgrt::Letter letter, const BigInt& salt) const;

 private:
  std::vector<std::uint8_t> FixedWidth(const BigInt& value) const;

  HashAlgorithm algorithm_;
  BigInt modulus_;
  std::size_t element_bytes_;
};

}  // namespace ppgrt

#endif  // PPGRT_HASH_HPP_
