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

#include "ppgrt/random.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "ppgrt/error.hpp"

namespace ppgrt {

namespace {

std::array<std::uint8_t, 32> Sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw CryptoError("SHA-256 evaluation failed");
  }
  return out;
}

std::array<std::uint8_t, 32> KeyFromSeed(std::uint64_t seed) {
  std::array<std::uint8_t, 16> input{'p', 'p', 'g', 'r', 't', '-', 'r', 'n'};
  for (int i = 0; i < 8; ++i) {
    input[8 + i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
  }
  return Sha256(input);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(KeyFromSeed(seed)) {}

Rng::Rng(const std::array<std::uint8_t, 32>& key) : key_(key) {}

Rng Rng::FromEntropy() {
  std::array<std::uint8_t, 32> key{};
  if (RAND_bytes(key.data(), static_cast<int>(key.size())) != 1) {
    throw CryptoError("operating system entropy unavailable");
  }
  return Rng(key);
}

Rng Rng::FromEnvironment() {
  if (const char* env = std::getenv("PPGRT_SEED"); env != nullptr && *env) {
    char* end = nullptr;
    unsigned long long seed = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' &&
        std::isdigit(static_cast<unsigned char>(*env))) {
      return Rng(seed);
    }
    throw UsageError("PPGRT_SEED must be a non-negative decimal integer");
  }
  return FromEntropy();
}

Rng Rng::FromOptionalSeed(std::optional<std::uint64_t> seed) {
  if (seed) return Rng(*seed);
  return FromEnvironment();
}

void Rng::Refill() {
  std::array<std::uint8_t, 40> input{};
  std::memcpy(input.data(), key_.data(), key_.size());
  for (int i = 0; i < 8; ++i) {
    input[32 + i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
  }
  ++counter_;
  block_ = Sha256(input);
  block_pos_ = 0;
}

void Rng::Fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (block_pos_ == block_.size()) Refill();
    byte = block_[block_pos_++];
  }
}

std::uint64_t Rng::NextU64() {
  std::array<std::uint8_t, 8> bytes{};
  Fill(bytes);
  std::uint64_t out = 0;
  for (auto b : bytes) out = (out << 8) | b;
  return out;
}

BigInt Rng::Below(const BigInt& bound) {
  if (bound <= 0) throw UsageError("random bound must be positive");
  const std::size_t bits = BitLength(bound);
  const std::size_t bytes = (bits + 7) / 8;
  const unsigned excess = static_cast<unsigned>(bytes * 8 - bits);
  std::vector<std::uint8_t> buffer(bytes);
  // Rejection sampling keeps the distribution exactly uniform.
  for (;;) {
    Fill(buffer);
    buffer[0] &= static_cast<std::uint8_t>(0xFFu >> excess);
    BigInt candidate = FromBytes(buffer);
    if (candidate < bound) return candidate;
  }
}

BigInt Rng::InRange(const BigInt& low, const BigInt& high) {
  if (low > high) throw UsageError("empty random range");
  return low + Below(high - low + 1);
}

BigInt Rng::UnitBelow(const BigInt& modulus) {
  if (modulus <= 1) throw UsageError("modulus must exceed 1");
  for (;;) {
    BigInt candidate = Below(modulus);
    if (candidate != 0 && Gcd(candidate, modulus) == 1) return candidate;
  }
}

BigInt Rng::WithTopBits(std::size_t bits) {
  if (bits < 2) throw UsageError("need at least two bits");
  BigInt value = Below(BigInt(1) << static_cast<mp_bitcnt_t>(bits));
  mpz_setbit(value.get_mpz_t(), bits - 1);
  mpz_setbit(value.get_mpz_t(), bits - 2);
  return value;
}

Rng Rng::Fork() {
  std::array<std::uint8_t, 32> child{};
  Fill(child);
  return Rng(child);
}

}  // namespace ppgrt
