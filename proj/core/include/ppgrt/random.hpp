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

#ifndef PPGRT_RANDOM_HPP_
#define PPGRT_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "ppgrt/bigint.hpp"

namespace ppgrt {

// Deterministic random bit generator: SHA-256 over (seed key || counter).
// A seeded instance replays the same stream, which is how tests and the
// PPGRT_SEED environment variable pin every probabilistic operation.
// Instances are not thread-safe; give each worker its own (see Fork()).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Seeds from the operating system entropy pool.
  static Rng FromEntropy();

  // Seed from PPGRT_SEED when set, otherwise from entropy. A value that is
  // not a decimal integer throws UsageError.
  static Rng FromEnvironment();

  // Explicit seed wins over PPGRT_SEED, which wins over entropy.
  static Rng FromOptionalSeed(std::optional<std::uint64_t> seed);

  void Fill(std::span<std::uint8_t> out);
  std::uint64_t NextU64();

  // Uniform in [0, bound). bound must be positive.
  BigInt Below(const BigInt& bound);

  // Uniform in [low, high]. Requires low <= high.
  BigInt InRange(const BigInt& low, const BigInt& high);

  // Uniform unit of Z_modulus, i.e. in [1, modulus) and coprime to it.
  BigInt UnitBelow(const BigInt& modulus);

  // Exactly `bits` bits wide with the top two bits set.
  BigInt WithTopBits(std::size_t bits);

  // Independent child stream derived from this one.
  Rng Fork();

 private:
  explicit Rng(const std::array<std::uint8_t, 32>& key);
  void Refill();

  std::array<std::uint8_t, 32> key_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t block_pos_ = 32;
};

}  // namespace ppgrt

#endif  // PPGRT_RANDOM_HPP_
