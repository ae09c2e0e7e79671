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

#ifndef PPGRT_BIGINT_HPP_
#define PPGRT_BIGINT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppgrt {

using BigInt = mpz_class;

// Lowercase big-endian hex without prefix; zero renders as "0".
std::string ToHex(const BigInt& value);

// Accepts lowercase or uppercase hex digits only. Throws FormatError.
BigInt FromHex(std::string_view hex);

// Big-endian magnitude, left-padded with zeros to `width` bytes when
// `width` is nonzero. Throws if the value does not fit.
std::vector<std::uint8_t> ToBytes(const BigInt& value, std::size_t width = 0);
BigInt FromBytes(std::span<const std::uint8_t> bytes);

BigInt PowMod(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

// Throws CryptoError when the inverse does not exist.
BigInt InvMod(const BigInt& value, const BigInt& modulus);

BigInt Gcd(const BigInt& a, const BigInt& b);
BigInt Lcm(const BigInt& a, const BigInt& b);

// Non-negative residue of value mod modulus.
BigInt Mod(const BigInt& value, const BigInt& modulus);

std::size_t BitLength(const BigInt& value);

bool IsProbablePrime(const BigInt& value, int rounds = 40);

}  // namespace ppgrt

#endif  // PPGRT_BIGINT_HPP_
