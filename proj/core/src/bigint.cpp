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

#include "ppgrt/bigint.hpp"

#include <algorithm>

#include "ppgrt/error.hpp"

namespace ppgrt {

std::string ToHex(const BigInt& value) {
  if (value < 0) throw FormatError("negative values have no hex encoding");
  return value.get_str(16);
}

BigInt FromHex(std::string_view hex) {
  if (hex.empty()) throw FormatError("empty hex integer");
  for (char c : hex) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') ||
              (c >= 'A' && c <= 'F');
    if (!ok) {
      throw FormatError("invalid hex digit '" + std::string(1, c) + "'");
    }
  }
  return BigInt(std::string(hex), 16);
}

std::vector<std::uint8_t> ToBytes(const BigInt& value, std::size_t width) {
  if (value < 0) throw FormatError("negative values have no byte encoding");
  std::size_t count = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  if (value == 0) count = 0;
  if (width != 0 && count > width) {
    throw FormatError("integer does not fit in " + std::to_string(width) +
                      " bytes");
  }
  std::vector<std::uint8_t> out(std::max(count, width), 0);
  if (count > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (out.size() - count), &written, 1, 1, 1, 0,
               value.get_mpz_t());
  }
  return out;
}

BigInt FromBytes(std::span<const std::uint8_t> bytes) {
  BigInt out;
  if (!bytes.empty()) {
    mpz_import(out.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return out;
}

BigInt PowMod(const BigInt& base, const BigInt& exponent,
              const BigInt& modulus) {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           modulus.get_mpz_t());
  return out;
}

BigInt InvMod(const BigInt& value, const BigInt& modulus) {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()) ==
      0) {
    throw CryptoError("value is not invertible modulo the given modulus");
  }
  return out;
}

BigInt Gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt Mod(const BigInt& value, const BigInt& modulus) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

std::size_t BitLength(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

bool IsProbablePrime(const BigInt& value, int rounds) {
  return mpz_probab_prime_p(value.get_mpz_t(), rounds) != 0;
}

}  // namespace ppgrt
