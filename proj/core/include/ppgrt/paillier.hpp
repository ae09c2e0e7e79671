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

#ifndef PPGRT_PAILLIER_HPP_
#define PPGRT_PAILLIER_HPP_

#include <chrono>
#include <cstddef>
#include <optional>

#include "ppgrt/bigint.hpp"
#include "ppgrt/random.hpp"

namespace ppgrt::paillier {

struct PublicKey {
  BigInt n;
  BigInt n_squared;
  BigInt g;
  std::size_t bit_length = 0;

  // Public key for modulus n with base g (n + 1 when omitted). Only checks
  // that g lies in Z*_{n^2}; the order of g is validated at key generation.
  static PublicKey FromModulus(const BigInt& n,
                               std::optional<BigInt> g = std::nullopt);

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SecretKey {
  BigInt p;
  BigInt q;
  // Sophie Germain halves (p - 1) / 2 and (q - 1) / 2 when both are prime,
  // zero otherwise.
  BigInt p_prime;
  BigInt q_prime;
  BigInt lambda;  // lcm(p - 1, q - 1)
  BigInt mu;      // L(g^lambda mod n^2)^-1 mod n

  bool safe_primes() const { return p_prime != 0 && q_prime != 0; }
  BigInt phi() const { return (p - 1) * (q - 1); }
  BigInt phi_n_squared() const { return p * q * phi(); }

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct Ciphertext {
  BigInt value;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct KeyPair {
  PublicKey pub;
  SecretKey sec;
};

inline constexpr std::size_t kMinTestBits = 128;
inline constexpr std::size_t kFullBits = 2048;

struct KeygenOptions {
  std::size_t bits = kFullBits;
  bool safe_primes = true;
  std::optional<std::chrono::milliseconds> timeout;
};

// Generates an n of exactly `bits` bits from two primes of about bits/2 each.
// Throws UsageError for bits < kMinTestBits and CryptoError on timeout.
KeyPair Keygen(const KeygenOptions& options, Rng& rng);

// Builds keys from caller-chosen primes. Validates primality, p != q,
// gcd(n, phi(n)) == 1, and that L(g^lambda mod n^2) is invertible mod n.
KeyPair KeysFromPrimes(const BigInt& p, const BigInt& q,
                       std::optional<BigInt> g = std::nullopt);

BigInt CarmichaelLambda(const BigInt& p, const BigInt& q);

// Uniform prime of exactly `bits` bits with the top two bits set.
BigInt RandomPrime(std::size_t bits, Rng& rng);

// Safe prime p = 2p' + 1 of exactly `bits` bits.
BigInt RandomSafePrime(
    std::size_t bits, Rng& rng,
    std::optional<std::chrono::steady_clock::time_point> deadline =
        std::nullopt);

// L(x) = (x - 1) / n. Requires x = 1 (mod n); throws CryptoError otherwise.
BigInt LFunction(const BigInt& x, const BigInt& n);

// g^x * r^n mod n^2 with fresh r.
Ciphertext Encrypt(const PublicKey& pk, const BigInt& x, Rng& rng);
// Same with caller-supplied r; requires 0 < r < n and gcd(r, n) == 1.
Ciphertext EncryptWithNonce(const PublicKey& pk, const BigInt& x,
                            const BigInt& r);

BigInt Decrypt(const SecretKey& sk, const PublicKey& pk, const Ciphertext& y);

// Enc(x1) * Enc(x2) decrypts to x1 + x2 mod n.
Ciphertext HomAdd(const PublicKey& pk, const Ciphertext& y1,
                  const Ciphertext& y2);
// Enc(x)^sigma decrypts to sigma * x mod n. sigma >= 1.
Ciphertext HomScale(const PublicKey& pk, const Ciphertext& y,
                    const BigInt& sigma);

// 0 < value < n^2 and gcd(value, n) == 1.
bool IsValidCiphertext(const PublicKey& pk, const Ciphertext& y);

}  // namespace ppgrt::paillier

#endif  // PPGRT_PAILLIER_HPP_
