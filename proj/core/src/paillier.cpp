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

#include "ppgrt/paillier.hpp"

#include <vector>

#include "ppgrt/error.hpp"

namespace ppgrt::paillier {

namespace {

// Odd primes below 2^16 for sieving candidate pairs (p', 2p' + 1).
const std::vector<unsigned>& SmallPrimes() {
  static const std::vector<unsigned> primes = [] {
    constexpr unsigned kLimit = 1u << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<unsigned> out;
    for (unsigned i = 3; i < kLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = static_cast<unsigned long>(i) * i; j < kLimit;
           j += 2 * i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

void CheckDeadline(
    const std::optional<std::chrono::steady_clock::time_point>& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw CryptoError("prime generation timed out");
  }
}

void RequireCiphertext(const PublicKey& pk, const Ciphertext& y) {
  if (!IsValidCiphertext(pk, y)) {
    throw CryptoError("ciphertext is not a unit modulo this key's n^2");
  }
}

}  // namespace

PublicKey PublicKey::FromModulus(const BigInt& n, std::optional<BigInt> g) {
  if (n < 3) throw UsageError("Paillier modulus too small");
  PublicKey pk;
  pk.n = n;
  pk.n_squared = n * n;
  pk.g = g.value_or(n + 1);
  pk.bit_length = BitLength(n);
  if (pk.g <= 0 || pk.g >= pk.n_squared || Gcd(pk.g, n) != 1) {
    throw CryptoError("base g is not in Z*_{n^2}");
  }
  return pk;
}

BigInt CarmichaelLambda(const BigInt& p, const BigInt& q) {
  return Lcm(p - 1, q - 1);
}

BigInt LFunction(const BigInt& x, const BigInt& n) {
  if (Mod(x, n) != 1) throw CryptoError("L-function input is not 1 mod n");
  BigInt out;
  mpz_divexact(out.get_mpz_t(), BigInt(x - 1).get_mpz_t(), n.get_mpz_t());
  return out;
}

BigInt RandomPrime(std::size_t bits, Rng& rng) {
  if (bits < 4) throw UsageError("prime size too small");
  for (;;) {
    BigInt start = rng.WithTopBits(bits);
    BigInt prime;
    mpz_nextprime(prime.get_mpz_t(), start.get_mpz_t());
    if (BitLength(prime) == bits) return prime;
  }
}

BigInt RandomSafePrime(
    std::size_t bits, Rng& rng,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (bits < 6) throw UsageError("safe prime size too small");
  const auto& small = SmallPrimes();
  constexpr unsigned long kWindow = 1ul << 20;
  std::vector<unsigned long> residues(small.size());

  for (;;) {
    CheckDeadline(deadline);
    // p' has bits - 1 bits with the top two set, so p = 2p' + 1 has them too.
    BigInt base = rng.WithTopBits(bits - 1);
    mpz_setbit(base.get_mpz_t(), 0);
    for (std::size_t i = 0; i < small.size(); ++i) {
      residues[i] = mpz_fdiv_ui(base.get_mpz_t(), small[i]);
    }
    for (unsigned long delta = 0; delta < kWindow; delta += 2) {
      bool survives = true;
      for (std::size_t i = 0; i < small.size(); ++i) {
        const unsigned long sp = small[i];
        const unsigned long r = (residues[i] + delta) % sp;
        // p' = 0 (mod sp) or 2p' + 1 = 0 (mod sp).
        if (r == 0 || r == (sp - 1) / 2) {
          // Tiny primes equal to p' itself are never reached at these sizes.
          survives = false;
          break;
        }
      }
      if (!survives) continue;
      if ((delta & 0x3ffe) == 0) CheckDeadline(deadline);
      BigInt half = base + delta;
      BigInt candidate = 2 * half + 1;
      if (BitLength(candidate) != bits) break;
      if (!IsProbablePrime(half, 1)) continue;
      if (!IsProbablePrime(candidate, 25) || !IsProbablePrime(half, 25)) {
        continue;
      }
      return candidate;
    }
  }
}

KeyPair KeysFromPrimes(const BigInt& p, const BigInt& q,
                       std::optional<BigInt> g) {
  if (p == q) throw CryptoError("Paillier primes must be distinct");
  if (p < 3 || q < 3 || !IsProbablePrime(p) || !IsProbablePrime(q)) {
    throw CryptoError("Paillier factors must be odd primes");
  }
  const BigInt n = p * q;
  if (Gcd(n, (p - 1) * (q - 1)) != 1) {
    throw CryptoError("gcd(n, phi(n)) != 1 for the chosen primes");
  }
  KeyPair keys;
  keys.pub = PublicKey::FromModulus(n, std::move(g));
  keys.sec.p = p;
  keys.sec.q = q;
  const BigInt hp = (p - 1) / 2;
  const BigInt hq = (q - 1) / 2;
  if (IsProbablePrime(hp) && IsProbablePrime(hq)) {
    keys.sec.p_prime = hp;
    keys.sec.q_prime = hq;
  }
  keys.sec.lambda = CarmichaelLambda(p, q);
  if (Gcd(keys.sec.lambda, n) != 1) {
    throw CryptoError("gcd(lambda, n) != 1");
  }
  const BigInt u = PowMod(keys.pub.g, keys.sec.lambda, keys.pub.n_squared);
  const BigInt l = LFunction(u, n);
  if (Gcd(l, n) != 1) {
    throw CryptoError("base g does not have order a multiple of n");
  }
  keys.sec.mu = InvMod(l, n);
  return keys;
}

KeyPair Keygen(const KeygenOptions& options, Rng& rng) {
  if (options.bits < kMinTestBits) {
    throw UsageError("Paillier modulus must have at least " +
                     std::to_string(kMinTestBits) + " bits");
  }
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options.timeout) {
    deadline = std::chrono::steady_clock::now() + *options.timeout;
  }
  const std::size_t p_bits = (options.bits + 1) / 2;
  const std::size_t q_bits = options.bits / 2;
  for (;;) {
    BigInt p = options.safe_primes ? RandomSafePrime(p_bits, rng, deadline)
                                   : RandomPrime(p_bits, rng);
    BigInt q = options.safe_primes ? RandomSafePrime(q_bits, rng, deadline)
                                   : RandomPrime(q_bits, rng);
    if (p == q || BitLength(p * q) != options.bits) continue;
    try {
      return KeysFromPrimes(p, q);
    } catch (const Error&) {
      CheckDeadline(deadline);
    }
  }
}

bool IsValidCiphertext(const PublicKey& pk, const Ciphertext& y) {
  return y.value > 0 && y.value < pk.n_squared && Gcd(y.value, pk.n) == 1;
}

Ciphertext EncryptWithNonce(const PublicKey& pk, const BigInt& x,
                            const BigInt& r) {
  if (x < 0 || x >= pk.n) throw UsageError("plaintext out of range [0, n)");
  if (r <= 0 || r >= pk.n || Gcd(r, pk.n) != 1) {
    throw CryptoError("degenerate encryption nonce");
  }
  BigInt gx;
  if (pk.g == pk.n + 1) {
    gx = Mod(1 + x * pk.n, pk.n_squared);
  } else {
    gx = PowMod(pk.g, x, pk.n_squared);
  }
  return Ciphertext{Mod(gx * PowMod(r, pk.n, pk.n_squared), pk.n_squared)};
}

Ciphertext Encrypt(const PublicKey& pk, const BigInt& x, Rng& rng) {
  return EncryptWithNonce(pk, x, rng.UnitBelow(pk.n));
}

BigInt Decrypt(const SecretKey& sk, const PublicKey& pk, const Ciphertext& y) {
  RequireCiphertext(pk, y);
  const BigInt u = PowMod(y.value, sk.lambda, pk.n_squared);
  return Mod(LFunction(u, pk.n) * sk.mu, pk.n);
}

Ciphertext HomAdd(const PublicKey& pk, const Ciphertext& y1,
                  const Ciphertext& y2) {
  RequireCiphertext(pk, y1);
  RequireCiphertext(pk, y2);
  return Ciphertext{Mod(y1.value * y2.value, pk.n_squared)};
}

Ciphertext HomScale(const PublicKey& pk, const Ciphertext& y,
                    const BigInt& sigma) {
  RequireCiphertext(pk, y);
  if (sigma < 1) throw UsageError("scalar must be a positive integer");
  return Ciphertext{PowMod(y.value, sigma, pk.n_squared)};
}

}  // namespace ppgrt::paillier
