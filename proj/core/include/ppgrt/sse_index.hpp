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

#ifndef PPGRT_SSE_INDEX_HPP_
#define PPGRT_SSE_INDEX_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ppgrt/bigint.hpp"
#include "ppgrt/edb.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/key_exchange.hpp"
#include "ppgrt/otp.hpp"
#include "ppgrt/paillier.hpp"
#include "ppgrt/random.hpp"
#include "ppgrt/system_keys.hpp"

namespace ppgrt {

// Pinned per-letter randomness for deterministic tests.
struct TrapdoorRandomness {
  BigInt rho;
  BigInt eta;
};

struct HardenedRandomness {
  BigInt rho;
  BigInt eta;
  BigInt a;
  // z = lambda * z_prime, see GenTrapdoorHardened.
  BigInt z_prime;
};

LetterTrapdoor GenTrapdoorBasic(const SystemKeys& keys, Letter letter,
                                Rng& rng);
LetterTrapdoor GenTrapdoorBasic(const SystemKeys& keys, Letter letter,
                                const TrapdoorRandomness& randomness);

// Hardened trapdoor at 1-based `position`:
//   s = (rho * gamma0 * H0(eta P) + gamma_j * z) * H'(W, s_pos) mod n
//   k = a * z mod phi(n^2)
// with gamma_j = a * L(g^lambda) / lambda mod n. The encrypted check
// L(c^(beta * b + k)) == s only holds when the r^n factor of c vanishes
// under exponent k, so z is drawn as lambda * z'. Published k values are
// therefore multiples of lambda (see LambdaLeakProbe).
LetterTrapdoor GenTrapdoorHardened(const SystemKeys& keys, Letter letter,
                                   const SharedSecret& secret,
                                   std::uint64_t position, Rng& rng);
LetterTrapdoor GenTrapdoorHardened(const SystemKeys& keys, Letter letter,
                                   const SharedSecret& secret,
                                   std::uint64_t position,
                                   const HardenedRandomness& randomness);

// The EDB plus the pads the CI keeps to itself.
struct GeneratedEdb {
  Edb edb;
  std::vector<OtpKey> pads;
};

EncryptedIndex GenIndex(const SystemKeys& keys, const Haplotype& haplotype,
                        IndexMode mode, const SharedSecret* secret, Rng& rng);

// Throws UsageError for an empty database or when hardened mode lacks a
// secret.
GeneratedEdb GenEdb(const SystemKeys& keys,
                    std::span<const Haplotype> database, IndexMode mode,
                    const SharedSecret* secret, Rng& rng);

// c_j = Enc(H(W_j)) in basic mode, Enc(H'(W_j, s_j)) in hardened mode.
EncryptedQuery GenQuery(const PublicParams& pk, const Haplotype& query,
                        IndexMode mode, const SharedSecret* secret, Rng& rng);

// Hash value the TI encrypts for the letter at 1-based `position`.
BigInt QueryLetterHash(const PublicParams& pk, Letter letter, IndexMode mode,
                       const SharedSecret* secret, std::uint64_t position);

}  // namespace ppgrt

#endif  // PPGRT_SSE_INDEX_HPP_
