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

#ifndef PPGRT_ATTACKS_HPP_
#define PPGRT_ATTACKS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ppgrt/bigint.hpp"
#include "ppgrt/edb.hpp"
#include "ppgrt/hash.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/paillier.hpp"
#include "ppgrt/random.hpp"
#include "ppgrt/spu_key.hpp"
#include "ppgrt/system_keys.hpp"

// Demonstrations of what a curious SPU can do with the basic index, and
// checks that the hardened index and the shared secret stop it.
namespace ppgrt::attacks {

struct LetterRecovery {
  // Best guess per position. Positions the attack could not resolve are
  // filled with a uniformly random letter.
  std::vector<Letter> guess;
  // Which positions were resolved by the attack itself.
  std::vector<bool> resolved;

  std::size_t resolved_count() const;
  // Fraction of positions where guess equals truth.
  double Accuracy(const Haplotype& truth) const;
};

struct RatioAttackResult {
  LetterRecovery recovery;
  // Letter hypotheses for the first position that explain every trapdoor.
  std::size_t consistent_hypotheses = 0;
  // 1 / consistent_hypotheses, or 0 when none is consistent.
  double confidence = 0.0;
};

// Identifier attack on (b, s) pairs. delta_j = s_j / b_j = gamma * H(W_j), so
// delta_j / delta_0 = H(W_j) / H(W_0) mod n. Each hypothesis for W_0 fixes
// gamma, after which every delta_j either lands on a known letter hash or
// does not. Requires at least two trapdoors.
RatioAttackResult RatioIdentifierAttack(
    std::span<const LetterTrapdoor> trapdoors, const Hasher& public_hash,
    std::span<const Letter> alphabet, Rng& rng);

struct DictionaryAttackResult {
  LetterRecovery recovery;
  std::size_t predicate_calls = 0;
  std::size_t predicate_hits = 0;
};

// Offline keyword guessing: for each index position the SPU encrypts every
// alphabet letter itself with the public key and runs the match predicate.
DictionaryAttackResult OfflineDictionaryAttack(
    const SpuKey& spk, const PublicParams& pk, const EncryptedIndex& index,
    std::span<const Letter> alphabet, Rng& rng);

struct LambdaLeakReport {
  std::size_t samples = 0;
  BigInt gcd;
  bool lambda_divides = false;
  // gcd / lambda when lambda divides the gcd, zero otherwise. A small value
  // means the published k values expose lambda.
  BigInt ratio;
};

// gcd of all published k values, compared against lambda. Evaluation-only:
// needs the secret key to interpret the result. Requires hardened indexes
// with at least two k values in total.
LambdaLeakReport LambdaLeakProbe(std::span<const EncryptedIndex> indexes,
                                 const paillier::SecretKey& sk);

}  // namespace ppgrt::attacks

#endif  // PPGRT_ATTACKS_HPP_
