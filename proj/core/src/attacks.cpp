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

#include "ppgrt/attacks.hpp"

#include <map>

#include "ppgrt/error.hpp"
#include "ppgrt/matcher.hpp"

namespace ppgrt::attacks {

namespace {

Letter RandomLetter(std::span<const Letter> alphabet, Rng& rng) {
  return alphabet[rng.NextU64() % alphabet.size()];
}

}  // namespace

std::size_t LetterRecovery::resolved_count() const {
  std::size_t count = 0;
  for (bool r : resolved) count += r ? 1 : 0;
  return count;
}

double LetterRecovery::Accuracy(const Haplotype& truth) const {
  if (truth.size() != guess.size() || guess.empty()) {
    throw UsageError("recovered sequence length differs from the truth");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < guess.size(); ++i) {
    if (guess[i] == truth[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(guess.size());
}

RatioAttackResult RatioIdentifierAttack(
    std::span<const LetterTrapdoor> trapdoors, const Hasher& public_hash,
    std::span<const Letter> alphabet, Rng& rng) {
  if (trapdoors.size() < 2) {
    throw UsageError("ratio attack needs at least two trapdoors");
  }
  if (alphabet.empty()) throw UsageError("empty alphabet");
  const BigInt& n = public_hash.modulus();

  std::map<BigInt, Letter> by_hash;
  for (Letter l : alphabet) by_hash.emplace(public_hash.Letter(l), l);

  // delta_j; positions with a non-invertible b are left unresolved.
  std::vector<std::optional<BigInt>> deltas;
  deltas.reserve(trapdoors.size());
  for (const auto& t : trapdoors) {
    if (Gcd(t.b, n) != 1) {
      deltas.emplace_back();
    } else {
      deltas.emplace_back(Mod(t.s * InvMod(t.b, n), n));
    }
  }
  std::size_t reference = 0;
  while (reference < deltas.size() && !deltas[reference]) ++reference;

  RatioAttackResult result;
  std::vector<std::optional<Letter>> best(trapdoors.size());
  std::size_t best_resolved = 0;
  if (reference < deltas.size()) {
    for (Letter hypothesis : alphabet) {
      const BigInt h = public_hash.Letter(hypothesis);
      if (Gcd(h, n) != 1) continue;
      // gamma = delta_ref / H(hypothesis)
      const BigInt gamma = Mod(*deltas[reference] * InvMod(h, n), n);
      if (Gcd(gamma, n) != 1) continue;
      const BigInt gamma_inv = InvMod(gamma, n);
      std::vector<std::optional<Letter>> candidate(trapdoors.size());
      std::size_t resolved = 0;
      for (std::size_t j = 0; j < deltas.size(); ++j) {
        if (!deltas[j]) continue;
        auto it = by_hash.find(Mod(*deltas[j] * gamma_inv, n));
        if (it != by_hash.end()) {
          candidate[j] = it->second;
          ++resolved;
        }
      }
      if (resolved == trapdoors.size()) ++result.consistent_hypotheses;
      if (resolved > best_resolved) {
        best_resolved = resolved;
        best = std::move(candidate);
      }
    }
  }
  // The reference position always resolves to its own hypothesis; one hit
  // carries no information.
  if (best_resolved <= 1) best.assign(trapdoors.size(), std::nullopt);

  result.confidence =
      result.consistent_hypotheses == 0
          ? 0.0
          : 1.0 / static_cast<double>(result.consistent_hypotheses);
  for (const auto& letter : best) {
    result.recovery.resolved.push_back(letter.has_value());
    result.recovery.guess.push_back(letter ? *letter
                                           : RandomLetter(alphabet, rng));
  }
  return result;
}

DictionaryAttackResult OfflineDictionaryAttack(
    const SpuKey& spk, const PublicParams& pk, const EncryptedIndex& index,
    std::span<const Letter> alphabet, Rng& rng) {
  if (alphabet.empty()) throw UsageError("empty alphabet");
  const Hasher hasher = pk.hasher();
  // One self-made query per candidate letter, reused across positions.
  std::vector<paillier::Ciphertext> guesses;
  for (Letter l : alphabet) {
    guesses.push_back(paillier::Encrypt(pk.paillier, hasher.Letter(l), rng));
  }

  DictionaryAttackResult result;
  for (std::size_t i = 0; i < index.size(); ++i) {
    const LetterTrapdoor trapdoor = index.trapdoor(i);
    std::optional<Letter> found;
    for (std::size_t g = 0; g < alphabet.size() && !found; ++g) {
      ++result.predicate_calls;
      bool hit = false;
      try {
        hit = MatchPredicate(spk, guesses[g], trapdoor);
      } catch (const PredicateFailure&) {
        hit = false;
      }
      if (hit) {
        ++result.predicate_hits;
        found = alphabet[g];
      }
    }
    result.recovery.resolved.push_back(found.has_value());
    result.recovery.guess.push_back(found ? *found
                                          : RandomLetter(alphabet, rng));
  }
  return result;
}

LambdaLeakReport LambdaLeakProbe(std::span<const EncryptedIndex> indexes,
                                 const paillier::SecretKey& sk) {
  LambdaLeakReport report;
  BigInt g = 0;
  for (const auto& index : indexes) {
    if (!index.hardened()) {
      throw UsageError("lambda leak probe needs hardened indexes");
    }
    for (const auto& k : index.k) {
      g = Gcd(g, k);
      ++report.samples;
    }
  }
  if (report.samples < 2) {
    throw UsageError("lambda leak probe needs at least two k values");
  }
  report.gcd = g;
  report.lambda_divides = g != 0 && Mod(g, sk.lambda) == 0;
  report.ratio = report.lambda_divides ? BigInt(g / sk.lambda) : BigInt(0);
  return report;
}

}  // namespace ppgrt::attacks
