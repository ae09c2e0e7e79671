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

#include "ppgrt/matcher.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ppgrt/error.hpp"

namespace ppgrt {

namespace {

// Compares L(value) with s without a second division: value - 1 == s * n
// modulo n^2 is equivalent once value = 1 (mod n) is established.
bool CheckLValue(const SpuKey& spk, const BigInt& value, const BigInt& s) {
  if (Mod(value, spk.n()) != 1) {
    throw PredicateFailure(
        "L-function precondition violated: corrupted ciphertext or trapdoor, "
        "or mode mismatch");
  }
  BigInt l;
  mpz_divexact(l.get_mpz_t(), BigInt(value - 1).get_mpz_t(),
               spk.n().get_mpz_t());
  return l == Mod(s, spk.n());
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLcs:
      return "lcs";
    case Algorithm::kHamming:
      return "hamming";
    case Algorithm::kEdit:
      return "edit";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "lcs") return Algorithm::kLcs;
  if (name == "hamming") return Algorithm::kHamming;
  if (name == "edit") return Algorithm::kEdit;
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (expected lcs, hamming or edit)");
}

bool MatchPredicate(const SpuKey& spk, const paillier::Ciphertext& c,
                    const LetterTrapdoor& trapdoor) {
  BigInt exponent = spk.beta() * trapdoor.b;
  if (trapdoor.k) exponent += *trapdoor.k;
  return CheckLValue(spk, PowMod(c.value, exponent, spk.n_squared()),
                     trapdoor.s);
}

EncryptedLetterMatcher::EncryptedLetterMatcher(const SpuKey& spk,
                                               const EncryptedIndex& index,
                                               const EncryptedQuery& query)
    : spk_(spk), index_(index), query_(query) {
  query_pow_beta_.reserve(query.size());
  for (const auto& c : query.c) {
    query_pow_beta_.push_back(PowMod(c.value, spk.beta(), spk.n_squared()));
  }
}

bool EncryptedLetterMatcher::Matches(std::size_t query_pos,
                                     std::size_t index_pos) const {
  const BigInt& n2 = spk_.n_squared();
  BigInt value = PowMod(query_pow_beta_[query_pos], index_.b[index_pos], n2);
  if (index_.hardened()) {
    value = Mod(value * PowMod(query_.c[query_pos].value, index_.k[index_pos],
                               n2),
                n2);
  }
  return CheckLValue(spk_, value, index_.s[index_pos]);
}

std::size_t PpLcs(const LetterMatcher& matcher) {
  const std::size_t t = matcher.index_size();
  const std::size_t m = matcher.query_size();
  std::vector<std::size_t> w((t + 1) * (m + 1), 0);
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  for (std::size_t i = 1; i <= t; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (matcher.Matches(j - 1, i - 1)) {
        w[at(i, j)] = 1 + w[at(i - 1, j - 1)];
      } else if (w[at(i - 1, j)] >= w[at(i, j - 1)]) {
        w[at(i, j)] = w[at(i - 1, j)];
      } else {
        w[at(i, j)] = w[at(i, j - 1)];
      }
    }
  }
  return w[at(t, m)];
}

std::size_t PpHamming(const LetterMatcher& matcher) {
  const std::size_t t = matcher.index_size();
  const std::size_t m = matcher.query_size();
  if (t != m) throw LengthMismatch(m, t);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < t; ++i) {
    if (matcher.Matches(i, i)) ++seg;
  }
  return seg;
}

std::size_t PpEdit(const LetterMatcher& matcher) {
  const std::size_t len1 = matcher.query_size();
  const std::size_t len2 = matcher.index_size();
  const std::size_t len = len1 < len2 ? len2 : len1;
  std::vector<std::size_t> dp((len1 + 1) * (len2 + 1));
  auto at = [len2](std::size_t i, std::size_t j) { return i * (len2 + 1) + j; };
  for (std::size_t i = 0; i <= len1; ++i) dp[at(i, 0)] = i;
  for (std::size_t j = 0; j <= len2; ++j) dp[at(0, j)] = j;
  for (std::size_t i = 0; i < len1; ++i) {
    for (std::size_t j = 0; j < len2; ++j) {
      if (matcher.Matches(i, j)) {
        dp[at(i + 1, j + 1)] = dp[at(i, j)];
      } else {
        std::size_t replace = dp[at(i, j)] + 1;
        std::size_t insert = dp[at(i, j + 1)] + 1;
        std::size_t remove = dp[at(i + 1, j)] + 1;
        std::size_t min = replace > insert ? insert : replace;
        min = remove > min ? min : remove;
        dp[at(i + 1, j + 1)] = min;
      }
    }
  }
  return len - dp[at(len1, len2)];
}

std::size_t PpLcs(const SpuKey& spk, const EncryptedIndex& index,
                  const EncryptedQuery& query) {
  return PpLcs(EncryptedLetterMatcher(spk, index, query));
}

std::size_t PpHamming(const SpuKey& spk, const EncryptedIndex& index,
                      const EncryptedQuery& query) {
  if (index.size() != query.size()) {
    throw LengthMismatch(query.size(), index.size());
  }
  return PpHamming(EncryptedLetterMatcher(spk, index, query));
}

std::size_t PpEdit(const SpuKey& spk, const EncryptedIndex& index,
                   const EncryptedQuery& query) {
  return PpEdit(EncryptedLetterMatcher(spk, index, query));
}

std::size_t RunAlgorithm(Algorithm algorithm, const LetterMatcher& matcher) {
  switch (algorithm) {
    case Algorithm::kLcs:
      return PpLcs(matcher);
    case Algorithm::kHamming:
      return PpHamming(matcher);
    case Algorithm::kEdit:
      return PpEdit(matcher);
  }
  throw UsageError("unknown algorithm");
}

std::string_view EntryErrorCode(EntryError error) {
  switch (error) {
    case EntryError::kLengthMismatch:
      return "length_mismatch";
    case EntryError::kPredicateFailure:
      return "predicate_failure";
    case EntryError::kModeMismatch:
      return "mode_mismatch";
    case EntryError::kBindingMismatch:
      return "binding_mismatch";
  }
  return "unknown";
}

EntryError ParseEntryErrorCode(std::string_view code) {
  for (auto e : {EntryError::kLengthMismatch, EntryError::kPredicateFailure,
                 EntryError::kModeMismatch, EntryError::kBindingMismatch}) {
    if (EntryErrorCode(e) == code) return e;
  }
  throw FormatError("unknown entry error code '" + std::string(code) + "'");
}

namespace {

std::variant<std::size_t, EntryError> EvaluateEntry(
    const SpuKey& spk, const Edb& edb, const EdbEntry& entry,
    const EncryptedQuery& query, Algorithm algorithm) {
  const bool hardened = edb.mode == IndexMode::kHardened;
  if (query.mode != edb.mode || entry.index.hardened() != hardened ||
      (hardened && query.binding != edb.binding)) {
    return EntryError::kModeMismatch;
  }
  // Position-bound salts only ever agree on aligned positions.
  if (hardened && edb.binding == Binding::kPositionAndLetter &&
      algorithm != Algorithm::kHamming) {
    return EntryError::kBindingMismatch;
  }
  if (algorithm == Algorithm::kHamming && entry.index.size() != query.size()) {
    return EntryError::kLengthMismatch;
  }
  try {
    EncryptedLetterMatcher matcher(spk, entry.index, query);
    return RunAlgorithm(algorithm, matcher);
  } catch (const LengthMismatch&) {
    return EntryError::kLengthMismatch;
  } catch (const PredicateFailure&) {
    return EntryError::kPredicateFailure;
  }
}

}  // namespace

QueryResultList TestAll(const SpuKey& spk, const Edb& edb,
                        const EncryptedQuery& query, Algorithm algorithm,
                        std::size_t workers) {
  if (edb.n != spk.n() || query.n != spk.n()) {
    throw UsageError("EDB, query and SPU key use different moduli");
  }
  const std::size_t d = edb.entries.size();
  QueryResultList results(d);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(d, 1));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t z = next++; z < d; z = next++) {
      results[z] = QueryResult{
          z, algorithm,
          EvaluateEntry(spk, edb, edb.entries[z], query, algorithm)};
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

}  // namespace ppgrt
