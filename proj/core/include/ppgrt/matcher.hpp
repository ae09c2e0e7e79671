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

#ifndef PPGRT_MATCHER_HPP_
#define PPGRT_MATCHER_HPP_

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "ppgrt/edb.hpp"
#include "ppgrt/paillier.hpp"
#include "ppgrt/spu_key.hpp"

// Storage/processing unit computations. Everything in this header runs on
// an SpuKey and public data only.
namespace ppgrt {

enum class Algorithm {
  kLcs,
  kHamming,
  kEdit,
};

std::string_view AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);

// L(c^(beta * b [+ k]) mod n^2) == s (mod n). Throws PredicateFailure when
// the exponentiated value is not 1 mod n.
bool MatchPredicate(const SpuKey& spk, const paillier::Ciphertext& c,
                    const LetterTrapdoor& trapdoor);

// Letter-equality oracle between a query sequence and an index sequence.
// The distance algorithms below only ever observe letters through this
// interface, so any searchable-encryption test can drive them.
class LetterMatcher {
 public:
  virtual ~LetterMatcher() = default;
  virtual std::size_t query_size() const = 0;
  virtual std::size_t index_size() const = 0;
  virtual bool Matches(std::size_t query_pos, std::size_t index_pos) const = 0;
};

// MatchPredicate over a whole (index, query) pair. Caches c_j^beta per query
// element; the check becomes L((c^beta)^b [* c^k] mod n^2) == s.
class EncryptedLetterMatcher final : public LetterMatcher {
 public:
  EncryptedLetterMatcher(const SpuKey& spk, const EncryptedIndex& index,
                         const EncryptedQuery& query);

  std::size_t query_size() const override { return query_.size(); }
  std::size_t index_size() const override { return index_.size(); }
  bool Matches(std::size_t query_pos, std::size_t index_pos) const override;

 private:
  const SpuKey& spk_;
  const EncryptedIndex& index_;
  const EncryptedQuery& query_;
  std::vector<BigInt> query_pow_beta_;
};

// Longest-common-subsequence length, w[i, j] over index rows and query
// columns.
std::size_t PpLcs(const LetterMatcher& matcher);
// Count of aligned matches. Throws LengthMismatch when t != m.
std::size_t PpHamming(const LetterMatcher& matcher);
// len - dp[len1][len2] with len1 = m (query), len2 = t (index).
std::size_t PpEdit(const LetterMatcher& matcher);

std::size_t PpLcs(const SpuKey& spk, const EncryptedIndex& index,
                  const EncryptedQuery& query);
std::size_t PpHamming(const SpuKey& spk, const EncryptedIndex& index,
                      const EncryptedQuery& query);
std::size_t PpEdit(const SpuKey& spk, const EncryptedIndex& index,
                   const EncryptedQuery& query);

std::size_t RunAlgorithm(Algorithm algorithm, const LetterMatcher& matcher);

enum class EntryError {
  kLengthMismatch,
  kPredicateFailure,
  kModeMismatch,
  kBindingMismatch,
};

std::string_view EntryErrorCode(EntryError error);
EntryError ParseEntryErrorCode(std::string_view code);

// One row of the result list: which entry, which algorithm, and either the
// shared length or an error. No positions or subsequences are reported.
struct QueryResult {
  std::size_t entry_id = 0;
  Algorithm algorithm = Algorithm::kHamming;
  std::variant<std::size_t, EntryError> outcome;

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

using QueryResultList = std::vector<QueryResult>;

// Runs `algorithm` between the query and every EDB entry. Entries are
// spread over `workers` threads (0 picks the hardware concurrency); the
// output is in entry order and independent of the worker count. Per-entry
// failures are recorded in the result instead of aborting the batch.
QueryResultList TestAll(const SpuKey& spk, const Edb& edb,
                        const EncryptedQuery& query, Algorithm algorithm,
                        std::size_t workers = 0);

}  // namespace ppgrt

#endif  // PPGRT_MATCHER_HPP_
