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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Optional arguments select criteria by
// number; PPGRT_SEED overrides the fixed default seed.

#include <algorithm>
#include <bitset>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "ppgrt/attacks.hpp"
#include "ppgrt/bench.hpp"
#include "ppgrt/distance.hpp"
#include "ppgrt/error.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/matcher.hpp"
#include "ppgrt/paillier.hpp"
#include "ppgrt/protocol.hpp"
#include "ppgrt/serialization.hpp"
#include "ppgrt/sse_index.hpp"
#include "ppgrt/system_keys.hpp"
#include "test_support.hpp"

namespace {

using namespace ppgrt;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint64_t BaseSeed() {
  if (const char* env = std::getenv("PPGRT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::fprintf(stderr, "ignoring unparseable PPGRT_SEED\n");
    }
  }
  return 20151105;
}

SystemKeys TestKeys(std::size_t bits, std::uint64_t seed) {
  Rng rng(seed);
  SetupOptions options;
  options.paillier.bits = bits;
  options.paillier.safe_primes = false;
  return Setup(options, rng);
}

std::string Fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

// ---------------------------------------------------------------------------
// Plaintext reference implementations, written independently of the
// library's distance module.

std::size_t RefHamming(const std::string& x, const std::string& y) {
  std::size_t same = 0;
  for (std::size_t i = 0; i < x.size(); ++i) same += x[i] == y[i] ? 1 : 0;
  return same;
}

// Suffix-based LCS with memoisation.
std::size_t RefLcs(const std::string& x, const std::string& y) {
  std::vector<std::vector<int>> memo(x.size() + 1,
                                     std::vector<int>(y.size() + 1, -1));
  std::function<int(std::size_t, std::size_t)> go = [&](std::size_t i,
                                                        std::size_t j) {
    if (i == x.size() || j == y.size()) return 0;
    int& slot = memo[i][j];
    if (slot >= 0) return slot;
    slot = x[i] == y[j] ? 1 + go(i + 1, j + 1)
                        : std::max(go(i + 1, j), go(i, j + 1));
    return slot;
  };
  return static_cast<std::size_t>(go(0, 0));
}

// Two-row Levenshtein; shared length is the longer length minus distance.
std::size_t RefEditShared(const std::string& x, const std::string& y) {
  std::vector<std::size_t> prev(y.size() + 1);
  std::vector<std::size_t> cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return std::max(x.size(), y.size()) - prev[y.size()];
}

std::size_t RefShared(Algorithm algorithm, const std::string& x,
                      const std::string& y) {
  switch (algorithm) {
    case Algorithm::kLcs:
      return RefLcs(x, y);
    case Algorithm::kHamming:
      return RefHamming(x, y);
    case Algorithm::kEdit:
      return RefEditShared(x, y);
  }
  return 0;
}

// ---------------------------------------------------------------------------

Outcome AccuracyEquivalence(std::uint64_t seed) {
  constexpr std::size_t kPairs = 500;
  constexpr std::size_t kMaxLength = 64;
  const SystemKeys keys = TestKeys(512, seed);
  const SpuKey spk = keys.spk();
  Rng rng(seed + 1);
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  std::string first_bad;
  for (Algorithm algorithm :
       {Algorithm::kLcs, Algorithm::kHamming, Algorithm::kEdit}) {
    for (std::size_t pair = 0; pair < kPairs; ++pair) {
      const std::size_t m = testing::RandomLength(rng, 1, kMaxLength);
      const std::size_t t = algorithm == Algorithm::kHamming
                                ? m
                                : testing::RandomLength(rng, 1, kMaxLength);
      const Haplotype x = RandomHaplotype(rng, m);
      const Haplotype y = RandomHaplotype(rng, t);
      const std::vector<Haplotype> db{y};
      const Edb edb = GenEdb(keys, db, IndexMode::kBasic, nullptr, rng).edb;
      const EncryptedQuery query =
          GenQuery(keys.pk, x, IndexMode::kBasic, nullptr, rng);
      const QueryResultList results = TestAll(spk, edb, query, algorithm, 1);
      const std::size_t expected = RefShared(algorithm, x.str(), y.str());
      ++checked;
      const auto* got = std::get_if<std::size_t>(&results.at(0).outcome);
      if (got == nullptr || *got != expected) {
        ++mismatches;
        if (first_bad.empty()) {
          first_bad = std::string(AlgorithmName(algorithm)) + " " + x.str() +
                      " vs " + y.str();
        }
      }
    }
  }
  return {mismatches == 0,
          Fmt("%zu pairs (500 per algorithm, lengths <= 64, 512-bit keys), "
              "%zu mismatches%s%s",
              checked, mismatches, first_bad.empty() ? "" : ", first: ",
              first_bad.c_str())};
}

Outcome PaillierProperties(std::uint64_t seed) {
  constexpr int kCases = 1000;
  Rng rng(seed);
  const paillier::KeyPair keys =
      paillier::Keygen(paillier::KeygenOptions{512, false, std::nullopt}, rng);
  const BigInt& n = keys.pub.n;
  const BigInt n2 = n * n;
  // Reference key material recomputed from the factors.
  const BigInt p1 = keys.sec.p - 1;
  const BigInt q1 = keys.sec.q - 1;
  BigInt lambda;
  mpz_lcm(lambda.get_mpz_t(), p1.get_mpz_t(), q1.get_mpz_t());
  auto raw_pow = [](const BigInt& b, const BigInt& e, const BigInt& m) {
    BigInt out;
    mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return out;
  };
  auto raw_l = [&n](const BigInt& u) { return BigInt((u - 1) / n); };
  BigInt mu;
  const BigInt l_g = raw_l(raw_pow(n + 1, lambda, n2));
  mpz_invert(mu.get_mpz_t(), l_g.get_mpz_t(), n.get_mpz_t());
  auto ref_decrypt = [&](const BigInt& c) {
    BigInt m = raw_l(raw_pow(c, lambda, n2)) * mu;
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    return m;
  };
  // (1 + n)^m = 1 + m n mod n^2.
  auto ref_encrypt = [&](const BigInt& m, const BigInt& r) {
    BigInt c = (1 + m * n) * raw_pow(r, n, n2);
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), n2.get_mpz_t());
    return c;
  };
  auto mod_n = [&n](BigInt v) {
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return v;
  };

  int round_trip = 0;
  int additive = 0;
  int scalar = 0;
  for (int i = 0; i < kCases; ++i) {
    const BigInt m = rng.Below(n);
    const BigInt r = rng.UnitBelow(n);
    const paillier::Ciphertext c = paillier::EncryptWithNonce(keys.pub, m, r);
    if (c.value == ref_encrypt(m, r) && ref_decrypt(c.value) == m &&
        paillier::Decrypt(keys.sec, keys.pub, c) == m) {
      ++round_trip;
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const BigInt a = rng.Below(n);
    const BigInt b = rng.Below(n);
    const paillier::Ciphertext ca = paillier::Encrypt(keys.pub, a, rng);
    const paillier::Ciphertext cb = paillier::Encrypt(keys.pub, b, rng);
    const paillier::Ciphertext sum = paillier::HomAdd(keys.pub, ca, cb);
    BigInt product = ca.value * cb.value;
    mpz_mod(product.get_mpz_t(), product.get_mpz_t(), n2.get_mpz_t());
    if (sum.value == product && ref_decrypt(sum.value) == mod_n(a + b) &&
        paillier::Decrypt(keys.sec, keys.pub, sum) == mod_n(a + b)) {
      ++additive;
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const BigInt a = rng.Below(n);
    const BigInt k = rng.InRange(1, n);
    const paillier::Ciphertext ca = paillier::Encrypt(keys.pub, a, rng);
    const paillier::Ciphertext scaled = paillier::HomScale(keys.pub, ca, k);
    if (scaled.value == raw_pow(ca.value, k, n2) &&
        ref_decrypt(scaled.value) == mod_n(a * k) &&
        paillier::Decrypt(keys.sec, keys.pub, scaled) == mod_n(a * k)) {
      ++scalar;
    }
  }
  const bool pass =
      round_trip == kCases && additive == kCases && scalar == kCases;
  return {pass, Fmt("round trip %d/%d, additive %d/%d, scalar %d/%d "
                    "(512-bit n, exact mod n)",
                    round_trip, kCases, additive, kCases, scalar, kCases)};
}

Haplotype Single(Letter letter) {
  return Haplotype::Parse(std::string(1, ToChar(letter)));
}

// L(c^(beta*b [+ k]) mod n^2) == s mod n with plain GMP calls.
bool RefPredicate(const SpuKey& spk, const BigInt& c, const BigInt& b,
                  const BigInt& s, const BigInt* k) {
  BigInt exponent = spk.beta() * b;
  if (k != nullptr) exponent += *k;
  BigInt u;
  mpz_powm(u.get_mpz_t(), c.get_mpz_t(), exponent.get_mpz_t(),
           spk.n_squared().get_mpz_t());
  BigInt rem;
  mpz_mod(rem.get_mpz_t(), u.get_mpz_t(), spk.n().get_mpz_t());
  if (rem != 1) return false;
  const BigInt l = (u - 1) / spk.n();
  BigInt lhs;
  BigInt rhs;
  mpz_mod(lhs.get_mpz_t(), l.get_mpz_t(), spk.n().get_mpz_t());
  mpz_mod(rhs.get_mpz_t(), s.get_mpz_t(), spk.n().get_mpz_t());
  return lhs == rhs;
}

Outcome PredicateGrid(std::uint64_t seed) {
  const SystemKeys keys = TestKeys(512, seed);
  const SpuKey spk = keys.spk();
  Rng rng(seed + 1);
  struct Variant {
    const char* name;
    IndexMode mode;
    std::optional<Binding> binding;
  };
  const Variant variants[] = {
      {"basic", IndexMode::kBasic, std::nullopt},
      {"hardened/position", IndexMode::kHardened, Binding::kPositionAndLetter},
      {"hardened/letter", IndexMode::kHardened, Binding::kLetterOnly},
  };
  std::string detail;
  bool pass = true;
  for (const Variant& v : variants) {
    std::optional<SharedSecret> secret;
    if (v.binding) secret = testing::RandomSecret(keys, rng, *v.binding);
    const SharedSecret* sp = secret ? &*secret : nullptr;
    std::size_t correct = 0;
    for (Letter index_letter : kAlphabet) {
      const EncryptedIndex index =
          GenIndex(keys, Single(index_letter), v.mode, sp, rng);
      const LetterTrapdoor trapdoor = index.trapdoor(0);
      for (Letter query_letter : kAlphabet) {
        const EncryptedQuery query =
            GenQuery(keys.pk, Single(query_letter), v.mode, sp, rng);
        const bool expected = index_letter == query_letter;
        const bool got = MatchPredicate(spk, query.c[0], trapdoor);
        const bool ref =
            RefPredicate(spk, query.c[0].value, trapdoor.b, trapdoor.s,
                         trapdoor.k ? &*trapdoor.k : nullptr);
        if (got == expected && ref == expected) ++correct;
      }
    }
    pass = pass && correct == 25;
    detail += Fmt("%s %zu/25; ", v.name, correct);
  }
  return {pass, detail + "true exactly on the diagonal"};
}

Outcome PerformanceOrdering(std::uint64_t seed) {
  bench::BenchConfig config;
  config.segments = 50;
  config.segment_length = 36;
  config.repeat = 10;
  config.key_bits = 512;
  config.safe_primes = false;
  Rng rng(seed);
  const auto rows = bench::RunBench(config, rng);
  auto mean = [&rows](const char* variant, Algorithm a) {
    const bench::BenchRow* row = bench::FindRow(rows, variant, a);
    return row == nullptr ? -1.0 : row->mean_seconds;
  };
  const double pp_h = mean("pp", Algorithm::kHamming);
  const double pp_l = mean("pp", Algorithm::kLcs);
  const double pp_e = mean("pp", Algorithm::kEdit);
  const double pl_h = mean("plain", Algorithm::kHamming);
  const double pl_l = mean("plain", Algorithm::kLcs);
  const double pl_e = mean("plain", Algorithm::kEdit);
  const bool pp_ok = pp_h < 0.5 * std::min(pp_l, pp_e);
  const bool plain_ok = pl_h < pl_e && pl_e < pl_l;
  return {pp_ok && plain_ok,
          Fmt("pp mean s: hamming %.4g, lcs %.4g, edit %.4g [%s]; "
              "plain mean s: hamming %.4g, edit %.4g, lcs %.4g [%s]",
              pp_h, pp_l, pp_e,
              pp_ok ? "hamming < 0.5*min ok" : "hamming < 0.5*min VIOLATED",
              pl_h, pl_e, pl_l,
              plain_ok ? "hamming < edit < lcs ok"
                       : "hamming < edit < lcs VIOLATED")};
}

Outcome AttackAsymmetry(std::uint64_t seed) {
  constexpr std::size_t kLetters = 100;
  constexpr std::size_t kTrials = 10;
  const SystemKeys keys = TestKeys(512, seed);
  const SpuKey spk = keys.spk();
  Rng rng(seed + 1);

  double ratio_basic = 0;
  double ratio_hardened = 0;
  double dict_basic = 0;
  std::size_t dict_hardened_hits = 0;
  std::size_t dict_hardened_calls = 0;
  for (std::size_t trial = 0; trial < kTrials; ++trial) {
    const Haplotype truth = RandomHaplotype(rng, kLetters);
    const SharedSecret secret =
        testing::RandomSecret(keys, rng, Binding::kPositionAndLetter);
    for (IndexMode mode : {IndexMode::kBasic, IndexMode::kHardened}) {
      const bool hardened = mode == IndexMode::kHardened;
      const EncryptedIndex index =
          GenIndex(keys, truth, mode, hardened ? &secret : nullptr, rng);
      std::vector<LetterTrapdoor> trapdoors;
      for (std::size_t i = 0; i < index.size(); ++i) {
        trapdoors.push_back(index.trapdoor(i));
      }
      const auto ratio = attacks::RatioIdentifierAttack(
          trapdoors, keys.pk.hasher(), kAlphabet, rng);
      const auto dict =
          attacks::OfflineDictionaryAttack(spk, keys.pk, index, kAlphabet, rng);
      if (hardened) {
        ratio_hardened += ratio.recovery.Accuracy(truth);
        dict_hardened_hits += dict.predicate_hits;
        dict_hardened_calls += dict.predicate_calls;
      } else {
        ratio_basic += ratio.recovery.Accuracy(truth);
        dict_basic += dict.recovery.Accuracy(truth);
      }
    }
  }
  ratio_basic /= kTrials;
  ratio_hardened /= kTrials;
  dict_basic /= kTrials;
  const bool pass = ratio_basic >= 0.95 && ratio_hardened <= 0.30 &&
                    dict_basic == 1.0 && dict_hardened_hits == 0;
  return {pass,
          Fmt("ratio attack: basic %.1f%% (>= 95%%), hardened %.1f%% "
              "(<= 30%%); dictionary attack: basic %.1f%% (= 100%%), "
              "shared-secret %zu hits in %zu predicate calls (= 0)",
              100 * ratio_basic, 100 * ratio_hardened, 100 * dict_basic,
              dict_hardened_hits, dict_hardened_calls)};
}

// Compile-time half of the structural checks.
static_assert(!std::is_constructible_v<SpuKey, SystemKeys>);
static_assert(!std::is_constructible_v<SpuKey, SecretParams>);
static_assert(!std::is_constructible_v<SpuKey, paillier::SecretKey>);
static_assert(!std::is_convertible_v<SystemKeys, SpuKey>);
static_assert(std::is_invocable_r_v<QueryResultList, decltype(&TestAll),
                                    const SpuKey&, const Edb&,
                                    const EncryptedQuery&, Algorithm,
                                    std::size_t>);
static_assert(std::is_constructible_v<net::SpuServer, SpuKey, Edb,
                                      net::ServerOptions>);
static_assert(std::is_same_v<decltype(QueryResult::outcome),
                             std::variant<std::size_t, EntryError>>);

constexpr bool ResultHasThreeFields() {
  auto [id, algorithm, outcome] = QueryResult{};
  (void)id;
  (void)algorithm;
  (void)outcome;
  return true;
}
static_assert(ResultHasThreeFields());

Outcome StructuralPrivacy(std::uint64_t seed) {
  const SystemKeys keys = TestKeys(512, seed);
  std::vector<std::string> problems;

  const std::string spk_text = io::SerializeSpuKey(keys.spk());
  auto labels = io::ParseRecord(spk_text).Labels();
  std::sort(labels.begin(), labels.end());
  if (labels != std::vector<std::string>{"L", "beta", "k", "n"}) {
    problems.push_back("unexpected spk fields");
  }
  const BigInt secrets[] = {keys.sk.paillier.p,      keys.sk.paillier.q,
                            keys.sk.paillier.lambda, keys.sk.paillier.mu,
                            keys.sk.sigma,           keys.sk.gamma,
                            keys.sk.l_g_lambda};
  for (const BigInt& value : secrets) {
    if (spk_text.find(ToHex(value)) != std::string::npos) {
      problems.push_back("spk file carries a secret value");
    }
  }

  for (const std::string& other :
       {io::SerializeSystemKeys(keys), io::SerializePublicParams(keys.pk)}) {
    try {
      io::ParseSpuKey(other);
      problems.push_back("spk parser accepted a non-spk file");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kFormat) {
        problems.push_back("non-spk file rejected with the wrong kind");
      }
    }
  }

  // Run the SPU side from the spk text alone.
  Rng rng(seed + 1);
  const std::vector<Haplotype> db{Haplotype::Parse("AGCTA*G"),
                                  Haplotype::Parse("AGC")};
  const Edb edb = io::ParseEdb(io::SerializeEdb(
      GenEdb(keys, db, IndexMode::kBasic, nullptr, rng).edb));
  const EncryptedQuery query = io::ParseQuery(io::SerializeQuery(
      GenQuery(keys.pk, Haplotype::Parse("AGCTTTG"), IndexMode::kBasic,
               nullptr, rng)));
  const SpuKey spk_only = io::ParseSpuKey(spk_text);
  const std::string results = io::SerializeResults(
      TestAll(spk_only, edb, query, Algorithm::kHamming, 1));
  std::istringstream lines(results);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (std::count(line.begin(), line.end(), '\t') != 2) {
      problems.push_back("result row is not id, algorithm, value");
      continue;
    }
    const std::string value = line.substr(line.rfind('\t') + 1);
    const bool number =
        !value.empty() && std::all_of(value.begin(), value.end(), ::isdigit);
    if (!number && !value.starts_with("ERROR:")) {
      problems.push_back("result value is neither a length nor an error");
    }
  }
  if (rows != db.size()) problems.push_back("result row count");
  if (results != "PPGRT1-RES\n0\thamming\t5\n1\thamming\tERROR:length_mismatch\n") {
    problems.push_back("unexpected results: " + results);
  }

  std::string detail =
      "spk fields {L, beta, k, n}, no secret values; SPU entry points typed "
      "on SpuKey only; results are (id, algorithm, length|error); sk/pk "
      "files rejected as spk";
  if (!problems.empty()) detail = problems.front();
  return {problems.empty(), detail};
}

Outcome ExhaustiveLcs() {
  constexpr std::size_t kMaxLength = 8;
  // Strings over {A, G} as (length, bits); subsequence codes are
  // (1 << length) | bits, all below 512.
  struct Entry {
    std::string text;
    std::bitset<512> subsequences;
  };
  std::vector<Entry> strings;
  for (std::size_t len = 1; len <= kMaxLength; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      Entry e;
      for (std::size_t i = 0; i < len; ++i) {
        e.text += (bits >> i) & 1u ? 'G' : 'A';
      }
      for (unsigned mask = 0; mask < (1u << len); ++mask) {
        unsigned code_bits = 0;
        unsigned code_len = 0;
        for (std::size_t i = 0; i < len; ++i) {
          if ((mask >> i) & 1u) {
            code_bits |= ((bits >> i) & 1u) << code_len;
            ++code_len;
          }
        }
        e.subsequences.set((1u << code_len) | code_bits);
      }
      strings.push_back(std::move(e));
    }
  }
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  std::string first_bad;
  std::vector<Haplotype> parsed;
  for (const Entry& e : strings) parsed.push_back(Haplotype::Parse(e.text));
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = 0; j < strings.size(); ++j) {
      const std::bitset<512> common =
          strings[i].subsequences & strings[j].subsequences;
      std::size_t best = 0;
      for (std::size_t code = 1; code < 512; ++code) {
        if (common.test(code)) {
          best = std::max<std::size_t>(best, std::bit_width(code) - 1);
        }
      }
      ++pairs;
      if (LcsLength(parsed[i], parsed[j]) != best) {
        ++mismatches;
        if (first_bad.empty()) {
          first_bad = strings[i].text + " vs " + strings[j].text;
        }
      }
    }
  }
  return {mismatches == 0,
          Fmt("%zu pairs (lengths 1..8, alphabet {A, G}), %zu mismatches%s%s",
              pairs, mismatches, first_bad.empty() ? "" : ", first: ",
              first_bad.c_str())};
}

Outcome SerializationAndTransport(std::uint64_t seed) {
  constexpr int kScenarios = 20;
  const SystemKeys keys = TestKeys(512, seed);
  Rng rng(seed + 1);
  testing::TempDir dir;
  std::vector<std::string> problems;
  auto note = [&problems](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  const SystemKeys parsed_keys =
      io::ParseSystemKeys(io::SerializeSystemKeys(keys));
  note(parsed_keys.pk == keys.pk && parsed_keys.sk == keys.sk,
       "system keys round trip");
  note(io::ParsePublicParams(io::SerializePublicParams(keys.pk)) == keys.pk,
       "public params round trip");
  note(io::ParseSpuKey(io::SerializeSpuKey(keys.spk())) == keys.spk(),
       "spk round trip");

  int identical = 0;
  for (int scenario = 0; scenario < kScenarios; ++scenario) {
    const IndexMode mode =
        rng.NextU64() % 2 == 0 ? IndexMode::kBasic : IndexMode::kHardened;
    const Binding binding = rng.NextU64() % 2 == 0
                                ? Binding::kPositionAndLetter
                                : Binding::kLetterOnly;
    const SharedSecret secret = testing::RandomSecret(keys, rng, binding);
    const SharedSecret* sp = mode == IndexMode::kHardened ? &secret : nullptr;
    Algorithm algorithm = static_cast<Algorithm>(rng.NextU64() % 3);
    if (sp != nullptr && binding == Binding::kPositionAndLetter) {
      algorithm = Algorithm::kHamming;
    }
    const std::size_t length = testing::RandomLength(rng, 1, 16);
    std::vector<Haplotype> db;
    const std::size_t d = testing::RandomLength(rng, 1, 5);
    for (std::size_t i = 0; i < d; ++i) {
      // Mostly equal lengths, sometimes not, so error rows appear too.
      const std::size_t len = rng.NextU64() % 4 == 0
                                  ? testing::RandomLength(rng, 1, 16)
                                  : length;
      db.push_back(RandomHaplotype(rng, len));
    }
    const GeneratedEdb generated = GenEdb(keys, db, mode, sp, rng);
    const EncryptedQuery query =
        GenQuery(keys.pk, RandomHaplotype(rng, length), mode, sp, rng);

    const std::string edb_text = io::SerializeEdb(generated.edb);
    const std::string query_text = io::SerializeQuery(query);
    const std::string pads_text = io::SerializePads(generated.pads);
    note(io::ParseEdb(edb_text) == generated.edb, "edb round trip");
    note(io::SerializeEdb(io::ParseEdb(edb_text)) == edb_text,
         "edb re-serialization");
    note(io::ParseQuery(query_text) == query, "query round trip");
    note(io::ParsePads(pads_text) == generated.pads, "pads round trip");
    note(io::ParseSharedSecret(io::SerializeSharedSecret(secret)) == secret,
         "secret round trip");

    // File pipeline.
    const auto edb_path = dir / ("s" + std::to_string(scenario) + ".edb");
    const auto query_path = dir / ("s" + std::to_string(scenario) + ".qry");
    const auto spk_path = dir / "spk.keys";
    io::WriteFile(edb_path, edb_text);
    io::WriteFile(query_path, query_text);
    io::WriteFile(spk_path, io::SerializeSpuKey(keys.spk()));
    const SpuKey file_spk = io::ParseSpuKey(io::ReadFile(spk_path));
    const QueryResultList file_results =
        TestAll(file_spk, io::ParseEdb(io::ReadFile(edb_path)),
                io::ParseQuery(io::ReadFile(query_path)), algorithm, 1);
    const std::string file_output = io::SerializeResults(file_results);
    note(io::ParseResults(file_output) == file_results, "results round trip");

    // Socket pipeline.
    net::SpuServer server(file_spk, io::ParseEdb(edb_text));
    server.Start();
    const std::string socket_output = net::SendQuery(
        "127.0.0.1", server.port(), algorithm, io::ReadFile(query_path));
    server.Stop();
    if (socket_output == file_output) ++identical;
  }
  note(identical == kScenarios, "socket output differs from file output");
  std::string detail =
      Fmt("round trips exact; socket == file output in %d/%d scenarios",
          identical, kScenarios);
  if (!problems.empty()) detail = problems.front() + "; " + detail;
  return {problems.empty(), detail};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome(std::uint64_t)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = BaseSeed();
  const std::vector<Criterion> criteria = {
      {1, "accuracy equivalence", AccuracyEquivalence},
      {2, "paillier properties", PaillierProperties},
      {3, "match predicate grid", PredicateGrid},
      {4, "performance ordering", PerformanceOrdering},
      {5, "attack asymmetry", AttackAsymmetry},
      {6, "structural privacy", StructuralPrivacy},
      {7, "exhaustive lcs oracle", [](std::uint64_t) { return ExhaustiveLcs(); }},
      {8, "serialization and transport", SerializationAndTransport},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));
  std::fflush(stdout);
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.contains(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run(seed + static_cast<std::uint64_t>(c.number) * 1000);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!outcome.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n",
                outcome.pass ? "PASS" : "FAIL", c.number, c.name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
