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

#include "ppgrt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "ppgrt/distance.hpp"
#include "ppgrt/error.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/sse_index.hpp"
#include "ppgrt/system_keys.hpp"

namespace ppgrt::bench {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t PlainRun(Algorithm algorithm, const Haplotype& x,
                     const Haplotype& y) {
  switch (algorithm) {
    case Algorithm::kLcs:
      return LcsLength(x, y);
    case Algorithm::kHamming:
      return HammingShared(x, y);
    case Algorithm::kEdit:
      return EditShared(x, y);
  }
  throw UsageError("unknown algorithm");
}

BenchRow Time(const std::string& variant, Algorithm algorithm,
              std::size_t repeat, std::size_t inner,
              const std::function<std::size_t()>& sweep) {
  BenchRow row;
  row.variant = variant;
  row.algorithm = algorithm;
  row.repeat = repeat;
  row.min_seconds = 1e300;
  double total = 0.0;
  for (std::size_t r = 0; r < repeat; ++r) {
    auto start = Clock::now();
    std::size_t shared = 0;
    for (std::size_t i = 0; i < inner; ++i) shared = sweep();
    double seconds =
        std::chrono::duration<double>(Clock::now() - start).count() /
        static_cast<double>(inner);
    row.total_shared = shared;
    total += seconds;
    row.min_seconds = std::min(row.min_seconds, seconds);
    row.max_seconds = std::max(row.max_seconds, seconds);
  }
  row.mean_seconds = total / static_cast<double>(repeat);
  return row;
}

}  // namespace

BenchConfig FullPreset() {
  BenchConfig config;
  config.segments = 500;
  config.segment_length = 36;
  config.repeat = 100;
  config.key_bits = 2048;
  config.safe_primes = true;
  return config;
}

BenchConfig DeskPreset() { return BenchConfig{}; }

std::vector<BenchRow> RunBench(const BenchConfig& config, Rng& rng) {
  if (config.segments == 0 || config.segment_length == 0 ||
      config.repeat == 0) {
    throw UsageError("segments, segment length and repeat must be positive");
  }
  const std::size_t letters = config.segments * config.segment_length;
  const auto x = Segment(RandomHaplotype(rng, letters), config.segment_length);
  const auto y = Segment(RandomHaplotype(rng, letters), config.segment_length);

  std::vector<BenchRow> rows;
  if (config.plaintext) {
    const std::size_t sweeps = std::max<std::size_t>(config.plaintext_sweeps, 1);
    for (Algorithm algorithm : config.algorithms) {
      rows.push_back(Time("plain", algorithm, config.repeat, sweeps, [&] {
        std::size_t shared = 0;
        for (std::size_t s = 0; s < config.segments; ++s) {
          shared += PlainRun(algorithm, x.segments[s], y.segments[s]);
        }
        return shared;
      }));
    }
  }
  if (config.privacy_preserving) {
    SetupOptions options;
    options.paillier.bits = config.key_bits;
    options.paillier.safe_primes = config.safe_primes;
    const SystemKeys keys = Setup(options, rng);
    const SpuKey spk = keys.spk();
    std::vector<EncryptedIndex> indexes;
    std::vector<EncryptedQuery> queries;
    for (std::size_t s = 0; s < config.segments; ++s) {
      indexes.push_back(
          GenIndex(keys, y.segments[s], IndexMode::kBasic, nullptr, rng));
      queries.push_back(
          GenQuery(keys.pk, x.segments[s], IndexMode::kBasic, nullptr, rng));
    }
    for (Algorithm algorithm : config.algorithms) {
      rows.push_back(Time("pp", algorithm, config.repeat, 1, [&] {
        std::size_t shared = 0;
        for (std::size_t s = 0; s < config.segments; ++s) {
          EncryptedLetterMatcher matcher(spk, indexes[s], queries[s]);
          shared += RunAlgorithm(algorithm, matcher);
        }
        return shared;
      }));
    }
  }
  return rows;
}

const BenchRow* FindRow(const std::vector<BenchRow>& rows,
                        const std::string& variant, Algorithm algorithm) {
  for (const auto& row : rows) {
    if (row.variant == variant && row.algorithm == algorithm) return &row;
  }
  return nullptr;
}

std::string FormatTable(const std::vector<BenchRow>& rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-7s %-8s %6s %14s %14s %14s %8s\n",
                "variant", "algo", "repeat", "mean_s", "min_s", "max_s",
                "shared");
  out += line;
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line),
                  "%-7s %-8s %6zu %14.6e %14.6e %14.6e %8zu\n",
                  row.variant.c_str(),
                  std::string(AlgorithmName(row.algorithm)).c_str(),
                  row.repeat, row.mean_seconds, row.min_seconds,
                  row.max_seconds, row.total_shared);
    out += line;
  }
  return out;
}

std::string FormatCsv(const std::vector<BenchRow>& rows) {
  std::string out = "variant,algo,repeat,mean_s,min_s,max_s,shared\n";
  char line[160];
  for (const auto& row : rows) {
    std::snprintf(line, sizeof(line), "%s,%s,%zu,%.9e,%.9e,%.9e,%zu\n",
                  row.variant.c_str(),
                  std::string(AlgorithmName(row.algorithm)).c_str(),
                  row.repeat, row.mean_seconds, row.min_seconds,
                  row.max_seconds, row.total_shared);
    out += line;
  }
  return out;
}

}  // namespace ppgrt::bench
