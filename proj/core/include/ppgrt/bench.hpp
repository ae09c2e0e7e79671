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

#ifndef PPGRT_BENCH_HPP_
#define PPGRT_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ppgrt/matcher.hpp"
#include "ppgrt/random.hpp"

namespace ppgrt::bench {

// A pair of random haplotypes of segments * segment_length letters, one
// encrypted as EDB index segments and one as query segments, compared
// segment by segment. Timings cover the comparison only.
struct BenchConfig {
  std::size_t segments = 50;
  std::size_t segment_length = 36;
  std::size_t repeat = 10;
  std::vector<Algorithm> algorithms = {Algorithm::kHamming, Algorithm::kEdit,
                                       Algorithm::kLcs};
  std::size_t key_bits = 512;
  bool safe_primes = false;
  bool plaintext = true;
  bool privacy_preserving = true;
  // Plaintext passes are microseconds long; each timed repetition runs the
  // whole segment sweep this many times and reports the per-sweep mean.
  std::size_t plaintext_sweeps = 200;
};

// Full-scale segmentation: 500 segments of 36 letters.
BenchConfig FullPreset();
// Desk scale: 50 segments of 36 letters.
BenchConfig DeskPreset();

struct BenchRow {
  std::string variant;  // "plain" or "pp"
  Algorithm algorithm = Algorithm::kHamming;
  std::size_t repeat = 0;
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
  double max_seconds = 0.0;
  // Sum of per-segment shared lengths; identical between variants.
  std::size_t total_shared = 0;
};

std::vector<BenchRow> RunBench(const BenchConfig& config, Rng& rng);

const BenchRow* FindRow(const std::vector<BenchRow>& rows,
                        const std::string& variant, Algorithm algorithm);

std::string FormatTable(const std::vector<BenchRow>& rows);
std::string FormatCsv(const std::vector<BenchRow>& rows);

}  // namespace ppgrt::bench

#endif  // PPGRT_BENCH_HPP_
