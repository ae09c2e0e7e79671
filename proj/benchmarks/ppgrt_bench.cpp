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


#include <vector>

#include <benchmark/benchmark.h>

#include "ppgrt/distance.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/matcher.hpp"
#include "ppgrt/paillier.hpp"
#include "ppgrt/sse_index.hpp"
#include "ppgrt/system_keys.hpp"

namespace {

using namespace ppgrt;

constexpr std::size_t kSegment = 36;

const SystemKeys& Keys(std::size_t bits) {
  static std::vector<std::pair<std::size_t, SystemKeys>> cache;
  for (const auto& [b, keys] : cache) {
    if (b == bits) return keys;
  }
  Rng rng(bits);
  SetupOptions options;
  options.paillier.bits = bits;
  options.paillier.safe_primes = false;
  cache.emplace_back(bits, Setup(options, rng));
  return cache.back().second;
}

struct Pair {
  Haplotype x;
  Haplotype y;
  EncryptedIndex index;
  EncryptedQuery query;
};

Pair MakePair(std::size_t bits, std::size_t length) {
  const SystemKeys& keys = Keys(bits);
  Rng rng(length);
  Haplotype x = RandomHaplotype(rng, length);
  Haplotype y = RandomHaplotype(rng, length);
  EncryptedIndex index = GenIndex(keys, y, IndexMode::kBasic, nullptr, rng);
  EncryptedQuery query = GenQuery(keys.pk, x, IndexMode::kBasic, nullptr, rng);
  return {std::move(x), std::move(y), std::move(index), std::move(query)};
}

void BM_Predicate(benchmark::State& state) {
  const std::size_t bits = static_cast<std::size_t>(state.range(0));
  const Pair pair = MakePair(bits, 1);
  const SpuKey spk = Keys(bits).spk();
  const LetterTrapdoor trapdoor = pair.index.trapdoor(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MatchPredicate(spk, pair.query.c[0], trapdoor));
  }
}
BENCHMARK(BM_Predicate)->Arg(512)->Arg(1024)->Arg(2048)
    ->Unit(benchmark::kMillisecond);

void BM_Encrypt(benchmark::State& state) {
  const SystemKeys& keys = Keys(static_cast<std::size_t>(state.range(0)));
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        paillier::Encrypt(keys.pk.paillier, BigInt(12345), rng));
  }
}
BENCHMARK(BM_Encrypt)->Arg(512)->Arg(1024)->Arg(2048)
    ->Unit(benchmark::kMillisecond);

template <std::size_t (*Algo)(const LetterMatcher&)>
void BM_PpSegment(benchmark::State& state) {
  const Pair pair = MakePair(512, kSegment);
  const SpuKey spk = Keys(512).spk();
  for (auto _ : state) {
    EncryptedLetterMatcher matcher(spk, pair.index, pair.query);
    benchmark::DoNotOptimize(Algo(matcher));
  }
}
BENCHMARK(BM_PpSegment<PpHamming>)->Name("BM_PpHamming/36")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PpSegment<PpEdit>)->Name("BM_PpEdit/36")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PpSegment<PpLcs>)->Name("BM_PpLcs/36")
    ->Unit(benchmark::kMillisecond);

template <std::size_t (*Algo)(const Haplotype&, const Haplotype&)>
void BM_PlainSegment(benchmark::State& state) {
  Rng rng(7);
  const std::size_t length = static_cast<std::size_t>(state.range(0));
  const Haplotype x = RandomHaplotype(rng, length);
  const Haplotype y = RandomHaplotype(rng, length);
  for (auto _ : state) benchmark::DoNotOptimize(Algo(x, y));
}
BENCHMARK(BM_PlainSegment<HammingShared>)->Name("BM_PlainHamming")
    ->Arg(36)->Arg(1024);
BENCHMARK(BM_PlainSegment<EditShared>)->Name("BM_PlainEdit")
    ->Arg(36)->Arg(1024);
BENCHMARK(BM_PlainSegment<LcsLength>)->Name("BM_PlainLcs")
    ->Arg(36)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
