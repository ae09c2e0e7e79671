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


#include <array>
#include <iostream>

#include <gtest/gtest.h>

#include "ppgrt/attacks.hpp"
#include "ppgrt/error.hpp"
#include "ppgrt/sse_index.hpp"
#include "test_support.hpp"

namespace ppgrt::attacks {
namespace {

using testing::RandomSecret;
using testing::SmallKeys;

std::vector<LetterTrapdoor> Trapdoors(const EncryptedIndex& index) {
  std::vector<LetterTrapdoor> out;
  for (std::size_t i = 0; i < index.size(); ++i) out.push_back(index.trapdoor(i));
  return out;
}

std::string Guess(const LetterRecovery& r) {
  std::string out;
  for (Letter l : r.guess) out += ToChar(l);
  return out;
}

TEST(RatioAttackTest, RecoversPlantedBasicSequence) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(1);
  const Haplotype truth = Haplotype::Parse("AGCT*");
  const EncryptedIndex index =
      GenIndex(keys, truth, IndexMode::kBasic, nullptr, rng);
  const auto result = RatioIdentifierAttack(Trapdoors(index),
                                            keys.pk.hasher(), kAlphabet, rng);
  EXPECT_EQ(Guess(result.recovery), "AGCT*");
  EXPECT_EQ(result.recovery.resolved_count(), 5u);
  EXPECT_EQ(result.consistent_hypotheses, 1u);
  EXPECT_DOUBLE_EQ(result.confidence, 1.0);
}

TEST(RatioAttackTest, FullRecoveryOnLongBasicIndex) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(2);
  const Haplotype truth = RandomHaplotype(rng, 100);
  const EncryptedIndex index =
      GenIndex(keys, truth, IndexMode::kBasic, nullptr, rng);
  const auto result = RatioIdentifierAttack(Trapdoors(index),
                                            keys.pk.hasher(), kAlphabet, rng);
  EXPECT_DOUBLE_EQ(result.recovery.Accuracy(truth), 1.0);
}

TEST(RatioAttackTest, HardenedIndexDropsToChance) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(3);
  for (Binding binding : {Binding::kLetterOnly, Binding::kPositionAndLetter}) {
    const SharedSecret secret = RandomSecret(keys, rng, binding);
    const Haplotype truth = RandomHaplotype(rng, 100);
    const EncryptedIndex index =
        GenIndex(keys, truth, IndexMode::kHardened, &secret, rng);
    const auto result = RatioIdentifierAttack(
        Trapdoors(index), keys.pk.hasher(), kAlphabet, rng);
    EXPECT_EQ(result.recovery.resolved_count(), 0u);
    EXPECT_EQ(result.consistent_hypotheses, 0u);
    EXPECT_LE(result.recovery.Accuracy(truth), 0.2 + 0.15);
  }
}

TEST(RatioAttackTest, NeedsTwoTrapdoors) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(4);
  const EncryptedIndex index =
      GenIndex(keys, Haplotype::Parse("A"), IndexMode::kBasic, nullptr, rng);
  EXPECT_THROW(RatioIdentifierAttack(Trapdoors(index), keys.pk.hasher(),
                                     kAlphabet, rng),
               Error);
}

TEST(DictionaryAttackTest, RecoversBasicIndexWithinBound) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(5);
  const Haplotype truth = RandomHaplotype(rng, 36);
  const EncryptedIndex index =
      GenIndex(keys, truth, IndexMode::kBasic, nullptr, rng);
  const auto result =
      OfflineDictionaryAttack(keys.spk(), keys.pk, index, kAlphabet, rng);
  EXPECT_DOUBLE_EQ(result.recovery.Accuracy(truth), 1.0);
  EXPECT_EQ(result.recovery.resolved_count(), 36u);
  EXPECT_EQ(result.predicate_hits, 36u);
  EXPECT_LE(result.predicate_calls, 5u * 36u);
}

TEST(DictionaryAttackTest, SharedSecretIndexYieldsNothing) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(6);
  for (Binding binding : {Binding::kLetterOnly, Binding::kPositionAndLetter}) {
    const SharedSecret secret = RandomSecret(keys, rng, binding);
    const EncryptedIndex index = GenIndex(keys, RandomHaplotype(rng, 36),
                                          IndexMode::kHardened, &secret, rng);
    const auto result =
        OfflineDictionaryAttack(keys.spk(), keys.pk, index, kAlphabet, rng);
    EXPECT_EQ(result.predicate_hits, 0u);
    EXPECT_EQ(result.recovery.resolved_count(), 0u);
    EXPECT_EQ(result.predicate_calls, 5u * 36u);
  }
}

TEST(DictionaryAttackTest, SingleLetterAlphabet) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(7);
  const std::array<Letter, 1> only_a = {Letter::kA};
  const Haplotype truth = Haplotype::Parse("AAAA");
  const EncryptedIndex index =
      GenIndex(keys, truth, IndexMode::kBasic, nullptr, rng);
  const auto result =
      OfflineDictionaryAttack(keys.spk(), keys.pk, index, only_a, rng);
  EXPECT_EQ(Guess(result.recovery), "AAAA");
  EXPECT_EQ(result.predicate_calls, 4u);
}

TEST(LambdaLeakTest, GcdOfPublishedKValues) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(8);
  const SharedSecret secret =
      RandomSecret(keys, rng, Binding::kPositionAndLetter);
  const std::vector<EncryptedIndex> many = {GenIndex(
      keys, RandomHaplotype(rng, 100), IndexMode::kHardened, &secret, rng)};
  const LambdaLeakReport report = LambdaLeakProbe(many, keys.sk.paillier);
  EXPECT_EQ(report.samples, 100u);
  EXPECT_TRUE(report.lambda_divides);
  std::cout << "gcd(k)/lambda over 100 samples = " << report.ratio.get_str()
            << "\n";

  const std::vector<EncryptedIndex> two = {GenIndex(
      keys, Haplotype::Parse("AG"), IndexMode::kHardened, &secret, rng)};
  const LambdaLeakReport small = LambdaLeakProbe(two, keys.sk.paillier);
  EXPECT_EQ(small.samples, 2u);
  EXPECT_EQ(Mod(small.gcd, keys.sk.paillier.lambda), 0);
}

TEST(LambdaLeakTest, RejectsUnsuitableInput) {
  const SystemKeys& keys = SmallKeys();
  Rng rng(9);
  const std::vector<EncryptedIndex> basic = {GenIndex(
      keys, Haplotype::Parse("AGC"), IndexMode::kBasic, nullptr, rng)};
  EXPECT_THROW(LambdaLeakProbe(basic, keys.sk.paillier), Error);
  const SharedSecret secret = RandomSecret(keys, rng, Binding::kLetterOnly);
  const std::vector<EncryptedIndex> one = {GenIndex(
      keys, Haplotype::Parse("A"), IndexMode::kHardened, &secret, rng)};
  EXPECT_THROW(LambdaLeakProbe(one, keys.sk.paillier), Error);
}

}  // namespace
}  // namespace ppgrt::attacks
