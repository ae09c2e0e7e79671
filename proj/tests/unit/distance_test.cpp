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


#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "ppgrt/distance.hpp"
#include "ppgrt/error.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/random.hpp"

namespace ppgrt {
namespace {

Haplotype H(std::string_view s) { return Haplotype::Parse(s); }

bool IsSubsequence(const std::string& sub, const std::string& s) {
  std::size_t j = 0;
  for (char c : s) {
    if (j < sub.size() && sub[j] == c) ++j;
  }
  return j == sub.size();
}

// Longest subsequence of x (over all 2^|x| masks) that also occurs in y.
std::size_t BruteLcs(const std::string& x, const std::string& y) {
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << x.size()); ++mask) {
    std::string sub;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (mask & (1u << i)) sub += x[i];
    }
    if (sub.size() > best && IsSubsequence(sub, y)) best = sub.size();
  }
  return best;
}

std::size_t RecursiveLevenshtein(std::string_view x, std::string_view y) {
  if (x.empty()) return y.size();
  if (y.empty()) return x.size();
  if (x.back() == y.back()) {
    return RecursiveLevenshtein(x.substr(0, x.size() - 1),
                                y.substr(0, y.size() - 1));
  }
  return 1 + std::min({RecursiveLevenshtein(x.substr(0, x.size() - 1), y),
                       RecursiveLevenshtein(x, y.substr(0, y.size() - 1)),
                       RecursiveLevenshtein(x.substr(0, x.size() - 1),
                                            y.substr(0, y.size() - 1))});
}

TEST(LcsTest, Examples) {
  EXPECT_EQ(LcsLength(H("AGCT"), H("AGCT")), 4u);
  EXPECT_EQ(LcsLength(H("AGGCA"), H("AGCA")), 4u);
  EXPECT_EQ(BruteLcs("AGGCA", "AGCA"), 4u);
  EXPECT_EQ(LcsLength(H("A"), H("G")), 0u);
}

TEST(LcsTest, AgreesWithBruteForceOnRandomPairs) {
  Rng rng(10);
  for (int i = 0; i < 400; ++i) {
    Haplotype x = RandomHaplotype(rng, 1 + rng.NextU64() % 12);
    Haplotype y = RandomHaplotype(rng, 1 + rng.NextU64() % 12);
    ASSERT_EQ(LcsLength(x, y), BruteLcs(x.str(), y.str()))
        << x.str() << " vs " << y.str();
  }
}

TEST(LcsTest, Properties) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Haplotype x = RandomHaplotype(rng, 1 + rng.NextU64() % 40);
    Haplotype y = RandomHaplotype(rng, 1 + rng.NextU64() % 40);
    const std::size_t l = LcsLength(x, y);
    EXPECT_EQ(l, LcsLength(y, x));
    EXPECT_LE(l, std::min(x.size(), y.size()));
    EXPECT_EQ(LcsLength(x, x), x.size());
  }
}

TEST(HammingTest, Examples) {
  EXPECT_EQ(HammingShared(H("AG"), H("AC")), 1u);
  EXPECT_EQ(HammingShared(H("AGCT*"), H("TCGA*")), 1u);
  EXPECT_EQ(HammingShared(H("AGCT*"), H("AGCT*")), 5u);
}

TEST(HammingTest, LengthGuard) {
  try {
    HammingShared(H("AGC"), H("AG"));
    FAIL();
  } catch (const LengthMismatch& e) {
    EXPECT_NE(std::string(e.what()).find("Please input equal length segments"),
              std::string::npos);
    EXPECT_EQ(e.kind(), ErrorKind::kUsage);
  }
}

TEST(HammingTest, Properties) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const std::size_t len = 1 + rng.NextU64() % 50;
    Haplotype x = RandomHaplotype(rng, len);
    Haplotype y = RandomHaplotype(rng, len);
    std::size_t differing = 0;
    for (std::size_t j = 0; j < len; ++j) differing += x[j] != y[j];
    EXPECT_EQ(HammingShared(x, y), HammingShared(y, x));
    EXPECT_EQ(HammingShared(x, y) + differing, len);
    EXPECT_EQ(HammingShared(x, x), len);
    EXPECT_LE(EditDistance(x, y), differing);
  }
}

TEST(EditTest, Examples) {
  EXPECT_EQ(EditShared(H("AG"), H("AG")), 2u);
  EXPECT_EQ(EditShared(H("A"), H("G")), 0u);
  EXPECT_EQ(EditShared(H("AGC"), H("AC")), 2u);
  EXPECT_EQ(RecursiveLevenshtein("AGC", "AC"), 1u);
}

TEST(EditTest, AgreesWithRecursiveLevenshtein) {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    Haplotype x = RandomHaplotype(rng, 1 + rng.NextU64() % 8);
    Haplotype y = RandomHaplotype(rng, 1 + rng.NextU64() % 8);
    const std::size_t d = RecursiveLevenshtein(x.str(), y.str());
    ASSERT_EQ(EditDistance(x, y), d) << x.str() << " vs " << y.str();
    ASSERT_EQ(EditShared(x, y), std::max(x.size(), y.size()) - d);
  }
}

TEST(EditTest, Properties) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    Haplotype x = RandomHaplotype(rng, 1 + rng.NextU64() % 40);
    Haplotype y = RandomHaplotype(rng, 1 + rng.NextU64() % 40);
    EXPECT_EQ(EditShared(x, x), x.size());
    EXPECT_LE(EditShared(x, y), std::max(x.size(), y.size()));
    EXPECT_EQ(EditDistance(x, y), EditDistance(y, x));
  }
}

}  // namespace
}  // namespace ppgrt
