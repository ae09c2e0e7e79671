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

#include "ppgrt/distance.hpp"

#include <algorithm>
#include <vector>

#include "ppgrt/error.hpp"

namespace ppgrt {

std::size_t LcsLength(const Haplotype& x, const Haplotype& y) {
  const std::size_t rows = x.size();
  const std::size_t cols = y.size();
  std::vector<std::size_t> w((rows + 1) * (cols + 1), 0);
  auto at = [cols](std::size_t i, std::size_t j) { return i * (cols + 1) + j; };
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) {
      if (x[i - 1] == y[j - 1]) {
        w[at(i, j)] = 1 + w[at(i - 1, j - 1)];
      } else if (w[at(i - 1, j)] >= w[at(i, j - 1)]) {
        w[at(i, j)] = w[at(i - 1, j)];
      } else {
        w[at(i, j)] = w[at(i, j - 1)];
      }
    }
  }
  return w[at(rows, cols)];
}

std::size_t HammingShared(const Haplotype& x, const Haplotype& y) {
  if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
  std::size_t shared = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) ++shared;
  }
  return shared;
}

std::size_t EditDistance(const Haplotype& x, const Haplotype& y) {
  const std::size_t len1 = x.size();
  const std::size_t len2 = y.size();
  std::vector<std::size_t> dp((len1 + 1) * (len2 + 1));
  auto at = [len2](std::size_t i, std::size_t j) { return i * (len2 + 1) + j; };
  for (std::size_t i = 0; i <= len1; ++i) dp[at(i, 0)] = i;
  for (std::size_t j = 0; j <= len2; ++j) dp[at(0, j)] = j;
  for (std::size_t i = 0; i < len1; ++i) {
    for (std::size_t j = 0; j < len2; ++j) {
      if (x[i] == y[j]) {
        dp[at(i + 1, j + 1)] = dp[at(i, j)];
      } else {
        std::size_t replace = dp[at(i, j)] + 1;
        std::size_t insert = dp[at(i, j + 1)] + 1;
        std::size_t remove = dp[at(i + 1, j)] + 1;
        std::size_t best = replace > insert ? insert : replace;
        best = remove > best ? best : remove;
        dp[at(i + 1, j + 1)] = best;
      }
    }
  }
  return dp[at(len1, len2)];
}

std::size_t EditShared(const Haplotype& x, const Haplotype& y) {
  return std::max(x.size(), y.size()) - EditDistance(x, y);
}

}  // namespace ppgrt
