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

#ifndef PPGRT_DISTANCE_HPP_
#define PPGRT_DISTANCE_HPP_

#include <cstddef>

#include "ppgrt/haplotype.hpp"

namespace ppgrt {

// Plaintext shared-length measures. These are the reference results the
// encrypted algorithms must reproduce exactly.

// Length of the longest common subsequence.
std::size_t LcsLength(const Haplotype& x, const Haplotype& y);

// Number of positions where x and y agree. Throws LengthMismatch when the
// lengths differ.
std::size_t HammingShared(const Haplotype& x, const Haplotype& y);

// max(|x|, |y|) minus the unit-cost Levenshtein distance, evaluated with the
// replace / insert / delete minimum in that order.
std::size_t EditShared(const Haplotype& x, const Haplotype& y);

// Unit-cost Levenshtein distance.
std::size_t EditDistance(const Haplotype& x, const Haplotype& y);

}  // namespace ppgrt

#endif  // PPGRT_DISTANCE_HPP_
