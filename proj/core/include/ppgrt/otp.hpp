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

#ifndef PPGRT_OTP_HPP_
#define PPGRT_OTP_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ppgrt/haplotype.hpp"

namespace ppgrt {

class Rng;

// One-time pad for a haplotype payload. The pad is exactly as long as the
// encoded haplotype and must never be reused.
struct OtpKey {
  std::vector<std::uint8_t> pad;

  static OtpKey Generate(std::size_t length, Rng& rng);

  friend bool operator==(const OtpKey&, const OtpKey&) = default;
};

std::vector<std::uint8_t> OtpEncrypt(const OtpKey& key, const Haplotype& h);

// Throws UsageError on length mismatch and FormatError when the decrypted
// bytes are not a valid haplotype (wrong key).
Haplotype OtpDecrypt(const OtpKey& key, std::span<const std::uint8_t> payload);

}  // namespace ppgrt

#endif  // PPGRT_OTP_HPP_
