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

#include "ppgrt/otp.hpp"

#include <string>

#include "ppgrt/error.hpp"
#include "ppgrt/random.hpp"

namespace ppgrt {

OtpKey OtpKey::Generate(std::size_t length, Rng& rng) {
  OtpKey key;
  key.pad.resize(length);
  rng.Fill(key.pad);
  return key;
}

std::vector<std::uint8_t> OtpEncrypt(const OtpKey& key, const Haplotype& h) {
  auto bytes = h.Encoded();
  if (key.pad.size() != bytes.size()) {
    throw UsageError("one-time pad length does not match the haplotype");
  }
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] ^= key.pad[i];
  return bytes;
}

Haplotype OtpDecrypt(const OtpKey& key, std::span<const std::uint8_t> payload) {
  if (key.pad.size() != payload.size()) {
    throw UsageError("one-time pad length does not match the payload");
  }
  std::string text(payload.size(), '\0');
  for (std::size_t i = 0; i < payload.size(); ++i) {
    text[i] = static_cast<char>(payload[i] ^ key.pad[i]);
  }
  for (char c : text) {
    auto letter = LetterFromChar(c);
    if (!letter || ToChar(*letter) != c) {
      throw FormatError("payload does not decrypt to a haplotype");
    }
  }
  return Haplotype::Parse(text);
}

}  // namespace ppgrt
