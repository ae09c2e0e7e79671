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

#ifndef PPGRT_HAPLOTYPE_HPP_
#define PPGRT_HAPLOTYPE_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppgrt {

class Rng;

// One SNP letter. The enumerator value is the letter's canonical 8-bit
// encoding (ASCII), which is also the hash input for that letter.
enum class Letter : char {
  kA = 'A',
  kG = 'G',
  kC = 'C',
  kT = 'T',
  kUnknown = '*',
};

inline constexpr std::array<Letter, 5> kAlphabet = {
    Letter::kA, Letter::kG, Letter::kC, Letter::kT, Letter::kUnknown};

// Folds lowercase a/g/c/t to uppercase; everything else outside the
// alphabet yields nullopt.
std::optional<Letter> LetterFromChar(char c);

constexpr char ToChar(Letter letter) { return static_cast<char>(letter); }
constexpr std::uint8_t Encode(Letter letter) {
  return static_cast<std::uint8_t>(letter);
}

// A non-empty letter string over {A, G, C, T, *}.
class Haplotype {
 public:
  // Trims surrounding whitespace, folds case, and rejects anything else.
  // Error messages report the 1-based position of the offending character.
  static Haplotype Parse(std::string_view text);

  explicit Haplotype(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return Letter{letters_[i]}; }
  std::span<const Letter> letters() const;

  const std::string& str() const { return letters_; }

  // Canonical byte encoding, one byte per letter.
  std::vector<std::uint8_t> Encoded() const;

  friend bool operator==(const Haplotype&, const Haplotype&) = default;

 private:
  explicit Haplotype(std::string validated) : letters_(std::move(validated)) {}

  std::string letters_;
};

// Fixed-length segments; the final segment is padded with `*`.
struct SegmentedHaplotype {
  std::vector<Haplotype> segments;
  std::size_t segment_length = 0;
  std::size_t source_length = 0;

  // Concatenation of all segments with the padding stripped.
  Haplotype Concatenate() const;
};

SegmentedHaplotype Segment(const Haplotype& haplotype,
                           std::size_t segment_length);

Haplotype RandomHaplotype(Rng& rng, std::size_t length,
                          std::span<const Letter> alphabet = kAlphabet);

// One haplotype per line; '#' comment lines and blank lines are skipped.
// Parse errors carry the 1-based line number.
std::vector<Haplotype> ParseHaplotypes(std::istream& in);
std::vector<Haplotype> ReadHaplotypeFile(const std::filesystem::path& path);

}  // namespace ppgrt

#endif  // PPGRT_HAPLOTYPE_HPP_
