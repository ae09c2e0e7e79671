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

#include "ppgrt/haplotype.hpp"

#include <fstream>
#include <istream>

#include "ppgrt/error.hpp"
#include "ppgrt/random.hpp"

namespace ppgrt {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

}  // namespace

std::optional<Letter> LetterFromChar(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return Letter::kA;
    case 'G':
    case 'g':
      return Letter::kG;
    case 'C':
    case 'c':
      return Letter::kC;
    case 'T':
    case 't':
      return Letter::kT;
    case '*':
      return Letter::kUnknown;
    default:
      return std::nullopt;
  }
}

Haplotype Haplotype::Parse(std::string_view text) {
  text = Trim(text);
  if (text.empty()) throw UsageError("empty haplotype");
  std::string letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto letter = LetterFromChar(text[i]);
    if (!letter) {
      throw UsageError("invalid letter '" + std::string(1, text[i]) +
                       "' at position " + std::to_string(i + 1));
    }
    letters.push_back(ToChar(*letter));
  }
  return Haplotype(std::move(letters));
}

Haplotype::Haplotype(std::vector<Letter> letters) {
  if (letters.empty()) throw UsageError("empty haplotype");
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    auto canonical = LetterFromChar(ToChar(l));
    if (!canonical || *canonical != l) {
      throw UsageError("letter outside the haplotype alphabet");
    }
    letters_.push_back(ToChar(l));
  }
}

std::span<const Letter> Haplotype::letters() const {
  static_assert(sizeof(Letter) == sizeof(char));
  return {reinterpret_cast<const Letter*>(letters_.data()), letters_.size()};
}

std::vector<std::uint8_t> Haplotype::Encoded() const {
  return {letters_.begin(), letters_.end()};
}

Haplotype SegmentedHaplotype::Concatenate() const {
  std::string joined;
  for (const auto& s : segments) joined += s.str();
  joined.resize(source_length);
  return Haplotype::Parse(joined);
}

SegmentedHaplotype Segment(const Haplotype& haplotype,
                           std::size_t segment_length) {
  if (segment_length == 0) throw UsageError("segment length must be positive");
  SegmentedHaplotype out;
  out.segment_length = segment_length;
  out.source_length = haplotype.size();
  const std::string& text = haplotype.str();
  for (std::size_t start = 0; start < text.size(); start += segment_length) {
    std::string piece = text.substr(start, segment_length);
    piece.resize(segment_length, ToChar(Letter::kUnknown));
    out.segments.push_back(Haplotype::Parse(piece));
  }
  return out;
}

Haplotype RandomHaplotype(Rng& rng, std::size_t length,
                          std::span<const Letter> alphabet) {
  if (alphabet.empty()) throw UsageError("empty alphabet");
  std::vector<Letter> letters(length);
  for (auto& l : letters) l = alphabet[rng.NextU64() % alphabet.size()];
  return Haplotype(std::move(letters));
}

std::vector<Haplotype> ParseHaplotypes(std::istream& in) {
  std::vector<Haplotype> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    try {
      out.push_back(Haplotype::Parse(view));
    } catch (const Error& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Haplotype> ReadHaplotypeFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open haplotype file " + path.string());
  return ParseHaplotypes(in);
}

}  // namespace ppgrt
