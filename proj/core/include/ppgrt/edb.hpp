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

#ifndef PPGRT_EDB_HPP_
#define PPGRT_EDB_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ppgrt/bigint.hpp"
#include "ppgrt/paillier.hpp"

// Data exchanged with the storage/processing unit. Nothing here depends on
// secret key material.
namespace ppgrt {

enum class IndexMode {
  // b = rho * H0(eta P), s = rho * gamma * H(W) * H0(eta P).
  kBasic,
  // Adds k = a_j * z_j and salts the letter hash with the shared secret.
  kHardened,
};

std::string_view IndexModeName(IndexMode mode);
IndexMode ParseIndexMode(std::string_view name);

// What the per-position hash salt s_j = a * x_j + b binds to.
enum class Binding {
  // x_j = H(W_j). Letters match regardless of position (LCS, edit).
  kLetterOnly,
  // x_j = H(p_j || W_j). Only aligned positions match (Hamming).
  kPositionAndLetter,
};

std::string_view BindingName(Binding binding);
Binding ParseBinding(std::string_view name);

// Server-storable encoding of one letter. `k` is present in hardened mode
// only.
struct LetterTrapdoor {
  BigInt b;
  BigInt s;
  std::optional<BigInt> k;

  friend bool operator==(const LetterTrapdoor&, const LetterTrapdoor&) =
      default;
};

// Per-haplotype arrays (B, S[, K]).
struct EncryptedIndex {
  std::vector<BigInt> b;
  std::vector<BigInt> s;
  std::vector<BigInt> k;  // empty unless hardened

  std::size_t size() const { return b.size(); }
  bool hardened() const { return !k.empty(); }
  LetterTrapdoor trapdoor(std::size_t i) const;

  friend bool operator==(const EncryptedIndex&, const EncryptedIndex&) =
      default;
};

struct EdbEntry {
  EncryptedIndex index;
  std::vector<std::uint8_t> payload;  // one-time-pad ciphertext

  friend bool operator==(const EdbEntry&, const EdbEntry&) = default;
};

struct Edb {
  IndexMode mode = IndexMode::kBasic;
  // Meaningful in hardened mode only.
  Binding binding = Binding::kLetterOnly;
  BigInt n;
  std::vector<EdbEntry> entries;

  friend bool operator==(const Edb&, const Edb&) = default;
};

struct EncryptedQuery {
  IndexMode mode = IndexMode::kBasic;
  Binding binding = Binding::kLetterOnly;
  BigInt n;
  std::vector<paillier::Ciphertext> c;

  std::size_t size() const { return c.size(); }

  friend bool operator==(const EncryptedQuery&, const EncryptedQuery&) =
      default;
};

}  // namespace ppgrt

#endif  // PPGRT_EDB_HPP_
