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

#ifndef PPGRT_KEY_EXCHANGE_HPP_
#define PPGRT_KEY_EXCHANGE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "ppgrt/bigint.hpp"
#include "ppgrt/edb.hpp"
#include "ppgrt/hash.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/random.hpp"

namespace ppgrt {

// Coefficients (a, b) in Z_n shared by the CI and the TI.
struct SharedSecret {
  BigInt a;
  BigInt b;
  Binding binding = Binding::kPositionAndLetter;

  friend bool operator==(const SharedSecret&, const SharedSecret&) = default;
};

// s_j = a * x_j + b mod n. `position` is 1-based.
BigInt DerivePositionSecret(const Hasher& hasher, const SharedSecret& secret,
                            std::uint64_t position, Letter letter);

// Finite-field Diffie-Hellman group: prime p, generator g, and the order q
// of the subgroup g generates.
struct DhGroup {
  std::string name;
  BigInt p;
  BigInt g;
  BigInt q;

  // RFC 2409 Oakley group 2 (1024-bit MODP).
  static DhGroup Modp1024();

  // Fresh safe-prime group of `bits` bits with g = 4 generating the order-q
  // subgroup. For tests and small demos.
  static DhGroup Generate(std::size_t bits, Rng& rng);

  // "modp1024" or "custom".
  static DhGroup ByName(std::string_view name);

  friend bool operator==(const DhGroup&, const DhGroup&) = default;
};

struct DhPublicMessage {
  DhGroup group;
  BigInt value;

  friend bool operator==(const DhPublicMessage&,
                         const DhPublicMessage&) = default;
};

struct DhKeyPair {
  DhGroup group;
  BigInt private_value;
  BigInt public_value;

  DhPublicMessage public_message() const { return {group, public_value}; }
};

DhKeyPair DhGenerateKeyPair(const DhGroup& group, Rng& rng);

// Validates the peer value (group match, 1 < y < p - 1), computes the shared
// DH value and derives (a, b) by hashing it under tags "kdf-a" / "kdf-b"
// into Z_n.
SharedSecret DhDerive(const DhKeyPair& own, const DhPublicMessage& peer,
                      const Hasher& hasher, Binding binding);

}  // namespace ppgrt

#endif  // PPGRT_KEY_EXCHANGE_HPP_
