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

#ifndef PPGRT_SYSTEM_KEYS_HPP_
#define PPGRT_SYSTEM_KEYS_HPP_

#include <cstdint>

#include "ppgrt/bigint.hpp"
#include "ppgrt/hash.hpp"
#include "ppgrt/paillier.hpp"
#include "ppgrt/random.hpp"
#include "ppgrt/spu_key.hpp"

namespace ppgrt {

// pk = (1^k, g, H, P, n, beta, L). g and n live in the Paillier public key;
// H is identified by its digest algorithm.
struct PublicParams {
  std::uint32_t security_bits = 128;
  HashAlgorithm hash = HashAlgorithm::kSha256;
  paillier::PublicKey paillier;
  // Generator P of the order-n group G1, modeled as (Z_n, +).
  BigInt point;
  // sigma * lambda mod phi(n^2)
  BigInt beta;

  Hasher hasher() const { return Hasher(hash, paillier.n); }
  SpuKey spu_key() const { return SpuKey(security_bits, paillier.n, beta); }

  friend bool operator==(const PublicParams&, const PublicParams&) = default;
};

// sk = (sigma, gamma, lambda) plus the Paillier factors.
struct SecretParams {
  paillier::SecretKey paillier;
  BigInt sigma;
  // sigma * L(g^lambda mod n^2) mod n. The hardened trapdoor's gamma_0 has
  // the same definition.
  BigInt gamma;
  // L(g^lambda mod n^2), cached.
  BigInt l_g_lambda;

  friend bool operator==(const SecretParams&, const SecretParams&) = default;
};

struct SystemKeys {
  PublicParams pk;
  SecretParams sk;

  SpuKey spk() const { return pk.spu_key(); }
  BigInt phi_n_squared() const { return sk.paillier.phi_n_squared(); }
};

struct SetupOptions {
  std::uint32_t security_bits = 128;
  paillier::KeygenOptions paillier;
  HashAlgorithm hash = HashAlgorithm::kSha256;
};

// CI-side Setup: Paillier keys, then sigma, P, beta and gamma.
SystemKeys Setup(const SetupOptions& options, Rng& rng);

// Setup over existing Paillier keys (toy keys in tests).
SystemKeys SetupWithPaillier(const paillier::KeyPair& paillier_keys,
                             std::uint32_t security_bits, HashAlgorithm hash,
                             Rng& rng);

// Same with sigma and P pinned.
SystemKeys SetupWithScalars(const paillier::KeyPair& paillier_keys,
                            std::uint32_t security_bits, HashAlgorithm hash,
                            const BigInt& sigma, const BigInt& point);

}  // namespace ppgrt

#endif  // PPGRT_SYSTEM_KEYS_HPP_
