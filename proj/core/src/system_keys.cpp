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

#include "ppgrt/system_keys.hpp"

#include "ppgrt/error.hpp"

namespace ppgrt {

SystemKeys SetupWithScalars(const paillier::KeyPair& paillier_keys,
                            std::uint32_t security_bits, HashAlgorithm hash,
                            const BigInt& sigma, const BigInt& point) {
  const auto& pub = paillier_keys.pub;
  const auto& sec = paillier_keys.sec;
  if (sigma < 1) throw UsageError("sigma must be a positive integer");
  if (point <= 0 || point >= pub.n) {
    throw UsageError("group generator must be a nonzero element of Z_n");
  }
  SystemKeys keys;
  keys.pk.security_bits = security_bits;
  keys.pk.hash = hash;
  keys.pk.paillier = pub;
  keys.pk.point = point;
  keys.pk.beta = Mod(sigma * sec.lambda, sec.phi_n_squared());

  keys.sk.paillier = sec;
  keys.sk.sigma = sigma;
  keys.sk.l_g_lambda = paillier::LFunction(
      PowMod(pub.g, sec.lambda, pub.n_squared), pub.n);
  keys.sk.gamma = Mod(sigma * keys.sk.l_g_lambda, pub.n);
  return keys;
}

SystemKeys SetupWithPaillier(const paillier::KeyPair& paillier_keys,
                             std::uint32_t security_bits, HashAlgorithm hash,
                             Rng& rng) {
  const BigInt& n = paillier_keys.pub.n;
  // A unit sigma keeps gamma invertible, so trapdoor checks stay sound.
  BigInt sigma = rng.UnitBelow(n);
  BigInt point = rng.UnitBelow(n);
  return SetupWithScalars(paillier_keys, security_bits, hash, sigma, point);
}

SystemKeys Setup(const SetupOptions& options, Rng& rng) {
  auto paillier_keys = paillier::Keygen(options.paillier, rng);
  return SetupWithPaillier(paillier_keys, options.security_bits, options.hash,
                           rng);
}

}  // namespace ppgrt
