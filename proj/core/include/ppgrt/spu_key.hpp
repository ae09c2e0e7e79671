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

#ifndef PPGRT_SPU_KEY_HPP_
#define PPGRT_SPU_KEY_HPP_

#include <cstdint>

#include "ppgrt/bigint.hpp"

namespace ppgrt {

// The storage/processing unit's key: security level, n and beta, and nothing
// else. The L function is fixed by n. Everything on the SPU side consumes
// only this type; there is no conversion from the secret key.
class SpuKey {
 public:
  SpuKey(std::uint32_t security_bits, BigInt n, BigInt beta)
      : security_bits_(security_bits),
        n_(std::move(n)),
        n_squared_(n_ * n_),
        beta_(std::move(beta)) {}

  std::uint32_t security_bits() const { return security_bits_; }
  const BigInt& n() const { return n_; }
  const BigInt& n_squared() const { return n_squared_; }
  const BigInt& beta() const { return beta_; }

  friend bool operator==(const SpuKey&, const SpuKey&) = default;

 private:
  std::uint32_t security_bits_;
  BigInt n_;
  BigInt n_squared_;
  BigInt beta_;
};

}  // namespace ppgrt

#endif  // PPGRT_SPU_KEY_HPP_
