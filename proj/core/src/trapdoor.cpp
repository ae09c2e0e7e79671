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

#include "ppgrt/sse_index.hpp"

#include "ppgrt/error.hpp"

namespace ppgrt {

namespace {

const SharedSecret& RequireSecret(const SharedSecret* secret) {
  if (secret == nullptr) {
    throw UsageError("hardened mode requires a shared secret");
  }
  return *secret;
}

}  // namespace

std::string_view IndexModeName(IndexMode mode) {
  return mode == IndexMode::kHardened ? "hardened" : "basic";
}

IndexMode ParseIndexMode(std::string_view name) {
  if (name == "basic") return IndexMode::kBasic;
  if (name == "hardened") return IndexMode::kHardened;
  throw UsageError("unknown mode '" + std::string(name) +
                   "' (expected basic or hardened)");
}

LetterTrapdoor GenTrapdoorBasic(const SystemKeys& keys, Letter letter,
                                const TrapdoorRandomness& randomness) {
  const BigInt& n = keys.pk.paillier.n;
  const Hasher hasher = keys.pk.hasher();
  const BigInt h0 =
      hasher.GroupElement(Mod(randomness.eta * keys.pk.point, n));
  LetterTrapdoor out;
  out.b = Mod(randomness.rho * h0, n);
  out.s = Mod(out.b * keys.sk.gamma * hasher.Letter(letter), n);
  return out;
}

LetterTrapdoor GenTrapdoorBasic(const SystemKeys& keys, Letter letter,
                                Rng& rng) {
  const BigInt& n = keys.pk.paillier.n;
  TrapdoorRandomness randomness{rng.Below(n), rng.Below(n)};
  return GenTrapdoorBasic(keys, letter, randomness);
}

LetterTrapdoor GenTrapdoorHardened(const SystemKeys& keys, Letter letter,
                                   const SharedSecret& secret,
                                   std::uint64_t position,
                                   const HardenedRandomness& randomness) {
  if (position < 1) throw UsageError("positions are 1-based");
  const BigInt& n = keys.pk.paillier.n;
  const BigInt& lambda = keys.sk.paillier.lambda;
  const Hasher hasher = keys.pk.hasher();

  const BigInt h0 =
      hasher.GroupElement(Mod(randomness.eta * keys.pk.point, n));
  const BigInt salt = DerivePositionSecret(hasher, secret, position, letter);
  const BigInt salted_hash = hasher.SaltedLetter(letter, salt);

  const BigInt z = lambda * randomness.z_prime;
  const BigInt gamma_j =
      Mod(Mod(randomness.a * keys.sk.l_g_lambda, n) * InvMod(lambda, n), n);

  LetterTrapdoor out;
  out.b = Mod(randomness.rho * h0, n);
  out.s = Mod((out.b * keys.sk.gamma + gamma_j * z) * salted_hash, n);
  out.k = Mod(randomness.a * z, keys.phi_n_squared());
  return out;
}

LetterTrapdoor GenTrapdoorHardened(const SystemKeys& keys, Letter letter,
                                   const SharedSecret& secret,
                                   std::uint64_t position, Rng& rng) {
  const BigInt& n = keys.pk.paillier.n;
  HardenedRandomness randomness;
  randomness.rho = rng.Below(n);
  randomness.eta = rng.Below(n);
  randomness.a = rng.Below(n);
  randomness.z_prime = rng.Below(n);
  return GenTrapdoorHardened(keys, letter, secret, position, randomness);
}

LetterTrapdoor EncryptedIndex::trapdoor(std::size_t i) const {
  LetterTrapdoor out{b.at(i), s.at(i), std::nullopt};
  if (hardened()) out.k = k.at(i);
  return out;
}

EncryptedIndex GenIndex(const SystemKeys& keys, const Haplotype& haplotype,
                        IndexMode mode, const SharedSecret* secret, Rng& rng) {
  if (mode == IndexMode::kHardened) RequireSecret(secret);
  EncryptedIndex index;
  index.b.reserve(haplotype.size());
  index.s.reserve(haplotype.size());
  for (std::size_t j = 0; j < haplotype.size(); ++j) {
    LetterTrapdoor t =
        mode == IndexMode::kBasic
            ? GenTrapdoorBasic(keys, haplotype[j], rng)
            : GenTrapdoorHardened(keys, haplotype[j], *secret, j + 1, rng);
    index.b.push_back(std::move(t.b));
    index.s.push_back(std::move(t.s));
    if (t.k) index.k.push_back(std::move(*t.k));
  }
  return index;
}

GeneratedEdb GenEdb(const SystemKeys& keys,
                    std::span<const Haplotype> database, IndexMode mode,
                    const SharedSecret* secret, Rng& rng) {
  if (database.empty()) throw UsageError("empty haplotype database");
  if (mode == IndexMode::kHardened) RequireSecret(secret);
  GeneratedEdb out;
  out.edb.mode = mode;
  if (mode == IndexMode::kHardened) out.edb.binding = secret->binding;
  out.edb.n = keys.pk.paillier.n;
  for (const auto& haplotype : database) {
    EdbEntry entry;
    entry.index = GenIndex(keys, haplotype, mode, secret, rng);
    OtpKey pad = OtpKey::Generate(haplotype.size(), rng);
    entry.payload = OtpEncrypt(pad, haplotype);
    out.edb.entries.push_back(std::move(entry));
    out.pads.push_back(std::move(pad));
  }
  return out;
}

BigInt QueryLetterHash(const PublicParams& pk, Letter letter, IndexMode mode,
                       const SharedSecret* secret, std::uint64_t position) {
  const Hasher hasher = pk.hasher();
  if (mode == IndexMode::kBasic) return hasher.Letter(letter);
  const SharedSecret& shared = RequireSecret(secret);
  const BigInt salt = DerivePositionSecret(hasher, shared, position, letter);
  return hasher.SaltedLetter(letter, salt);
}

EncryptedQuery GenQuery(const PublicParams& pk, const Haplotype& query,
                        IndexMode mode, const SharedSecret* secret, Rng& rng) {
  if (mode == IndexMode::kHardened) RequireSecret(secret);
  EncryptedQuery out;
  out.mode = mode;
  if (mode == IndexMode::kHardened) out.binding = secret->binding;
  out.n = pk.paillier.n;
  out.c.reserve(query.size());
  for (std::size_t j = 0; j < query.size(); ++j) {
    const BigInt h = QueryLetterHash(pk, query[j], mode, secret, j + 1);
    out.c.push_back(paillier::Encrypt(pk.paillier, h, rng));
  }
  return out;
}

}  // namespace ppgrt
