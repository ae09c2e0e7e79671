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

#include "ppgrt/key_exchange.hpp"

#include "ppgrt/error.hpp"
#include "ppgrt/paillier.hpp"

namespace ppgrt {

namespace {

constexpr const char* kModp1024Hex =
    "ffffffffffffffffc90fdaa22168c234c4c6628b80dc1cd1"
    "29024e088a67cc74020bbea63b139b22514a08798e3404dd"
    "ef9519b3cd3a431b302b0a6df25f14374fe1356d6d51c245"
    "e485b576625e7ec6f44c42e9a637ed6b0bff5cb6f406b7ed"
    "ee386bfb5a899fa5ae9f24117c4b1fe649286651ece65381"
    "ffffffffffffffff";

}  // namespace

std::string_view BindingName(Binding binding) {
  switch (binding) {
    case Binding::kLetterOnly:
      return "letter";
    case Binding::kPositionAndLetter:
      return "position";
  }
  return "unknown";
}

Binding ParseBinding(std::string_view name) {
  if (name == "letter") return Binding::kLetterOnly;
  if (name == "position") return Binding::kPositionAndLetter;
  throw UsageError("unknown binding '" + std::string(name) +
                   "' (expected letter or position)");
}

BigInt DerivePositionSecret(const Hasher& hasher, const SharedSecret& secret,
                            std::uint64_t position, Letter letter) {
  const BigInt x = secret.binding == Binding::kPositionAndLetter
                       ? hasher.PositionLetter(position, letter)
                       : hasher.Letter(letter);
  return Mod(secret.a * x + secret.b, hasher.modulus());
}

DhGroup DhGroup::Modp1024() {
  DhGroup group;
  group.name = "modp1024";
  group.p = FromHex(kModp1024Hex);
  group.g = 2;
  group.q = (group.p - 1) / 2;
  return group;
}

DhGroup DhGroup::Generate(std::size_t bits, Rng& rng) {
  DhGroup group;
  group.name = "custom";
  group.p = paillier::RandomSafePrime(bits, rng);
  group.g = 4;
  group.q = (group.p - 1) / 2;
  return group;
}

DhGroup DhGroup::ByName(std::string_view name) {
  if (name == "modp1024") return Modp1024();
  throw UsageError("unknown Diffie-Hellman group '" + std::string(name) + "'");
}

DhKeyPair DhGenerateKeyPair(const DhGroup& group, Rng& rng) {
  if (group.q < 3) throw UsageError("Diffie-Hellman group too small");
  DhKeyPair pair;
  pair.group = group;
  pair.private_value = rng.InRange(2, group.q - 1);
  pair.public_value = PowMod(group.g, pair.private_value, group.p);
  return pair;
}

SharedSecret DhDerive(const DhKeyPair& own, const DhPublicMessage& peer,
                      const Hasher& hasher, Binding binding) {
  if (!(peer.group == own.group)) {
    throw CryptoError("Diffie-Hellman group parameters do not match");
  }
  const BigInt& p = own.group.p;
  if (peer.value <= 1 || peer.value >= p - 1) {
    throw CryptoError("Diffie-Hellman peer value out of range");
  }
  const BigInt shared = PowMod(peer.value, own.private_value, p);
  const auto bytes = ToBytes(shared, (BitLength(p) + 7) / 8);
  SharedSecret secret;
  secret.a = hasher.ToZn("kdf-a", bytes);
  secret.b = hasher.ToZn("kdf-b", bytes);
  secret.binding = binding;
  return secret;
}

}  // namespace ppgrt
