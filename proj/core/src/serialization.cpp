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

#include "ppgrt/serialization.hpp"

#include <unistd.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "ppgrt/error.hpp"

namespace ppgrt::io {

namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> SplitSpaces(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t ParseCount(std::string_view text, std::string_view label) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw FormatError("field '" + std::string(label) +
                      "' is not a decimal count: '" + std::string(text) + "'");
  }
  return value;
}

BigInt ParseHexField(const Record& record, std::string_view label) {
  try {
    return FromHex(record.Get(label));
  } catch (const Error& e) {
    throw FormatError("field '" + std::string(label) + "': " + e.what());
  }
}

void RequireTag(const Record& record, std::string_view tag) {
  if (record.tag != tag) {
    throw FormatError("expected a " + std::string(tag) + " file, found '" +
                      record.tag + "'");
  }
}

std::string HexList(std::span<const BigInt> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += ToHex(values[i]);
  }
  return out;
}

std::vector<BigInt> ParseHexList(std::string_view text, std::size_t expected,
                                 std::string_view label) {
  std::vector<BigInt> out;
  for (auto token : SplitSpaces(text)) {
    try {
      out.push_back(FromHex(token));
    } catch (const Error& e) {
      throw FormatError("field '" + std::string(label) + "': " + e.what());
    }
  }
  if (out.size() != expected) {
    throw FormatError("field '" + std::string(label) + "' has " +
                      std::to_string(out.size()) + " values, expected " +
                      std::to_string(expected));
  }
  return out;
}

// Sequential reader over a record's fields for formats with repeated labels.
class FieldCursor {
 public:
  explicit FieldCursor(const Record& record) : record_(record) {}

  const std::string& Next(std::string_view label) {
    if (pos_ >= record_.fields.size()) {
      throw FormatError("unexpected end of file, expected '" +
                        std::string(label) + "'");
    }
    const auto& [name, value] = record_.fields[pos_];
    if (name != label) {
      throw FormatError("field " + std::to_string(pos_ + 2) + ": expected '" +
                        std::string(label) + "', found '" + name + "'");
    }
    ++pos_;
    return value;
  }

  bool Peek(std::string_view label) const {
    return pos_ < record_.fields.size() && record_.fields[pos_].first == label;
  }

  void ExpectEnd() const {
    if (pos_ != record_.fields.size()) {
      throw FormatError("unexpected trailing field '" +
                        record_.fields[pos_].first + "'");
    }
  }

 private:
  const Record& record_;
  std::size_t pos_ = 0;
};

void AddHex(Record& r, std::string label, const BigInt& value) {
  r.fields.emplace_back(std::move(label), ToHex(value));
}

void AddText(Record& r, std::string label, std::string value) {
  r.fields.emplace_back(std::move(label), std::move(value));
}

std::string BindingField(IndexMode mode, Binding binding) {
  return mode == IndexMode::kHardened ? std::string(BindingName(binding))
                                      : "none";
}

Binding ParseBindingField(IndexMode mode, std::string_view text) {
  if (mode == IndexMode::kBasic) {
    if (text != "none") throw FormatError("basic mode carries binding=none");
    return Binding::kLetterOnly;
  }
  try {
    return ParseBinding(text);
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

IndexMode ParseModeField(std::string_view text) {
  try {
    return ParseIndexMode(text);
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

void AddPublicFields(Record& r, const PublicParams& pk) {
  AddText(r, "k", std::to_string(pk.security_bits));
  AddText(r, "bits", std::to_string(pk.paillier.bit_length));
  AddText(r, "hash", std::string(HashAlgorithmName(pk.hash)));
  AddHex(r, "n", pk.paillier.n);
  AddHex(r, "g", pk.paillier.g);
  AddHex(r, "point", pk.point);
  AddHex(r, "beta", pk.beta);
}

PublicParams PublicFromRecord(const Record& r) {
  PublicParams pk;
  pk.security_bits = static_cast<std::uint32_t>(ParseCount(r.Get("k"), "k"));
  try {
    pk.hash = ParseHashAlgorithm(r.Get("hash"));
    pk.paillier =
        paillier::PublicKey::FromModulus(ParseHexField(r, "n"),
                                         ParseHexField(r, "g"));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  if (ParseCount(r.Get("bits"), "bits") != pk.paillier.bit_length) {
    throw FormatError("field 'bits' does not match the modulus");
  }
  pk.point = ParseHexField(r, "point");
  pk.beta = ParseHexField(r, "beta");
  return pk;
}

}  // namespace

const std::string& Record::Get(std::string_view label) const {
  for (const auto& [name, value] : fields) {
    if (name == label) return value;
  }
  throw FormatError("missing field '" + std::string(label) + "' in " + tag);
}

bool Record::Has(std::string_view label) const {
  for (const auto& field : fields) {
    if (field.first == label) return true;
  }
  return false;
}

std::vector<std::string> Record::Labels() const {
  std::vector<std::string> out;
  for (const auto& field : fields) out.push_back(field.first);
  return out;
}

Record ParseRecord(std::string_view text) {
  Record record;
  auto lines = SplitLines(text);
  bool have_tag = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.empty()) continue;
    if (!have_tag) {
      record.tag = std::string(line);
      have_tag = true;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw FormatError("line " + std::to_string(i + 1) +
                        ": expected label=value");
    }
    record.fields.emplace_back(std::string(line.substr(0, eq)),
                               std::string(line.substr(eq + 1)));
  }
  if (!have_tag) throw FormatError("empty file");
  return record;
}

std::string FormatRecord(const Record& record) {
  std::string out = record.tag + "\n";
  for (const auto& [name, value] : record.fields) {
    out += name;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

std::string HexBytes(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xF];
  }
  return out;
}

std::vector<std::uint8_t> ParseHexBytes(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("odd-length hex byte string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError("invalid hex digit in byte string");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 |
                                       nibble(hex[2 * i + 1]));
  }
  return out;
}

std::string SerializePaillierPublic(const paillier::PublicKey& pk) {
  Record r{std::string(kPaillierPublicTag), {}};
  AddText(r, "bits", std::to_string(pk.bit_length));
  AddHex(r, "n", pk.n);
  AddHex(r, "g", pk.g);
  return FormatRecord(r);
}

paillier::PublicKey ParsePaillierPublic(std::string_view text) {
  Record r = ParseRecord(text);
  if (r.tag != kPaillierPublicTag && r.tag != kPaillierSecretTag) {
    RequireTag(r, kPaillierPublicTag);
  }
  try {
    return paillier::PublicKey::FromModulus(ParseHexField(r, "n"),
                                            ParseHexField(r, "g"));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

std::string SerializePaillierSecret(const paillier::KeyPair& keys) {
  Record r{std::string(kPaillierSecretTag), {}};
  AddText(r, "bits", std::to_string(keys.pub.bit_length));
  AddHex(r, "n", keys.pub.n);
  AddHex(r, "g", keys.pub.g);
  AddHex(r, "p", keys.sec.p);
  AddHex(r, "q", keys.sec.q);
  AddHex(r, "p_prime", keys.sec.p_prime);
  AddHex(r, "q_prime", keys.sec.q_prime);
  AddHex(r, "lambda", keys.sec.lambda);
  AddHex(r, "mu", keys.sec.mu);
  return FormatRecord(r);
}

paillier::KeyPair ParsePaillierSecret(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kPaillierSecretTag);
  paillier::KeyPair keys;
  try {
    keys = paillier::KeysFromPrimes(ParseHexField(r, "p"),
                                    ParseHexField(r, "q"),
                                    ParseHexField(r, "g"));
  } catch (const Error& e) {
    throw FormatError(std::string("inconsistent secret key: ") + e.what());
  }
  if (keys.pub.n != ParseHexField(r, "n") ||
      keys.sec.lambda != ParseHexField(r, "lambda") ||
      keys.sec.mu != ParseHexField(r, "mu") ||
      keys.sec.p_prime != ParseHexField(r, "p_prime") ||
      keys.sec.q_prime != ParseHexField(r, "q_prime")) {
    throw FormatError("inconsistent secret key: derived values differ");
  }
  return keys;
}

std::string SerializePublicParams(const PublicParams& pk) {
  Record r{std::string(kPublicKeyTag), {}};
  AddPublicFields(r, pk);
  return FormatRecord(r);
}

PublicParams ParsePublicParams(std::string_view text) {
  Record r = ParseRecord(text);
  if (r.tag != kPublicKeyTag && r.tag != kSecretKeyTag) {
    RequireTag(r, kPublicKeyTag);
  }
  return PublicFromRecord(r);
}

std::string SerializeSystemKeys(const SystemKeys& keys) {
  Record r{std::string(kSecretKeyTag), {}};
  AddPublicFields(r, keys.pk);
  const auto& sec = keys.sk.paillier;
  AddHex(r, "p", sec.p);
  AddHex(r, "q", sec.q);
  AddHex(r, "p_prime", sec.p_prime);
  AddHex(r, "q_prime", sec.q_prime);
  AddHex(r, "lambda", sec.lambda);
  AddHex(r, "mu", sec.mu);
  AddHex(r, "sigma", keys.sk.sigma);
  AddHex(r, "gamma", keys.sk.gamma);
  return FormatRecord(r);
}

SystemKeys ParseSystemKeys(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kSecretKeyTag);
  PublicParams pk = PublicFromRecord(r);
  SystemKeys keys;
  try {
    auto paillier_keys = paillier::KeysFromPrimes(
        ParseHexField(r, "p"), ParseHexField(r, "q"), pk.paillier.g);
    keys = SetupWithScalars(paillier_keys, pk.security_bits, pk.hash,
                            ParseHexField(r, "sigma"), pk.point);
  } catch (const Error& e) {
    throw FormatError(std::string("inconsistent secret key: ") + e.what());
  }
  if (!(keys.pk == pk) || keys.sk.gamma != ParseHexField(r, "gamma") ||
      keys.sk.paillier.lambda != ParseHexField(r, "lambda") ||
      keys.sk.paillier.mu != ParseHexField(r, "mu") ||
      keys.sk.paillier.p_prime != ParseHexField(r, "p_prime") ||
      keys.sk.paillier.q_prime != ParseHexField(r, "q_prime")) {
    throw FormatError("inconsistent secret key: derived values differ");
  }
  return keys;
}

std::string SerializeSpuKey(const SpuKey& spk) {
  Record r{std::string(kSpuKeyTag), {}};
  AddText(r, "k", std::to_string(spk.security_bits()));
  AddText(r, "L", "paillier");
  AddHex(r, "n", spk.n());
  AddHex(r, "beta", spk.beta());
  return FormatRecord(r);
}

SpuKey ParseSpuKey(std::string_view text) {
  Record r = ParseRecord(text);
  if (r.tag == kSecretKeyTag) {
    throw FormatError("refusing a secret key file where the SPU key is "
                      "expected");
  }
  RequireTag(r, kSpuKeyTag);
  for (const auto& label : r.Labels()) {
    if (label != "k" && label != "L" && label != "n" && label != "beta") {
      throw FormatError("unexpected field '" + label + "' in SPU key");
    }
  }
  if (r.Get("L") != "paillier") {
    throw FormatError("unsupported L descriptor '" + r.Get("L") + "'");
  }
  return SpuKey(static_cast<std::uint32_t>(ParseCount(r.Get("k"), "k")),
                ParseHexField(r, "n"), ParseHexField(r, "beta"));
}

std::string SerializeEdb(const Edb& edb) {
  Record r{std::string(kEdbTag), {}};
  AddText(r, "mode", std::string(IndexModeName(edb.mode)));
  AddText(r, "binding", BindingField(edb.mode, edb.binding));
  AddHex(r, "n", edb.n);
  AddText(r, "d", std::to_string(edb.entries.size()));
  std::string lengths;
  for (std::size_t z = 0; z < edb.entries.size(); ++z) {
    if (z) lengths += ' ';
    lengths += std::to_string(edb.entries[z].index.size());
  }
  AddText(r, "t", lengths);
  for (std::size_t z = 0; z < edb.entries.size(); ++z) {
    const auto& entry = edb.entries[z];
    AddText(r, "entry", std::to_string(z));
    AddText(r, "B", HexList(entry.index.b));
    AddText(r, "S", HexList(entry.index.s));
    if (edb.mode == IndexMode::kHardened) {
      AddText(r, "K", HexList(entry.index.k));
    }
    AddText(r, "Z", HexBytes(entry.payload));
  }
  return FormatRecord(r);
}

Edb ParseEdb(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kEdbTag);
  FieldCursor cursor(r);
  Edb edb;
  edb.mode = ParseModeField(cursor.Next("mode"));
  edb.binding = ParseBindingField(edb.mode, cursor.Next("binding"));
  edb.n = FromHex(cursor.Next("n"));
  const std::size_t d = ParseCount(cursor.Next("d"), "d");
  if (d == 0) throw FormatError("EDB has no entries");
  std::vector<std::size_t> lengths;
  for (auto token : SplitSpaces(cursor.Next("t"))) {
    lengths.push_back(ParseCount(token, "t"));
  }
  if (lengths.size() != d) {
    throw FormatError("field 't' lists " + std::to_string(lengths.size()) +
                      " lengths for d=" + std::to_string(d));
  }
  for (std::size_t z = 0; z < d; ++z) {
    if (ParseCount(cursor.Next("entry"), "entry") != z) {
      throw FormatError("entries out of order at entry " + std::to_string(z));
    }
    EdbEntry entry;
    entry.index.b = ParseHexList(cursor.Next("B"), lengths[z], "B");
    entry.index.s = ParseHexList(cursor.Next("S"), lengths[z], "S");
    if (edb.mode == IndexMode::kHardened) {
      entry.index.k = ParseHexList(cursor.Next("K"), lengths[z], "K");
    }
    entry.payload = ParseHexBytes(cursor.Next("Z"));
    edb.entries.push_back(std::move(entry));
  }
  cursor.ExpectEnd();
  return edb;
}

std::string SerializeQuery(const EncryptedQuery& query) {
  Record r{std::string(kQueryTag), {}};
  AddText(r, "mode", std::string(IndexModeName(query.mode)));
  AddText(r, "binding", BindingField(query.mode, query.binding));
  AddHex(r, "n", query.n);
  AddText(r, "m", std::to_string(query.c.size()));
  std::vector<BigInt> values;
  values.reserve(query.c.size());
  for (const auto& c : query.c) values.push_back(c.value);
  AddText(r, "C", HexList(values));
  return FormatRecord(r);
}

EncryptedQuery ParseQuery(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kQueryTag);
  FieldCursor cursor(r);
  EncryptedQuery query;
  query.mode = ParseModeField(cursor.Next("mode"));
  query.binding = ParseBindingField(query.mode, cursor.Next("binding"));
  query.n = FromHex(cursor.Next("n"));
  const std::size_t m = ParseCount(cursor.Next("m"), "m");
  if (m == 0) throw FormatError("query has no ciphertexts");
  const BigInt n_squared = query.n * query.n;
  for (auto& value : ParseHexList(cursor.Next("C"), m, "C")) {
    if (value <= 0 || value >= n_squared) {
      throw FormatError("ciphertext outside (0, n^2)");
    }
    query.c.push_back(paillier::Ciphertext{std::move(value)});
  }
  cursor.ExpectEnd();
  return query;
}

std::string SerializeResults(const QueryResultList& results) {
  std::ostringstream out;
  out << kResultTag << '\n';
  for (const auto& result : results) {
    out << result.entry_id << '\t' << AlgorithmName(result.algorithm) << '\t';
    if (const auto* length = std::get_if<std::size_t>(&result.outcome)) {
      out << *length;
    } else {
      out << "ERROR:" << EntryErrorCode(std::get<EntryError>(result.outcome));
    }
    out << '\n';
  }
  return out.str();
}

QueryResultList ParseResults(std::string_view text) {
  auto lines = SplitLines(text);
  if (lines.empty() || lines[0] != kResultTag) {
    throw FormatError("expected a " + std::string(kResultTag) + " file");
  }
  QueryResultList results;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = "line " + std::to_string(i + 1) + ": ";
    std::string_view line = lines[i];
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string_view::npos
                           ? tab1
                           : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos ||
        line.find('\t', tab2 + 1) != std::string_view::npos) {
      throw FormatError(where + "expected three tab-separated fields");
    }
    QueryResult result;
    try {
      result.entry_id = ParseCount(line.substr(0, tab1), "entry_id");
      result.algorithm =
          ParseAlgorithm(line.substr(tab1 + 1, tab2 - tab1 - 1));
      std::string_view outcome = line.substr(tab2 + 1);
      if (outcome.starts_with("ERROR:")) {
        result.outcome = ParseEntryErrorCode(outcome.substr(6));
      } else {
        result.outcome = ParseCount(outcome, "shared_length");
      }
    } catch (const Error& e) {
      throw FormatError(where + e.what());
    }
    results.push_back(result);
  }
  return results;
}

std::string SerializePads(std::span<const OtpKey> pads) {
  Record r{std::string(kPadsTag), {}};
  AddText(r, "d", std::to_string(pads.size()));
  for (const auto& pad : pads) AddText(r, "pad", HexBytes(pad.pad));
  return FormatRecord(r);
}

std::vector<OtpKey> ParsePads(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kPadsTag);
  FieldCursor cursor(r);
  const std::size_t d = ParseCount(cursor.Next("d"), "d");
  std::vector<OtpKey> pads;
  for (std::size_t i = 0; i < d; ++i) {
    pads.push_back(OtpKey{ParseHexBytes(cursor.Next("pad"))});
  }
  cursor.ExpectEnd();
  return pads;
}

std::string SerializeSharedSecret(const SharedSecret& secret) {
  Record r{std::string(kSecretTag), {}};
  AddHex(r, "a", secret.a);
  AddHex(r, "b", secret.b);
  AddText(r, "binding", std::string(BindingName(secret.binding)));
  return FormatRecord(r);
}

SharedSecret ParseSharedSecret(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kSecretTag);
  SharedSecret secret;
  secret.a = ParseHexField(r, "a");
  secret.b = ParseHexField(r, "b");
  try {
    secret.binding = ParseBinding(r.Get("binding"));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  return secret;
}

namespace {

void AddGroup(Record& r, const DhGroup& group) {
  AddText(r, "group", group.name);
  AddHex(r, "p", group.p);
  AddHex(r, "g", group.g);
  AddHex(r, "q", group.q);
}

DhGroup GroupFromRecord(const Record& r) {
  DhGroup group;
  group.name = r.Get("group");
  group.p = ParseHexField(r, "p");
  group.g = ParseHexField(r, "g");
  group.q = ParseHexField(r, "q");
  return group;
}

}  // namespace

std::string SerializeDhPublic(const DhPublicMessage& message) {
  Record r{std::string(kDhPublicTag), {}};
  AddGroup(r, message.group);
  AddHex(r, "value", message.value);
  return FormatRecord(r);
}

DhPublicMessage ParseDhPublic(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kDhPublicTag);
  return DhPublicMessage{GroupFromRecord(r), ParseHexField(r, "value")};
}

std::string SerializeDhKeyPair(const DhKeyPair& pair) {
  Record r{std::string(kDhPrivateTag), {}};
  AddGroup(r, pair.group);
  AddHex(r, "private", pair.private_value);
  AddHex(r, "value", pair.public_value);
  return FormatRecord(r);
}

DhKeyPair ParseDhKeyPair(std::string_view text) {
  Record r = ParseRecord(text);
  RequireTag(r, kDhPrivateTag);
  DhKeyPair pair;
  pair.group = GroupFromRecord(r);
  pair.private_value = ParseHexField(r, "private");
  pair.public_value = ParseHexField(r, "value");
  if (PowMod(pair.group.g, pair.private_value, pair.group.p) !=
      pair.public_value) {
    throw FormatError("Diffie-Hellman key pair is inconsistent");
  }
  return pair;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot write " + path.string());
  }
}

}  // namespace ppgrt::io
