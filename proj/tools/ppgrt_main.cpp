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

// ppgrt: command-line front end for the three roles.
//
//   CI   setup, encrypt-db, dh-keygen, dh-derive
//   TI   gen-query, send, dh-keygen, dh-derive
//   SPU  test, serve
//   misc oracle, bench, attack
//
// Exit codes: 0 success, 2 usage, 3 crypto error, 4 IO or file format.

#include <csignal>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppgrt/attacks.hpp"
#include "ppgrt/bench.hpp"
#include "ppgrt/distance.hpp"
#include "ppgrt/error.hpp"
#include "ppgrt/haplotype.hpp"
#include "ppgrt/key_exchange.hpp"
#include "ppgrt/matcher.hpp"
#include "ppgrt/protocol.hpp"
#include "ppgrt/serialization.hpp"
#include "ppgrt/sse_index.hpp"
#include "ppgrt/system_keys.hpp"

namespace fs = std::filesystem;
using namespace ppgrt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCrypto = 3;
constexpr int kExitIo = 4;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return kExitUsage;
    case ErrorKind::kCrypto:
      return kExitCrypto;
    case ErrorKind::kIo:
    case ErrorKind::kFormat:
      return kExitIo;
  }
  return kExitIo;
}

Rng MakeRng(const std::optional<std::uint64_t>& seed) {
  return Rng::FromOptionalSeed(seed);
}

void WriteOutput(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    io::WriteFile(path, contents);
  }
}

Haplotype LoadQueryHaplotype(const std::string& literal,
                             const std::string& file) {
  if (!literal.empty() && !file.empty()) {
    throw UsageError("give either --haplotype or --haplotype-file");
  }
  if (!file.empty()) {
    auto haplotypes = ReadHaplotypeFile(file);
    if (haplotypes.size() != 1) {
      throw UsageError("query file must hold exactly one haplotype");
    }
    return haplotypes.front();
  }
  if (literal.empty()) throw UsageError("empty haplotype");
  return Haplotype::Parse(literal);
}

std::optional<SharedSecret> LoadSecret(IndexMode mode,
                                       const std::string& path) {
  if (mode == IndexMode::kBasic) {
    if (!path.empty()) throw UsageError("--secret applies to hardened mode");
    return std::nullopt;
  }
  if (path.empty()) throw UsageError("hardened mode requires --secret");
  return io::ParseSharedSecret(io::ReadFile(path));
}

std::vector<Algorithm> ParseAlgorithmList(const std::string& list) {
  std::vector<Algorithm> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(ParseAlgorithm(item));
  }
  if (out.empty()) throw UsageError("no algorithms selected");
  return out;
}

// ---- setup ----

struct SetupArgs {
  std::size_t bits = paillier::kFullBits;
  std::string mode = "full";
  std::string hash = "sha256";
  std::uint32_t security = 128;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
};

int RunSetup(const SetupArgs& args) {
  SetupOptions options;
  options.security_bits = args.security;
  options.hash = ParseHashAlgorithm(args.hash);
  options.paillier.bits = args.bits;
  if (args.mode == "full") {
    if (args.bits < paillier::kFullBits) {
      throw UsageError("full mode needs --bits >= 2048 (use --mode test)");
    }
    options.paillier.safe_primes = true;
  } else if (args.mode == "test") {
    options.paillier.safe_primes = false;
  } else {
    throw UsageError("--mode must be full or test");
  }
  const fs::path dir(args.out_dir);
  if (!fs::is_directory(dir)) {
    throw IoError("output directory does not exist: " + args.out_dir);
  }
  Rng rng = MakeRng(args.seed);
  SystemKeys keys = Setup(options, rng);
  io::WriteFile(dir / "pk.keys", io::SerializePublicParams(keys.pk));
  io::WriteFile(dir / "sk.keys", io::SerializeSystemKeys(keys));
  io::WriteFile(dir / "spk.keys", io::SerializeSpuKey(keys.spk()));
  std::cerr << "wrote pk.keys, sk.keys, spk.keys to " << dir.string() << " ("
            << keys.pk.paillier.bit_length << "-bit n)\n";
  return kExitOk;
}

// ---- encrypt-db ----

struct EncryptDbArgs {
  std::string gdb;
  std::string keys;
  std::string mode = "basic";
  std::string secret;
  std::string out;
  std::string pads;
  std::optional<std::uint64_t> seed;
};

int RunEncryptDb(const EncryptDbArgs& args) {
  const IndexMode mode = ParseIndexMode(args.mode);
  auto secret = LoadSecret(mode, args.secret);
  SystemKeys keys = io::ParseSystemKeys(io::ReadFile(args.keys));
  auto database = ReadHaplotypeFile(args.gdb);
  Rng rng = MakeRng(args.seed);
  GeneratedEdb generated =
      GenEdb(keys, database, mode, secret ? &*secret : nullptr, rng);
  io::WriteFile(args.out, io::SerializeEdb(generated.edb));
  const std::string pads = args.pads.empty() ? args.out + ".pads" : args.pads;
  io::WriteFile(pads, io::SerializePads(generated.pads));
  std::cerr << "encrypted " << database.size() << " haplotypes into "
            << args.out << " (pads in " << pads << ")\n";
  return kExitOk;
}

// ---- gen-query ----

struct GenQueryArgs {
  std::string haplotype;
  std::string haplotype_file;
  std::string keys;
  std::string mode = "basic";
  std::string secret;
  std::string out;
  std::optional<std::uint64_t> seed;
};

int RunGenQuery(const GenQueryArgs& args) {
  const IndexMode mode = ParseIndexMode(args.mode);
  auto secret = LoadSecret(mode, args.secret);
  Haplotype query = LoadQueryHaplotype(args.haplotype, args.haplotype_file);
  PublicParams pk = io::ParsePublicParams(io::ReadFile(args.keys));
  Rng rng = MakeRng(args.seed);
  EncryptedQuery encrypted =
      GenQuery(pk, query, mode, secret ? &*secret : nullptr, rng);
  WriteOutput(args.out, io::SerializeQuery(encrypted));
  return kExitOk;
}

// ---- test ----

struct TestArgs {
  std::string edb;
  std::string query;
  std::string spk;
  std::string algo;
  std::string out;
  std::size_t workers = 0;
};

int RunTest(const TestArgs& args) {
  SpuKey spk = io::ParseSpuKey(io::ReadFile(args.spk));
  Edb edb = io::ParseEdb(io::ReadFile(args.edb));
  EncryptedQuery query = io::ParseQuery(io::ReadFile(args.query));
  auto results =
      TestAll(spk, edb, query, ParseAlgorithm(args.algo), args.workers);
  WriteOutput(args.out, io::SerializeResults(results));
  return kExitOk;
}

// ---- oracle ----

struct OracleArgs {
  std::string gdb;
  std::string haplotype;
  std::string haplotype_file;
  std::string algo;
  std::string out;
};

int RunOracle(const OracleArgs& args) {
  const Algorithm algorithm = ParseAlgorithm(args.algo);
  Haplotype query = LoadQueryHaplotype(args.haplotype, args.haplotype_file);
  auto database = ReadHaplotypeFile(args.gdb);
  QueryResultList results;
  for (std::size_t z = 0; z < database.size(); ++z) {
    QueryResult result{z, algorithm, std::size_t{0}};
    const Haplotype& entry = database[z];
    switch (algorithm) {
      case Algorithm::kLcs:
        result.outcome = LcsLength(entry, query);
        break;
      case Algorithm::kEdit:
        result.outcome = EditShared(query, entry);
        break;
      case Algorithm::kHamming:
        if (entry.size() != query.size()) {
          result.outcome = EntryError::kLengthMismatch;
        } else {
          result.outcome = HammingShared(query, entry);
        }
        break;
    }
    results.push_back(result);
  }
  WriteOutput(args.out, io::SerializeResults(results));
  return kExitOk;
}

// ---- serve / send ----

struct ServeArgs {
  std::string edb;
  std::string spk;
  std::string host = "127.0.0.1";
  std::uint16_t port = 7411;
  std::size_t max_frame = net::kDefaultMaxFrameBytes;
  std::size_t workers = 1;
};

int RunServe(const ServeArgs& args) {
  SpuKey spk = io::ParseSpuKey(io::ReadFile(args.spk));
  Edb edb = io::ParseEdb(io::ReadFile(args.edb));
  const std::size_t d = edb.entries.size();

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  net::ServerOptions options;
  options.host = args.host;
  options.port = args.port;
  options.max_frame_bytes = args.max_frame;
  options.workers = args.workers;
  net::SpuServer server(std::move(spk), std::move(edb), options);
  server.Start();
  std::cout << "listening on " << args.host << ":" << server.port() << " ("
            << d << " entries)" << std::endl;
  int received = 0;
  sigwait(&signals, &received);
  server.Stop();
  std::cerr << "stopped\n";
  return kExitOk;
}

struct SendArgs {
  std::string host = "127.0.0.1";
  std::uint16_t port = 7411;
  std::string query;
  std::string algo;
  std::string out;
  std::size_t max_frame = net::kDefaultMaxFrameBytes;
};

int RunSend(const SendArgs& args) {
  std::string reply =
      net::SendQuery(args.host, args.port, ParseAlgorithm(args.algo),
                     io::ReadFile(args.query), args.max_frame);
  WriteOutput(args.out, reply);
  return kExitOk;
}

// ---- bench ----

struct BenchArgs {
  std::string preset = "desk";
  std::optional<std::size_t> segments;
  std::optional<std::size_t> seg_len;
  std::optional<std::size_t> repeat;
  std::optional<std::size_t> bits;
  std::string algos = "hamming,edit,lcs";
  std::size_t plain_sweeps = 200;
  bool plain_only = false;
  bool pp_only = false;
  std::string csv;
  std::optional<std::uint64_t> seed;
};

int RunBenchCommand(const BenchArgs& args) {
  bench::BenchConfig config;
  if (args.preset == "full") {
    config = bench::FullPreset();
  } else if (args.preset == "desk") {
    config = bench::DeskPreset();
  } else {
    throw UsageError("--preset must be desk or full");
  }
  if (args.segments) config.segments = *args.segments;
  if (args.seg_len) config.segment_length = *args.seg_len;
  if (args.repeat) config.repeat = *args.repeat;
  if (args.bits) {
    config.key_bits = *args.bits;
    config.safe_primes = *args.bits >= paillier::kFullBits;
  }
  if (args.plain_only && args.pp_only) {
    throw UsageError("--plain-only and --pp-only are exclusive");
  }
  config.plaintext = !args.pp_only;
  config.privacy_preserving = !args.plain_only;
  config.plaintext_sweeps = args.plain_sweeps;
  config.algorithms = ParseAlgorithmList(args.algos);
  Rng rng = MakeRng(args.seed);
  auto rows = bench::RunBench(config, rng);
  std::cout << config.segments << " segments x " << config.segment_length
            << " letters, " << config.key_bits << "-bit keys\n"
            << bench::FormatTable(rows);
  if (!args.csv.empty()) WriteOutput(args.csv, bench::FormatCsv(rows));
  return kExitOk;
}

// ---- attack ----

struct AttackArgs {
  std::string name;
  std::string mode = "basic";
  std::size_t letters = 100;
  std::size_t trials = 10;
  std::size_t bits = 512;
  std::optional<std::uint64_t> seed;
};

int RunAttack(const AttackArgs& args) {
  const IndexMode mode = ParseIndexMode(args.mode);
  if (args.trials == 0 || args.letters < 2) {
    throw UsageError("need at least one trial of at least two letters");
  }
  if (args.name == "lambda-leak" && mode != IndexMode::kHardened) {
    throw UsageError("lambda-leak probes hardened indexes only");
  }
  if (args.name != "ratio" && args.name != "dictionary" &&
      args.name != "lambda-leak") {
    throw UsageError("--name must be ratio, dictionary or lambda-leak");
  }
  Rng rng = MakeRng(args.seed);
  SetupOptions options;
  options.paillier.bits = args.bits;
  options.paillier.safe_primes = false;
  SystemKeys keys = Setup(options, rng);
  const SpuKey spk = keys.spk();

  double success_sum = 0.0;
  for (std::size_t trial = 0; trial < args.trials; ++trial) {
    Haplotype truth = RandomHaplotype(rng, args.letters);
    SharedSecret secret{rng.Below(keys.pk.paillier.n),
                        rng.Below(keys.pk.paillier.n),
                        Binding::kPositionAndLetter};
    EncryptedIndex index = GenIndex(
        keys, truth, mode, mode == IndexMode::kHardened ? &secret : nullptr,
        rng);
    double success = 0.0;
    if (args.name == "ratio") {
      std::vector<LetterTrapdoor> trapdoors;
      for (std::size_t i = 0; i < index.size(); ++i) {
        trapdoors.push_back(index.trapdoor(i));
      }
      auto result = attacks::RatioIdentifierAttack(
          trapdoors, keys.pk.hasher(), kAlphabet, rng);
      success = result.recovery.Accuracy(truth);
      std::cout << "trial " << trial << ": resolved "
                << result.recovery.resolved_count() << "/" << args.letters
                << ", consistent hypotheses " << result.consistent_hypotheses
                << ", accuracy " << success << "\n";
    } else if (args.name == "dictionary") {
      auto result =
          attacks::OfflineDictionaryAttack(spk, keys.pk, index, kAlphabet, rng);
      success = result.recovery.Accuracy(truth);
      std::cout << "trial " << trial << ": predicate calls "
                << result.predicate_calls << ", hits "
                << result.predicate_hits << ", accuracy " << success << "\n";
    } else {
      std::vector<EncryptedIndex> indexes{index};
      auto report = attacks::LambdaLeakProbe(indexes, keys.sk.paillier);
      success = report.lambda_divides ? 1.0 : 0.0;
      std::cout << "trial " << trial << ": gcd of " << report.samples
                << " k values is " << (report.lambda_divides ? "" : "not ")
                << "a multiple of lambda, gcd/lambda = "
                << report.ratio.get_str() << "\n";
    }
    success_sum += success;
  }
  std::cout << "attack=" << args.name << " mode=" << IndexModeName(mode)
            << " success_rate=" << std::fixed << std::setprecision(6)
            << success_sum / static_cast<double>(args.trials) << std::endl;
  return kExitOk;
}

// ---- key exchange ----

struct DhKeygenArgs {
  std::string group = "modp1024";
  std::size_t group_bits = 0;
  std::string group_from;
  std::string out_private;
  std::string out_public;
  std::optional<std::uint64_t> seed;
};

int RunDhKeygen(const DhKeygenArgs& args) {
  Rng rng = MakeRng(args.seed);
  DhGroup group;
  if (!args.group_from.empty()) {
    group = io::ParseDhPublic(io::ReadFile(args.group_from)).group;
  } else if (args.group_bits != 0) {
    group = DhGroup::Generate(args.group_bits, rng);
  } else {
    group = DhGroup::ByName(args.group);
  }
  DhKeyPair pair = DhGenerateKeyPair(group, rng);
  io::WriteFile(args.out_private, io::SerializeDhKeyPair(pair));
  io::WriteFile(args.out_public, io::SerializeDhPublic(pair.public_message()));
  return kExitOk;
}

struct DhDeriveArgs {
  std::string private_file;
  std::string peer;
  std::string keys;
  std::string binding = "position";
  std::string out;
};

int RunDhDerive(const DhDeriveArgs& args) {
  DhKeyPair own = io::ParseDhKeyPair(io::ReadFile(args.private_file));
  DhPublicMessage peer = io::ParseDhPublic(io::ReadFile(args.peer));
  PublicParams pk = io::ParsePublicParams(io::ReadFile(args.keys));
  SharedSecret secret =
      DhDerive(own, peer, pk.hasher(), ParseBinding(args.binding));
  io::WriteFile(args.out, io::SerializeSharedSecret(secret));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-preserving genetic relatedness testing"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed,
                 "Pin randomness (overrides PPGRT_SEED)");
  std::function<int()> action;

  SetupArgs setup;
  auto* setup_cmd = app.add_subcommand("setup", "CI: generate system keys");
  setup_cmd->add_option("--bits", setup.bits, "Paillier modulus size");
  setup_cmd->add_option("--mode", setup.mode,
                        "full (safe primes, >= 2048 bits) or test");
  setup_cmd->add_option("--hash", setup.hash, "sha256 or md5");
  setup_cmd->add_option("--security", setup.security, "security parameter k");
  setup_cmd->add_option("--out-dir", setup.out_dir, "Directory for key files");
  setup_cmd->callback([&] {
    setup.seed = seed;
    action = [&] { return RunSetup(setup); };
  });

  EncryptDbArgs encrypt;
  auto* encrypt_cmd =
      app.add_subcommand("encrypt-db", "CI: encrypt a haplotype database");
  encrypt_cmd->add_option("--gdb", encrypt.gdb, "Haplotype file")->required();
  encrypt_cmd->add_option("--keys", encrypt.keys, "sk.keys")->required();
  encrypt_cmd->add_option("--mode", encrypt.mode, "basic or hardened");
  encrypt_cmd->add_option("--secret", encrypt.secret, "Shared secret file");
  encrypt_cmd->add_option("--out", encrypt.out, "EDB output")->required();
  encrypt_cmd->add_option("--pads", encrypt.pads,
                          "One-time pads output (default <out>.pads)");
  encrypt_cmd->callback([&] {
    encrypt.seed = seed;
    action = [&] { return RunEncryptDb(encrypt); };
  });

  GenQueryArgs query;
  auto* query_cmd =
      app.add_subcommand("gen-query", "TI: encrypt a query haplotype");
  query_cmd->add_option("--haplotype", query.haplotype, "Letters");
  query_cmd->add_option("--haplotype-file", query.haplotype_file,
                        "File with one haplotype");
  query_cmd->add_option("--keys", query.keys, "pk.keys")->required();
  query_cmd->add_option("--mode", query.mode, "basic or hardened");
  query_cmd->add_option("--secret", query.secret, "Shared secret file");
  query_cmd->add_option("--out", query.out, "Query output (- for stdout)");
  query_cmd->callback([&] {
    query.seed = seed;
    action = [&] { return RunGenQuery(query); };
  });

  TestArgs test;
  auto* test_cmd = app.add_subcommand("test", "SPU: run the relatedness test");
  test_cmd->add_option("--edb", test.edb, "EDB file")->required();
  test_cmd->add_option("--query", test.query, "Query file")->required();
  test_cmd->add_option("--spk", test.spk, "spk.keys")->required();
  test_cmd->add_option("--algo", test.algo, "lcs, hamming or edit")
      ->required();
  test_cmd->add_option("--out", test.out, "Result output (- for stdout)");
  test_cmd->add_option("--workers", test.workers, "Worker threads (0 = auto)");
  test_cmd->callback([&] { action = [&] { return RunTest(test); }; });

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Plaintext algorithms, same output format");
  oracle_cmd->add_option("--gdb", oracle.gdb, "Haplotype file")->required();
  oracle_cmd->add_option("--haplotype", oracle.haplotype, "Letters");
  oracle_cmd->add_option("--haplotype-file", oracle.haplotype_file,
                         "File with one haplotype");
  oracle_cmd->add_option("--algo", oracle.algo, "lcs, hamming or edit")
      ->required();
  oracle_cmd->add_option("--out", oracle.out, "Result output (- for stdout)");
  oracle_cmd->callback([&] { action = [&] { return RunOracle(oracle); }; });

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "SPU: serve tests over TCP");
  serve_cmd->add_option("--edb", serve.edb, "EDB file")->required();
  serve_cmd->add_option("--spk", serve.spk, "spk.keys")->required();
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("--port", serve.port, "Port (0 = any free port)");
  serve_cmd->add_option("--max-frame", serve.max_frame, "Frame size cap");
  serve_cmd->add_option("--workers", serve.workers, "Workers per request");
  serve_cmd->callback([&] { action = [&] { return RunServe(serve); }; });

  SendArgs send;
  auto* send_cmd = app.add_subcommand("send", "TI: send a query to an SPU");
  send_cmd->add_option("--host", send.host, "SPU host");
  send_cmd->add_option("--port", send.port, "SPU port");
  send_cmd->add_option("--query", send.query, "Query file")->required();
  send_cmd->add_option("--algo", send.algo, "lcs, hamming or edit")
      ->required();
  send_cmd->add_option("--out", send.out, "Result output (- for stdout)");
  send_cmd->add_option("--max-frame", send.max_frame, "Frame size cap");
  send_cmd->callback([&] { action = [&] { return RunSend(send); }; });

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Timing harness");
  bench_cmd->add_option("--preset", bench_args.preset, "desk or full");
  bench_cmd->add_option("--segments", bench_args.segments, "Segment count");
  bench_cmd->add_option("--seg-len", bench_args.seg_len, "Letters/segment");
  bench_cmd->add_option("--repeat", bench_args.repeat, "Timed repetitions");
  bench_cmd->add_option("--bits", bench_args.bits, "Paillier modulus size");
  bench_cmd->add_option("--algos", bench_args.algos, "Comma-separated list");
  bench_cmd->add_option("--plain-sweeps", bench_args.plain_sweeps,
                        "Plaintext sweeps per timed repetition");
  bench_cmd->add_flag("--plain-only", bench_args.plain_only);
  bench_cmd->add_flag("--pp-only", bench_args.pp_only);
  bench_cmd->add_option("--csv", bench_args.csv, "CSV output path");
  bench_cmd->callback([&] {
    bench_args.seed = seed;
    action = [&] { return RunBenchCommand(bench_args); };
  });

  AttackArgs attack;
  auto* attack_cmd =
      app.add_subcommand("attack", "Run an attack demonstration");
  attack_cmd->add_option("--name", attack.name,
                         "ratio, dictionary or lambda-leak")
      ->required();
  attack_cmd->add_option("--mode", attack.mode, "basic or hardened");
  attack_cmd->add_option("--letters", attack.letters, "Letters per trial");
  attack_cmd->add_option("--trials", attack.trials, "Trials");
  attack_cmd->add_option("--bits", attack.bits, "Paillier modulus size");
  attack_cmd->callback([&] {
    attack.seed = seed;
    action = [&] { return RunAttack(attack); };
  });

  DhKeygenArgs dh_keygen;
  auto* dh_keygen_cmd =
      app.add_subcommand("dh-keygen", "CI/TI: Diffie-Hellman key pair");
  dh_keygen_cmd->add_option("--group", dh_keygen.group, "modp1024");
  dh_keygen_cmd->add_option("--group-bits", dh_keygen.group_bits,
                            "Generate a fresh safe-prime group instead");
  dh_keygen_cmd->add_option("--group-from", dh_keygen.group_from,
                            "Reuse the group of a peer public file");
  dh_keygen_cmd->add_option("--out-private", dh_keygen.out_private)
      ->required();
  dh_keygen_cmd->add_option("--out-public", dh_keygen.out_public)->required();
  dh_keygen_cmd->callback([&] {
    dh_keygen.seed = seed;
    action = [&] { return RunDhKeygen(dh_keygen); };
  });

  DhDeriveArgs dh_derive;
  auto* dh_derive_cmd =
      app.add_subcommand("dh-derive", "CI/TI: derive the shared secret");
  dh_derive_cmd->add_option("--private", dh_derive.private_file)->required();
  dh_derive_cmd->add_option("--peer", dh_derive.peer)->required();
  dh_derive_cmd->add_option("--keys", dh_derive.keys, "pk.keys or sk.keys")
      ->required();
  dh_derive_cmd->add_option("--binding", dh_derive.binding,
                            "position or letter");
  dh_derive_cmd->add_option("--out", dh_derive.out)->required();
  dh_derive_cmd->callback([&] {
    action = [&] { return RunDhDerive(dh_derive); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "ppgrt: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ppgrt: " << e.what() << "\n";
    return kExitIo;
  }
}
