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

#ifndef PPGRT_ERROR_HPP_
#define PPGRT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppgrt {

// Coarse failure category. The command-line tool maps each kind to its exit
// code (usage 2, crypto 3, io and format 4).
enum class ErrorKind {
  kUsage,
  kCrypto,
  kIo,
  kFormat,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Hamming-style comparison of sequences with different lengths.
class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t query_length, std::size_t index_length)
      : Error(ErrorKind::kUsage,
              "Please input equal length segments. (query " +
                  std::to_string(query_length) + ", index " +
                  std::to_string(index_length) + ")") {}
};

// An encrypted equality check whose L-function precondition failed. This
// indicates a corrupted ciphertext or trapdoor, never a letter mismatch.
class PredicateFailure : public Error {
 public:
  explicit PredicateFailure(const std::string& what)
      : Error(ErrorKind::kCrypto, what) {}
};

inline Error UsageError(const std::string& what) {
  return Error(ErrorKind::kUsage, what);
}
inline Error CryptoError(const std::string& what) {
  return Error(ErrorKind::kCrypto, what);
}
inline Error IoError(const std::string& what) {
  return Error(ErrorKind::kIo, what);
}
inline Error FormatError(const std::string& what) {
  return Error(ErrorKind::kFormat, what);
}

}  // namespace ppgrt

#endif  // PPGRT_ERROR_HPP_
