// Copyright 2026 The divkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIVKIT_ERROR_HPP_
#define DIVKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace divkit {

// Error taxonomy shared by the library and the CLI. The CLI maps every kind
// below to exit status 1 with a one-line JSON report on stderr; malformed
// command lines are reported separately with exit status 2.
enum class ErrorKind {
  kDomain,    // invalid arguments or malformed values
  kCapacity,  // enumeration bound exceeded
  kNumeric,   // a numeric search failed to converge or bracket
  kSampling,  // a randomized sampler starved
  kParse,     // unreadable input file or spec string
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::kDomain: return "domain";
      case ErrorKind::kCapacity: return "capacity";
      case ErrorKind::kNumeric: return "numeric";
      case ErrorKind::kSampling: return "sampling";
      case ErrorKind::kParse: return "parse";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorKind::kDomain, message) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message)
      : Error(ErrorKind::kCapacity, message) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& message)
      : Error(ErrorKind::kNumeric, message) {}
};

class SamplingError : public Error {
 public:
  explicit SamplingError(const std::string& message)
      : Error(ErrorKind::kSampling, message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error(ErrorKind::kParse, message) {}
};

}  // namespace divkit

#endif  // DIVKIT_ERROR_HPP_
