// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taba {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A (source, target) pair has no usable probe record.
class IncompleteLogError : public Error {
 public:
  IncompleteLogError(std::int64_t source, std::int64_t target)
      : Error("incomplete probe log: no usable records for pair " +
              std::to_string(source) + "->" + std::to_string(target)),
        source_(source),
        target_(target) {}

  std::int64_t source() const { return source_; }
  std::int64_t target() const { return target_; }

 private:
  std::int64_t source_;
  std::int64_t target_;
};

// Curve fitting needs at least two points.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Exact DP was requested on an instance above the configured cell limit.
class DpTooLargeError : public Error {
 public:
  DpTooLargeError(std::int64_t cells, std::int64_t limit)
      : Error("instance needs " + std::to_string(cells) +
              " DP cell updates, above the limit of " + std::to_string(limit) +
              "; use the greedy solver"),
        cells_(cells),
        limit_(limit) {}

  std::int64_t cells() const { return cells_; }
  std::int64_t limit() const { return limit_; }

 private:
  std::int64_t cells_;
  std::int64_t limit_;
};

// Relative gain against a zero baseline score.
class DegenerateBaselineError : public Error {
 public:
  using Error::Error;
};

}  // namespace taba
