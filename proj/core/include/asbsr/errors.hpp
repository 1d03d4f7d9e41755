// Copyright 2026 The ASBSR Authors. All Rights Reserved.
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

#ifndef ASBSR_ERRORS_HPP_
#define ASBSR_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asbsr {

/// The sample positions do not admit an invertible sub-transform system
/// (exactly singular factorization or condition estimate above the limit).
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A shape family cannot reach the requested sample budget.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. byte_offset() is where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t byte_offset)
      : std::runtime_error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// File format not handled by the reader.
class UnsupportedFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace asbsr

#endif  // ASBSR_ERRORS_HPP_
