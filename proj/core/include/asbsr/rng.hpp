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

#ifndef ASBSR_RNG_HPP_
#define ASBSR_RNG_HPP_

#include <cstdint>

namespace asbsr {

/// One splitmix64 step: advances state and returns the next output word.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// xoshiro256++ pseudo-random generator, seeded through splitmix64.
///
/// The stream is fully specified by the algorithm, so a given seed produces
/// the same draws on every platform and in every build. Seeds are recorded in
/// experiment manifests, which makes runs replayable bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n); unbiased via bitmask rejection. n >= 1.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard normal deviate (Box-Muller on two uniform draws).
  double normal();

  /// Independent child stream identified by (a, b); used to give every
  /// Monte-Carlo trial its own reproducible stream.
  static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

 private:
  std::uint64_t s_[4];
};

}  // namespace asbsr

#endif  // ASBSR_RNG_HPP_
