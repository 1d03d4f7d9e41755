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

#include "asbsr/rng.hpp"

#include <cmath>

#include "asbsr/types.hpp"

namespace asbsr {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& w : s_) w = splitmix64_next(sm);
  // xoshiro256++ requires a nonzero state; splitmix64 makes an all-zero
  // expansion astronomically unlikely, but guard anyway.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  detail::require(n >= 1, "uniform_below requires n >= 1");
  if (n == 1) return 0;
  std::uint64_t mask = ~0ULL >> __builtin_clzll((n - 1) | 1);
  // For n a power of two the mask already equals n - 1.
  while (true) {
    std::uint64_t v = next_u64() & mask;
    if (v < n) return v;
  }
}

double Rng::normal() {
  // Box-Muller; consumes two uniforms per pair, second value discarded to
  // keep the draw count per call fixed.
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t sm = seed;
  std::uint64_t h = splitmix64_next(sm);
  sm = h ^ (a + 0x9E3779B97F4A7C15ULL);
  h = splitmix64_next(sm);
  sm = h ^ (b + 0xD1B54A32D192ED03ULL);
  h = splitmix64_next(sm);
  return Rng(h);
}

}  // namespace asbsr
