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

#ifndef ASBSR_CONFIG_HPP_
#define ASBSR_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "asbsr/lattices.hpp"
#include "asbsr/reconstruction.hpp"
#include "asbsr/shapes.hpp"

namespace asbsr {

/// Synthetic test image: noise with a prescribed spectral envelope.
/// kind "natural_noise" decays coefficient magnitudes as
/// 1/(1+radius)^spectral_decay; "white_noise" keeps them flat. When
/// bound_to_mask is set the spectrum is confined to the run's mask before
/// the image is rendered, producing an exactly bounded-spectrum ground
/// truth. Pixel values are rescaled linearly to [lo, hi].
struct SyntheticSpec {
  std::string kind = "natural_noise";
  int ny = 0;
  int nx = 0;
  std::uint64_t seed = 0;
  double spectral_decay = 1.5;
  double lo = 0.0;
  double hi = 255.0;
  bool bound_to_mask = true;
};

/// Exactly one of path / synthetic.
struct ImageSource {
  std::optional<std::string> path;
  std::optional<SyntheticSpec> synthetic;
};

/// Exactly one of path / shape. A shape with target_fraction set is fitted
/// to that budget; otherwise its explicit scale is used as given.
struct MaskSource {
  std::optional<std::string> path;
  std::optional<ShapeSpec> shape;
  std::optional<double> target_fraction;
};

struct LatticeConfig {
  LatticeKind kind = LatticeKind::kJittered;
  std::uint64_t seed = 0;
  std::optional<long long> m;  // defaults to the mask cell count
};

struct ExperimentConfig {
  int schema = 1;
  ImageSource image;
  MaskSource mask;
  std::string method = "iterative";  // iterative | direct
  LatticeConfig lattice;
  IterConfig iter;
  std::string output_dir = "out";
  bool emit_svg = false;
};

ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig config_from_json_file(const std::string& path);
std::string config_to_json(const ExperimentConfig& cfg);

/// Generates the synthetic image (before any mask bounding).
Image render_synthetic(const SyntheticSpec& spec);

}  // namespace asbsr

#endif  // ASBSR_CONFIG_HPP_
