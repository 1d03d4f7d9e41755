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

#include "asbsr/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "asbsr/dct.hpp"
#include "asbsr/rng.hpp"
#include "json.hpp"

namespace asbsr {

namespace {

using nlohmann::json;

json shape_to_json(const ShapeSpec& s) {
  json j;
  j["family"] = to_string(s.family);
  j["scale"] = s.scale;
  j["aspect_ratio"] = s.aspect_ratio;
  if (s.family == ShapeFamily::kPieSector) {
    j["angle_lo_deg"] = s.angle_lo_deg;
    j["angle_hi_deg"] = s.angle_hi_deg;
  }
  return j;
}

ShapeSpec shape_from_json(const json& j) {
  ShapeSpec s;
  s.family = shape_family_from_string(j.at("family").get<std::string>());
  s.scale = j.value("scale", 1.0);
  s.aspect_ratio = j.value("aspect_ratio", 1.0);
  s.angle_lo_deg = j.value("angle_lo_deg", 0.0);
  s.angle_hi_deg = j.value("angle_hi_deg", 90.0);
  return s;
}

json synthetic_to_json(const SyntheticSpec& s) {
  json j;
  j["kind"] = s.kind;
  j["ny"] = s.ny;
  j["nx"] = s.nx;
  j["seed"] = s.seed;
  j["spectral_decay"] = s.spectral_decay;
  j["lo"] = s.lo;
  j["hi"] = s.hi;
  j["bound_to_mask"] = s.bound_to_mask;
  return j;
}

SyntheticSpec synthetic_from_json(const json& j) {
  SyntheticSpec s;
  s.kind = j.value("kind", std::string("natural_noise"));
  if (s.kind != "natural_noise" && s.kind != "white_noise") {
    throw std::invalid_argument("unknown synthetic kind: " + s.kind);
  }
  s.ny = j.at("ny").get<int>();
  s.nx = j.at("nx").get<int>();
  s.seed = j.value("seed", std::uint64_t{0});
  s.spectral_decay = j.value("spectral_decay", 1.5);
  s.lo = j.value("lo", 0.0);
  s.hi = j.value("hi", 255.0);
  s.bound_to_mask = j.value("bound_to_mask", true);
  return s;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    ExperimentConfig cfg;
    cfg.schema = j.value("schema", 1);
    if (cfg.schema != 1) {
      throw std::invalid_argument("unsupported config schema " + std::to_string(cfg.schema));
    }

    const json& ji = j.at("image");
    if (ji.contains("path")) cfg.image.path = ji.at("path").get<std::string>();
    if (ji.contains("synthetic")) cfg.image.synthetic = synthetic_from_json(ji.at("synthetic"));
    if (cfg.image.path.has_value() == cfg.image.synthetic.has_value()) {
      throw std::invalid_argument("config needs exactly one image source (path or synthetic)");
    }

    const json& jm = j.at("mask");
    if (jm.contains("path")) cfg.mask.path = jm.at("path").get<std::string>();
    if (jm.contains("shape")) {
      cfg.mask.shape = shape_from_json(jm.at("shape"));
      if (jm.at("shape").contains("target_fraction")) {
        cfg.mask.target_fraction = jm.at("shape").at("target_fraction").get<double>();
      }
    }
    if (cfg.mask.path.has_value() == cfg.mask.shape.has_value()) {
      throw std::invalid_argument("config needs exactly one mask source (path or shape)");
    }

    cfg.method = j.value("method", std::string("iterative"));
    if (cfg.method != "iterative" && cfg.method != "direct") {
      throw std::invalid_argument("method must be 'iterative' or 'direct'");
    }

    if (j.contains("lattice")) {
      const json& jl = j.at("lattice");
      cfg.lattice.kind = lattice_kind_from_string(jl.value("kind", std::string("jittered")));
      cfg.lattice.seed = jl.value("seed", std::uint64_t{0});
      if (jl.contains("m")) cfg.lattice.m = jl.at("m").get<long long>();
    }

    if (j.contains("iter")) {
      const json& jt = j.at("iter");
      cfg.iter.max_iters = jt.value("max_iters", 1000);
      cfg.iter.rel_tol = jt.value("rel_tol", 1e-8);
      cfg.iter.init = init_method_from_string(jt.value("init", std::string("nearest_neighbor")));
    }

    cfg.output_dir = j.value("output_dir", std::string("out"));
    cfg.emit_svg = j.value("emit_svg", false);
    return cfg;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
}

ExperimentConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["schema"] = cfg.schema;
  if (cfg.image.path) {
    j["image"]["path"] = *cfg.image.path;
  } else if (cfg.image.synthetic) {
    j["image"]["synthetic"] = synthetic_to_json(*cfg.image.synthetic);
  }
  if (cfg.mask.path) {
    j["mask"]["path"] = *cfg.mask.path;
  } else if (cfg.mask.shape) {
    j["mask"]["shape"] = shape_to_json(*cfg.mask.shape);
    if (cfg.mask.target_fraction) {
      j["mask"]["shape"]["target_fraction"] = *cfg.mask.target_fraction;
    }
  }
  j["method"] = cfg.method;
  j["lattice"]["kind"] = to_string(cfg.lattice.kind);
  j["lattice"]["seed"] = cfg.lattice.seed;
  if (cfg.lattice.m) j["lattice"]["m"] = *cfg.lattice.m;
  j["iter"]["max_iters"] = cfg.iter.max_iters;
  j["iter"]["rel_tol"] = cfg.iter.rel_tol;
  j["iter"]["init"] = to_string(cfg.iter.init);
  j["output_dir"] = cfg.output_dir;
  j["emit_svg"] = cfg.emit_svg;
  return j.dump(2) + "\n";
}

Image render_synthetic(const SyntheticSpec& spec) {
  detail::require(spec.ny >= 1 && spec.nx >= 1, "synthetic dimensions must be at least 1x1");
  detail::require(spec.hi > spec.lo, "synthetic range must satisfy hi > lo");

  Rng rng(spec.seed);
  Spectrum2D spectrum(spec.ny, spec.nx, 0.0);
  const bool shaped = spec.kind == "natural_noise";
  for (int u = 0; u < spec.ny; ++u) {
    for (int v = 0; v < spec.nx; ++v) {
      double g = rng.normal();
      if (shaped) {
        // Radial decay of the coefficient envelope, as in natural scenes.
        const double ru = static_cast<double>(u) / spec.ny;
        const double rv = static_cast<double>(v) / spec.nx;
        const double radius = std::sqrt(ru * ru + rv * rv);
        g *= std::pow(1.0 + 8.0 * radius, -spec.spectral_decay * 2.0);
      }
      spectrum.at(u, v) = g;
    }
  }
  Image img = dct2_inverse(spectrum);

  double mn = img.pix[0], mx = img.pix[0];
  for (double v : img.pix) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  const double span = mx > mn ? mx - mn : 1.0;
  for (double& v : img.pix) v = spec.lo + (v - mn) / span * (spec.hi - spec.lo);
  return img;
}

}  // namespace asbsr
