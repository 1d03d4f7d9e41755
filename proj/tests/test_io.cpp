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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "asbsr/config.hpp"
#include "asbsr/errors.hpp"
#include "asbsr/image_io.hpp"
#include "asbsr/text_io.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using namespace asbsr;
using namespace asbsr_test;

namespace {

std::string temp_file(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

void write_bytes(const std::string& path, const unsigned char* data, std::size_t n) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n));
}

// 2x2 8-bit grayscale PNG with pixels {0, 85, 170, 255}.
const unsigned char kGrayPng[] = {
    0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D,
    0x49, 0x48, 0x44, 0x52, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02,
    0x08, 0x00, 0x00, 0x00, 0x00, 0x57, 0xDD, 0x52, 0xF8, 0x00, 0x00, 0x00,
    0x0E, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9C, 0x63, 0x60, 0x08, 0x65, 0x58,
    0xF5, 0x1F, 0x00, 0x03, 0xAD, 0x01, 0xFF, 0x67, 0xFB, 0xCA, 0x09, 0x00,
    0x00, 0x00, 0x00, 0x49, 0x45, 0x4E, 0x44, 0xAE, 0x42, 0x60, 0x82,
};

// 2x2 8-bit RGB PNG: red, green / blue, white.
const unsigned char kRgbPng[] = {
    0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D,
    0x49, 0x48, 0x44, 0x52, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02,
    0x08, 0x02, 0x00, 0x00, 0x00, 0xFD, 0xD4, 0x9A, 0x73, 0x00, 0x00, 0x00,
    0x12, 0x49, 0x44, 0x41, 0x54, 0x78, 0x9C, 0x63, 0xF8, 0xCF, 0xC0, 0xC0,
    0x00, 0xC2, 0x0C, 0xFF, 0x81, 0x00, 0x00, 0x1F, 0xEE, 0x05, 0xFB, 0x0B,
    0xD9, 0x68, 0x8B, 0x00, 0x00, 0x00, 0x00, 0x49, 0x45, 0x4E, 0x44, 0xAE,
    0x42, 0x60, 0x82,
};

}  // namespace

TEST_CASE("PGM write/read round trip is lossless for 8-bit images") {
  Rng rng(501);
  Image img(32, 32, 0.0);
  for (double& v : img.pix) v = static_cast<double>(rng.uniform_below(256));
  const std::string path = temp_file("asbsr_rt.pgm");
  write_image(img, path);
  const Image back = read_image(path);
  CHECK(back.ny == 32);
  CHECK(back.nx == 32);
  CHECK(max_abs_diff(back.pix, img.pix) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("PGM round trip also holds at 16-bit depth") {
  Rng rng(502);
  Image img(7, 5, 0.0);
  for (double& v : img.pix) v = static_cast<double>(rng.uniform_below(65536));
  const std::string path = temp_file("asbsr_rt16.pgm");
  write_image(img, path, 65535);
  const Image back = read_pgm(path);
  CHECK(max_abs_diff(back.pix, img.pix) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("a hand-built minimal PGM parses to the expected pixels") {
  const unsigned char bytes[] = {'P', '5', '\n', '2', ' ', '2', '\n', '2', '5', '5', '\n',
                                 0,   85,  170, 255};
  const std::string path = temp_file("asbsr_hand.pgm");
  write_bytes(path, bytes, sizeof bytes);
  const Image img = read_pgm(path);
  CHECK(img.ny == 2);
  CHECK(img.nx == 2);
  CHECK(img.at(0, 0) == 0.0);
  CHECK(img.at(0, 1) == 85.0);
  CHECK(img.at(1, 0) == 170.0);
  CHECK(img.at(1, 1) == 255.0);
  std::remove(path.c_str());
}

TEST_CASE("PGM comments in the header are skipped") {
  const char header[] = "P5\n# a comment line\n2 1\n# another\n255\n";
  std::string data(header);
  data.push_back('\x07');
  data.push_back('\x09');
  const std::string path = temp_file("asbsr_comment.pgm");
  write_bytes(path, reinterpret_cast<const unsigned char*>(data.data()), data.size());
  const Image img = read_pgm(path);
  CHECK(img.at(0, 0) == 7.0);
  CHECK(img.at(0, 1) == 9.0);
  std::remove(path.c_str());
}

TEST_CASE("a truncated PGM payload names the expected and actual byte counts") {
  const unsigned char bytes[] = {'P', '5', '\n', '2', ' ', '2', '\n', '2', '5', '5', '\n', 0, 85};
  const std::string path = temp_file("asbsr_trunc.pgm");
  write_bytes(path, bytes, sizeof bytes);
  try {
    read_pgm(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("expected 4") != std::string::npos);
    CHECK(msg.find("found 2") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("non-image files are rejected with the right category") {
  const std::string path = temp_file("asbsr_junk.bin");
  const unsigned char junk[] = {1, 2, 3, 4, 5, 6, 7, 8};
  write_bytes(path, junk, sizeof junk);
  CHECK_THROWS_AS(read_image(path), UnsupportedFormatError);
  CHECK_THROWS_AS(read_pgm(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("grayscale PNG decodes to its pixel values") {
  const std::string path = temp_file("asbsr_gray.png");
  write_bytes(path, kGrayPng, sizeof kGrayPng);
  const Image img = read_image(path);
  CHECK(img.ny == 2);
  CHECK(img.nx == 2);
  CHECK(img.at(0, 0) == 0.0);
  CHECK(img.at(0, 1) == 85.0);
  CHECK(img.at(1, 0) == 170.0);
  CHECK(img.at(1, 1) == 255.0);
  std::remove(path.c_str());
}

TEST_CASE("color PNG converts to luma with the 0.299/0.587/0.114 weights") {
  const std::string path = temp_file("asbsr_rgb.png");
  write_bytes(path, kRgbPng, sizeof kRgbPng);
  const Image img = read_png(path);
  CHECK(std::fabs(img.at(0, 0) - 0.299 * 255.0) <= 1.0);  // red
  CHECK(std::fabs(img.at(0, 1) - 0.587 * 255.0) <= 1.0);  // green
  CHECK(std::fabs(img.at(1, 0) - 0.114 * 255.0) <= 1.0);  // blue
  CHECK(img.at(1, 1) == 255.0);                           // white
  std::remove(path.c_str());
}

TEST_CASE("a corrupted PNG stream raises ParseError") {
  unsigned char bad[sizeof kGrayPng];
  std::copy(kGrayPng, kGrayPng + sizeof kGrayPng, bad);
  bad[40] ^= 0xFF;  // corrupt the IDAT payload
  const std::string path = temp_file("asbsr_bad.png");
  write_bytes(path, bad, sizeof bad);
  CHECK_THROWS_AS(read_png(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("mask PGM round trip preserves the support") {
  SpectrumMask mask(9, 4, false);
  mask.set(0, 0);
  mask.set(3, 2);
  mask.set(8, 3);
  const std::string path = temp_file("asbsr_mask.pgm");
  write_mask_pgm(mask, path);
  const SpectrumMask back = read_mask_pgm(path);
  CHECK(back.ny == 9);
  CHECK(back.nx == 4);
  CHECK(back.on == mask.on);
  std::remove(path.c_str());
}

TEST_CASE("format_real is fixed-notation with nine significant digits") {
  CHECK(format_real(0.0) == "0");
  CHECK(format_real(0.25) == "0.25");
  CHECK(format_real(-0.25) == "-0.25");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(123456789.0) == "123456789");
  CHECK(format_real(0.123456789123) == "0.123456789");
  CHECK(format_real(1e-12) == "0.000000000001");
  CHECK(format_real(3.14159265358979) == "3.14159265");
}

TEST_CASE("positions CSV round trip") {
  SampleSet s;
  s.ny = 4;
  s.nx = 6;
  s.samples = {{0, 0, 12.5}, {1, 3, -4.0}, {3, 5, 0.125}};
  const std::string path = temp_file("asbsr_pos.csv");
  write_positions_csv(s, path);
  const SampleSet back = read_positions_csv(path, 4, 6);
  REQUIRE(back.samples.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.samples[i].row == s.samples[i].row);
    CHECK(back.samples[i].col == s.samples[i].col);
    CHECK(back.samples[i].value == s.samples[i].value);
  }
  std::remove(path.c_str());
}

TEST_CASE("report CSV leaves the truth columns empty without a truth image") {
  ReconstructionReport rep;
  rep.iterations_run = 2;
  rep.residual = {0.5, 0.25};
  rep.final_residual = 0.25;
  const std::string path = temp_file("asbsr_rep.csv");
  write_report_csv(rep, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "iteration,residual,rmse,trimmed90");
  std::getline(in, line);
  CHECK(line == "1,0.5,,");
  std::getline(in, line);
  CHECK(line == "2,0.25,,");
  std::remove(path.c_str());
}

TEST_CASE("experiment configs survive a JSON round trip byte for byte") {
  ExperimentConfig cfg;
  cfg.image.synthetic = SyntheticSpec{"natural_noise", 128, 96, 7, 1.5, 0.0, 255.0, true};
  ShapeSpec shape;
  shape.family = ShapeFamily::kPieSector;
  shape.scale = 0.61;
  shape.aspect_ratio = 0.8;
  cfg.mask.shape = shape;
  cfg.mask.target_fraction = 0.3;
  cfg.lattice.kind = LatticeKind::kJittered;
  cfg.lattice.seed = 424242;
  cfg.iter.max_iters = 500;
  cfg.iter.rel_tol = 1e-9;
  cfg.output_dir = "results/run1";

  const std::string text = config_to_json(cfg);
  const ExperimentConfig back = config_from_json(text);
  CHECK(config_to_json(back) == text);
  CHECK(back.mask.target_fraction.has_value());
  CHECK(*back.mask.target_fraction == 0.3);
  CHECK(back.lattice.kind == LatticeKind::kJittered);
  CHECK(back.iter.max_iters == 500);
}

TEST_CASE("configs with zero or two image sources are rejected") {
  CHECK_THROWS_AS(config_from_json("{\"schema\":1,\"image\":{},\"mask\":{\"path\":\"m\"}}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      config_from_json(
          "{\"schema\":2,\"image\":{\"path\":\"x\"},\"mask\":{\"path\":\"m\"}}"),
      std::invalid_argument);
}
