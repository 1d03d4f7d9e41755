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

#include "asbsr/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <string>
#include <fstream>
#include <memory>
#include <vector>

#include "asbsr/errors.hpp"

namespace asbsr {

namespace {

std::vector<unsigned char> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnsupportedFormatError("cannot open file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  return bytes;
}

// PGM header tokenizer: skips whitespace and '#' comments, keeping track of
// the byte offset for error reporting.
struct PgmCursor {
  const std::vector<unsigned char>& bytes;
  std::size_t pos = 0;

  void skip_space_and_comments() {
    while (pos < bytes.size()) {
      unsigned char c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(c)) {
        ++pos;
      } else {
        break;
      }
    }
  }

  long parse_uint(const char* what) {
    skip_space_and_comments();
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
      throw ParseError(std::string("expected ") + what + " in PGM header", pos);
    }
    long v = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      v = v * 10 + (bytes[pos] - '0');
      if (v > 1000000000L) throw ParseError(std::string(what) + " is out of range", pos);
      ++pos;
    }
    return v;
  }
};

Image parse_pgm(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError("missing P5 magic", 0);
  }
  PgmCursor cur{bytes, 2};
  const long width = cur.parse_uint("width");
  const long height = cur.parse_uint("height");
  const long maxval = cur.parse_uint("maxval");
  if (width < 1 || height < 1) throw ParseError("PGM dimensions must be positive", cur.pos);
  if (maxval < 1 || maxval > 65535) throw ParseError("PGM maxval must lie in [1, 65535]", cur.pos);
  // Exactly one whitespace byte separates the header from the pixel payload.
  if (cur.pos >= bytes.size() || !std::isspace(bytes[cur.pos])) {
    throw ParseError("expected single whitespace before PGM pixel data", cur.pos);
  }
  ++cur.pos;

  const std::size_t npix = static_cast<std::size_t>(width) * height;
  const int bytes_per = maxval > 255 ? 2 : 1;
  const std::size_t need = npix * bytes_per;
  const std::size_t have = bytes.size() - cur.pos;
  if (have < need) {
    throw ParseError("truncated PGM pixel payload: expected " + std::to_string(need) +
                         " bytes, found " + std::to_string(have),
                     cur.pos + have);
  }

  Image img(static_cast<int>(height), static_cast<int>(width), 0.0);
  const unsigned char* p = bytes.data() + cur.pos;
  if (bytes_per == 1) {
    for (std::size_t i = 0; i < npix; ++i) img.pix[i] = p[i];
  } else {
    for (std::size_t i = 0; i < npix; ++i) {
      img.pix[i] = (static_cast<unsigned>(p[2 * i]) << 8) | p[2 * i + 1];
    }
  }
  return img;
}

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* fp = nullptr;
  ~PngReadCloser() {
    if (png != nullptr) png_destroy_read_struct(&png, info != nullptr ? &info : nullptr, nullptr);
    if (fp != nullptr) std::fclose(fp);
  }
};

}  // namespace

Image read_pgm(const std::string& path) {
  return parse_pgm(read_file_bytes(path));
}

Image read_png(const std::string& path) {
  PngReadCloser h;
  h.fp = std::fopen(path.c_str(), "rb");
  if (h.fp == nullptr) throw UnsupportedFormatError("cannot open file: " + path);

  unsigned char sig[8];
  if (std::fread(sig, 1, 8, h.fp) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    throw ParseError("missing PNG signature", 0);
  }

  h.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (h.png == nullptr) throw std::runtime_error("png_create_read_struct failed");
  h.info = png_create_info_struct(h.png);
  if (h.info == nullptr) throw std::runtime_error("png_create_info_struct failed");

  if (setjmp(png_jmpbuf(h.png))) {
    throw ParseError("malformed PNG stream", 8);
  }
  png_init_io(h.png, h.fp);
  png_set_sig_bytes(h.png, 8);
  png_read_info(h.png, h.info);

  const png_uint_32 width = png_get_image_width(h.png, h.info);
  const png_uint_32 height = png_get_image_height(h.png, h.info);
  const int color = png_get_color_type(h.png, h.info);
  const int depth = png_get_bit_depth(h.png, h.info);

  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(h.png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(h.png);
  if (depth == 16) png_set_strip_16(h.png);
  if ((color & PNG_COLOR_MASK_ALPHA) != 0) png_set_strip_alpha(h.png);
  if (png_get_valid(h.png, h.info, PNG_INFO_tRNS)) {
    png_set_tRNS_to_alpha(h.png);
    png_set_strip_alpha(h.png);
  }
  if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
      color == PNG_COLOR_TYPE_PALETTE) {
    // BT.601 luma weights, in libpng fixed-point units of 1e-5.
    png_set_rgb_to_gray_fixed(h.png, 1 /* silent */, 29900, 58700);
  }
  png_read_update_info(h.png, h.info);

  if (png_get_channels(h.png, h.info) != 1 || png_get_bit_depth(h.png, h.info) != 8) {
    throw UnsupportedFormatError("PNG could not be reduced to 8-bit grayscale");
  }

  Image img(static_cast<int>(height), static_cast<int>(width), 0.0);
  std::vector<unsigned char> rowbuf(width);
  for (png_uint_32 r = 0; r < height; ++r) {
    png_read_row(h.png, rowbuf.data(), nullptr);
    for (png_uint_32 c = 0; c < width; ++c) img.at(static_cast<int>(r), static_cast<int>(c)) = rowbuf[c];
  }
  png_read_end(h.png, nullptr);
  return img;
}

Image read_image(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw UnsupportedFormatError("cannot open file: " + path);
  unsigned char magic[8] = {0};
  probe.read(reinterpret_cast<char*>(magic), 8);
  const std::streamsize got = probe.gcount();
  probe.close();

  if (got >= 2 && magic[0] == 'P' && magic[1] == '5') return read_pgm(path);
  static const unsigned char kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (got >= 8 && std::memcmp(magic, kPngSig, 8) == 0) return read_png(path);
  throw UnsupportedFormatError("unsupported image format (expected binary PGM or PNG): " + path);
}

void write_image(const Image& image, const std::string& path, int maxval) {
  detail::require(image.ny >= 1 && image.nx >= 1, "empty image");
  detail::require(maxval >= 1 && maxval <= 65535, "maxval must lie in [1, 65535]");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "P5\n" << image.nx << " " << image.ny << "\n" << maxval << "\n";
  auto quantize = [maxval](double v) {
    long q = std::lround(v);
    if (q < 0) q = 0;
    if (q > maxval) q = maxval;
    return q;
  };
  if (maxval <= 255) {
    std::vector<unsigned char> buf(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      buf[i] = static_cast<unsigned char>(quantize(image.pix[i]));
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  } else {
    std::vector<unsigned char> buf(image.size() * 2);
    for (std::size_t i = 0; i < image.size(); ++i) {
      const long q = quantize(image.pix[i]);
      buf[2 * i] = static_cast<unsigned char>((q >> 8) & 0xFF);
      buf[2 * i + 1] = static_cast<unsigned char>(q & 0xFF);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_mask_pgm(const SpectrumMask& mask, const std::string& path) {
  detail::require(mask.ny >= 1 && mask.nx >= 1, "empty mask");
  Image img(mask.ny, mask.nx, 0.0);
  for (std::size_t i = 0; i < mask.on.size(); ++i) img.pix[i] = mask.on[i] ? 255.0 : 0.0;
  write_image(img, path, 255);
}

SpectrumMask read_mask_pgm(const std::string& path) {
  const Image img = read_pgm(path);
  SpectrumMask mask(img.ny, img.nx, false);
  for (std::size_t i = 0; i < img.size(); ++i) mask.on[i] = img.pix[i] != 0.0 ? 1 : 0;
  return mask;
}

}  // namespace asbsr
