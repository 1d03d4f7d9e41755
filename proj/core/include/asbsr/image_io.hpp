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

#ifndef ASBSR_IMAGE_IO_HPP_
#define ASBSR_IMAGE_IO_HPP_

#include <string>

#include "asbsr/types.hpp"

namespace asbsr {

/// Reads a grayscale image. Dispatches on the magic bytes: binary PGM
/// (P5, 8- or 16-bit) or PNG (8-bit; color is converted to luma with the
/// BT.601 weights 0.299/0.587/0.114). Throws ParseError on malformed files
/// and UnsupportedFormatError on anything else.
Image read_image(const std::string& path);

Image read_pgm(const std::string& path);
Image read_png(const std::string& path);

/// Writes a binary PGM (P5). Values are rounded and clamped to [0, maxval];
/// maxval <= 255 writes one byte per pixel, larger maxval writes big-endian
/// 16-bit words.
void write_image(const Image& image, const std::string& path, int maxval = 255);

/// Mask visualization: PGM with 255 for cells in the mask, 0 outside.
void write_mask_pgm(const SpectrumMask& mask, const std::string& path);

/// Reads a mask from a PGM written by write_mask_pgm (any nonzero pixel
/// counts as set).
SpectrumMask read_mask_pgm(const std::string& path);

}  // namespace asbsr

#endif  // ASBSR_IMAGE_IO_HPP_
