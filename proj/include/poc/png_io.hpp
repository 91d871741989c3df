/* Copyright 2026 The POC Tools Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef POC_PNG_IO_HPP
#define POC_PNG_IO_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "poc/raster.hpp"

namespace poc {

// Lossless 8-bit PNG serialization backed by libpng. Inputs on disk are
// converted to the requested layout (palette expanded, alpha stripped);
// writers always emit plain 8-bit RGB or grayscale.

std::vector<std::uint8_t> encode_png_rgb8(const ImageBuffer& image);
ImageBuffer decode_png_rgb8(const std::vector<std::uint8_t>& bytes);

// Single-channel 8-bit. `rows` is width*height bytes, row-major.
std::vector<std::uint8_t> encode_png_gray8(int width, int height,
                                           const std::vector<std::uint8_t>& rows);
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rows;
};
GrayImage decode_png_gray8(const std::vector<std::uint8_t>& bytes);

ImageBuffer read_image_png(const std::filesystem::path& path);
void write_image_png(const std::filesystem::path& path,
                     const ImageBuffer& image);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& bytes);

}  // namespace poc

#endif  // POC_PNG_IO_HPP
