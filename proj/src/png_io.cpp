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

#include "poc/png_io.hpp"

#include <png.h>

#include <cstring>
#include <fstream>

#include "poc/errors.hpp"

namespace poc {
namespace {

std::vector<std::uint8_t> encode_with_format(int width, int height,
                                             const std::uint8_t* data,
                                             std::uint32_t format) {
  png_image img;
  std::memset(&img, 0, sizeof(img));
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(width);
  img.height = static_cast<png_uint_32>(height);
  img.format = format;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&img, nullptr, &size, 0, data, 0, nullptr))
    throw IoError(std::string("png encode (size pass): ") + img.message);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&img, out.data(), &size, 0, data, 0, nullptr))
    throw IoError(std::string("png encode: ") + img.message);
  out.resize(size);
  return out;
}

}  // namespace

std::vector<std::uint8_t> encode_png_rgb8(const ImageBuffer& image) {
  return encode_with_format(image.width(), image.height(),
                            image.pixels().data(), PNG_FORMAT_RGB);
}

ImageBuffer decode_png_rgb8(const std::vector<std::uint8_t>& bytes) {
  png_image img;
  std::memset(&img, 0, sizeof(img));
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size()))
    throw IoError(std::string("png decode: ") + img.message);
  img.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, pixels.data(), 0, nullptr))
    throw IoError(std::string("png decode: ") + img.message);
  return ImageBuffer(static_cast<int>(img.width), static_cast<int>(img.height),
                     std::move(pixels));
}

std::vector<std::uint8_t> encode_png_gray8(
    int width, int height, const std::vector<std::uint8_t>& rows) {
  if (rows.size() != static_cast<std::size_t>(width) * height)
    throw ShapeError("encode_png_gray8: row buffer does not match dimensions");
  return encode_with_format(width, height, rows.data(), PNG_FORMAT_GRAY);
}

GrayImage decode_png_gray8(const std::vector<std::uint8_t>& bytes) {
  png_image img;
  std::memset(&img, 0, sizeof(img));
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size()))
    throw IoError(std::string("png decode: ") + img.message);
  // Refuse color inputs rather than silently averaging them to gray;
  // label maps and masks must be single-channel on disk.
  if (img.format & (PNG_FORMAT_FLAG_COLOR | PNG_FORMAT_FLAG_COLORMAP)) {
    png_image_free(&img);
    throw IoError("png decode: expected a single-channel image");
  }
  img.format = PNG_FORMAT_GRAY;
  GrayImage out;
  out.width = static_cast<int>(img.width);
  out.height = static_cast<int>(img.height);
  out.rows.resize(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, out.rows.data(), 0, nullptr))
    throw IoError(std::string("png decode: ") + img.message);
  return out;
}

ImageBuffer read_image_png(const std::filesystem::path& path) {
  return decode_png_rgb8(read_file_bytes(path));
}

void write_image_png(const std::filesystem::path& path,
                     const ImageBuffer& image) {
  write_file_bytes(path, encode_png_rgb8(image));
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace poc
