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

#ifndef POC_RASTER_HPP
#define POC_RASTER_HPP

#include <cstdint>
#include <vector>

#include "poc/errors.hpp"

namespace poc {

// All rasters are row-major with the origin at the top-left corner;
// coordinates are (x right, y down).

// Axis-aligned pixel rectangle, top-left inclusive.
struct Region {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;

  bool operator==(const Region&) const = default;

  long long area() const { return static_cast<long long>(w) * h; }
  int x1() const { return x0 + w; }  // exclusive
  int y1() const { return y0 + h; }  // exclusive

  bool contains(const Region& inner) const {
    return inner.x0 >= x0 && inner.y0 >= y0 && inner.x1() <= x1() &&
           inner.y1() <= y1();
  }
  bool contains(int x, int y) const {
    return x >= x0 && x < x1() && y >= y0 && y < y1();
  }
};

// 8-bit RGB image, 3 bytes per pixel.
class ImageBuffer {
 public:
  ImageBuffer() = default;
  ImageBuffer(int width, int height, std::uint8_t fill = 0)
      : width_(width), height_(height) {
    if (width < 1 || height < 1) throw ShapeError("ImageBuffer: empty size");
    pixels_.assign(static_cast<std::size_t>(width) * height * 3, fill);
  }
  ImageBuffer(int width, int height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1) throw ShapeError("ImageBuffer: empty size");
    if (pixels_.size() != static_cast<std::size_t>(width) * height * 3)
      throw ShapeError("ImageBuffer: pixel count does not match dimensions");
  }

  int width() const { return width_; }
  int height() const { return height_; }
  Region bounds() const { return {0, 0, width_, height_}; }

  const std::uint8_t* at(int x, int y) const {
    return pixels_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
  }
  std::uint8_t* at(int x, int y) {
    return pixels_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
  }

  const std::vector<std::uint8_t>& pixels() const { return pixels_; }
  std::vector<std::uint8_t>& pixels() { return pixels_; }

  bool operator==(const ImageBuffer&) const = default;

  // Copies the given rectangle into a new image. The rectangle must lie
  // inside the raster.
  ImageBuffer crop(const Region& r) const;

  // Writes `patch` with its top-left corner at (r.x0, r.y0). Dimensions of
  // `patch` must equal (r.w, r.h) and the rectangle must fit.
  void paste(const Region& r, const ImageBuffer& patch);

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Boolean raster (stored as one byte per pixel).
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, bool fill = false)
      : width_(width), height_(height) {
    if (width < 1 || height < 1) throw ShapeError("BinaryMask: empty size");
    bits_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }

  bool get(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool v) {
    bits_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0;
  }

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::size_t count() const;
  bool any() const { return count() > 0; }

  // Marks every pixel of the rectangle true. Clips against the raster.
  void fill_region(const Region& r);

  bool operator==(const BinaryMask&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Real-valued raster with weights in [0, 1].
class SoftMask {
 public:
  SoftMask() = default;
  SoftMask(int width, int height, double fill = 0.0)
      : width_(width), height_(height) {
    if (width < 1 || height < 1) throw ShapeError("SoftMask: empty size");
    weights_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }

  double get(int x, int y) const {
    return weights_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int x, int y, double v) {
    weights_[static_cast<std::size_t>(y) * width_ + x] = v;
  }

  const std::vector<double>& weights() const { return weights_; }
  std::vector<double>& weights() { return weights_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> weights_;
};

inline void require_same_shape(int w1, int h1, int w2, int h2,
                               const char* what) {
  if (w1 != w2 || h1 != h2)
    throw ShapeError(std::string(what) + ": dimension mismatch");
}

}  // namespace poc

#endif  // POC_RASTER_HPP
