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

#include "poc/raster.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace poc {

ImageBuffer ImageBuffer::crop(const Region& r) const {
  if (!bounds().contains(r) || r.w < 1 || r.h < 1)
    throw ShapeError("crop: rectangle outside image");
  ImageBuffer out(r.w, r.h);
  for (int y = 0; y < r.h; ++y) {
    std::memcpy(out.at(0, y), at(r.x0, r.y0 + y),
                static_cast<std::size_t>(r.w) * 3);
  }
  return out;
}

void ImageBuffer::paste(const Region& r, const ImageBuffer& patch) {
  if (patch.width() != r.w || patch.height() != r.h)
    throw ShapeError("paste: patch does not match rectangle");
  if (!bounds().contains(r)) throw ShapeError("paste: rectangle outside image");
  for (int y = 0; y < r.h; ++y) {
    std::memcpy(at(r.x0, r.y0 + y), patch.at(0, y),
                static_cast<std::size_t>(r.w) * 3);
  }
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(
      std::accumulate(bits_.begin(), bits_.end(), std::size_t{0}));
}

void BinaryMask::fill_region(const Region& r) {
  const int x0 = std::max(0, r.x0);
  const int y0 = std::max(0, r.y0);
  const int x1 = std::min(width_, r.x1());
  const int y1 = std::min(height_, r.y1());
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) set(x, y, true);
}

}  // namespace poc
