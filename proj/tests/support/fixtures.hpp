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

#ifndef POC_TESTS_SUPPORT_FIXTURES_HPP
#define POC_TESTS_SUPPORT_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "poc/mock_backend.hpp"
#include "poc/png_io.hpp"
#include "poc/raster.hpp"

namespace poc::testing {

// Deterministic gray gradient. Gray pixels are always far (per-channel
// L-infinity > 12) from every mock prompt color, whose channel spread is
// about 184, so the mock segmenter never fires on the background.
inline ImageBuffer gray_gradient(int w, int h, int phase = 0) {
  ImageBuffer img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto v = static_cast<std::uint8_t>((x * 2 + y * 3 + phase * 17) % 256);
      std::uint8_t* px = img.at(x, y);
      px[0] = px[1] = px[2] = v;
    }
  }
  return img;
}

// Band across the bottom 40% of the image painted in the mock color of
// "the road", so guided placement works end to end against the mock
// segmenter.
inline Region road_band(int w, int h) {
  const int y0 = (h * 3) / 5;
  return Region{0, y0, w, h - y0};
}

inline ImageBuffer road_fixture(int w, int h, int phase = 0) {
  ImageBuffer img = gray_gradient(w, h, phase);
  const auto color = mock_prompt_color("the road");
  const Region band = road_band(w, h);
  for (int y = band.y0; y < band.y1(); ++y) {
    for (int x = band.x0; x < band.x1(); ++x) {
      std::uint8_t* px = img.at(x, y);
      px[0] = color[0];
      px[1] = color[1];
      px[2] = color[2];
    }
  }
  return img;
}

// Writes n fixture images under dir/images as img0.png, img1.png, ...
inline std::vector<std::string> write_fixture_images(
    const std::filesystem::path& dir, int n, int w, int h, bool with_road) {
  std::filesystem::create_directories(dir / "images");
  std::vector<std::string> stems;
  for (int i = 0; i < n; ++i) {
    const std::string stem = "img" + std::to_string(i);
    const ImageBuffer img =
        with_road ? road_fixture(w, h, i) : gray_gradient(w, h, i);
    write_image_png(dir / "images" / (stem + ".png"), img);
    stems.push_back(stem);
  }
  return stems;
}

}  // namespace poc::testing

#endif  // POC_TESTS_SUPPORT_FIXTURES_HPP
