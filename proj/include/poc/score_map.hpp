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

#ifndef POC_SCORE_MAP_HPP
#define POC_SCORE_MAP_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

namespace poc {

// Per-pixel anomaly score raster. On-disk format: the 8-byte magic
// "POCSCORE", width and height as 32-bit unsigned little-endian integers,
// then width*height 32-bit little-endian floats row-major.
struct ScoreMap {
  int width = 0;
  int height = 0;
  std::vector<float> scores;

  float get(int x, int y) const {
    return scores[static_cast<std::size_t>(y) * width + x];
  }
  void set(int x, int y, float v) {
    scores[static_cast<std::size_t>(y) * width + x] = v;
  }
};

ScoreMap make_score_map(int width, int height, float fill = 0.0f);

std::vector<std::uint8_t> encode_score_map(const ScoreMap& map);
ScoreMap decode_score_map(const std::vector<std::uint8_t>& bytes);

ScoreMap read_score_map(const std::filesystem::path& path);
void write_score_map(const std::filesystem::path& path, const ScoreMap& map);

}  // namespace poc

#endif  // POC_SCORE_MAP_HPP
