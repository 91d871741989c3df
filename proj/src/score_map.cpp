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

#include "poc/score_map.hpp"

#include <bit>
#include <cstring>

#include "poc/errors.hpp"
#include "poc/png_io.hpp"

static_assert(std::endian::native == std::endian::little,
              "score map I/O assumes a little-endian host");

namespace poc {

namespace {
constexpr char kMagic[8] = {'P', 'O', 'C', 'S', 'C', 'O', 'R', 'E'};
}

ScoreMap make_score_map(int width, int height, float fill) {
  if (width < 1 || height < 1) throw ShapeError("score map: empty size");
  ScoreMap m;
  m.width = width;
  m.height = height;
  m.scores.assign(static_cast<std::size_t>(width) * height, fill);
  return m;
}

std::vector<std::uint8_t> encode_score_map(const ScoreMap& map) {
  if (map.scores.size() != static_cast<std::size_t>(map.width) * map.height)
    throw ShapeError("score map: buffer does not match dimensions");
  std::vector<std::uint8_t> out(16 + map.scores.size() * 4);
  std::memcpy(out.data(), kMagic, 8);
  const std::uint32_t w = static_cast<std::uint32_t>(map.width);
  const std::uint32_t h = static_cast<std::uint32_t>(map.height);
  std::memcpy(out.data() + 8, &w, 4);
  std::memcpy(out.data() + 12, &h, 4);
  std::memcpy(out.data() + 16, map.scores.data(), map.scores.size() * 4);
  return out;
}

ScoreMap decode_score_map(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 16 || std::memcmp(bytes.data(), kMagic, 8) != 0)
    throw IoError("score map: missing POCSCORE header");
  std::uint32_t w = 0, h = 0;
  std::memcpy(&w, bytes.data() + 8, 4);
  std::memcpy(&h, bytes.data() + 12, 4);
  const std::size_t n = static_cast<std::size_t>(w) * h;
  if (w == 0 || h == 0 || bytes.size() != 16 + n * 4)
    throw IoError("score map: truncated or inconsistent payload");
  ScoreMap m;
  m.width = static_cast<int>(w);
  m.height = static_cast<int>(h);
  m.scores.resize(n);
  std::memcpy(m.scores.data(), bytes.data() + 16, n * 4);
  return m;
}

ScoreMap read_score_map(const std::filesystem::path& path) {
  return decode_score_map(read_file_bytes(path));
}

void write_score_map(const std::filesystem::path& path, const ScoreMap& map) {
  write_file_bytes(path, encode_score_map(map));
}

}  // namespace poc
