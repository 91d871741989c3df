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

#include <doctest.h>

#include "poc/base64.hpp"
#include "poc/labels.hpp"
#include "poc/png_io.hpp"
#include "poc/raster.hpp"
#include "poc/rng.hpp"
#include "poc/score_map.hpp"
#include "support/fixtures.hpp"

using namespace poc;

TEST_CASE("image buffer validates dimensions") {
  CHECK_THROWS_AS(ImageBuffer(0, 4), ShapeError);
  CHECK_THROWS_AS(ImageBuffer(4, 4, std::vector<std::uint8_t>(5)), ShapeError);
  const ImageBuffer img(3, 2, 7);
  CHECK(img.pixels().size() == 3u * 2u * 3u);
}

TEST_CASE("crop and paste round trip") {
  const ImageBuffer img = testing::gray_gradient(32, 24);
  const Region r{5, 7, 10, 8};
  const ImageBuffer patch = img.crop(r);
  CHECK(patch.width() == 10);
  CHECK(patch.height() == 8);
  CHECK(patch.at(0, 0)[0] == img.at(5, 7)[0]);

  ImageBuffer copy = img;
  copy.paste(r, patch);
  CHECK(copy == img);

  CHECK_THROWS_AS(img.crop(Region{30, 0, 10, 5}), ShapeError);
  ImageBuffer small(4, 4);
  CHECK_THROWS_AS(copy.paste(Region{0, 0, 10, 8}, small), ShapeError);
}

TEST_CASE("binary mask fill and count") {
  BinaryMask m(10, 10);
  CHECK(m.count() == 0);
  CHECK_FALSE(m.any());
  m.fill_region(Region{2, 3, 4, 2});
  CHECK(m.count() == 8);
  CHECK(m.get(2, 3));
  CHECK(m.get(5, 4));
  CHECK_FALSE(m.get(6, 3));
  m.fill_region(Region{8, 8, 10, 10});  // clipped
  CHECK(m.count() == 8 + 4);
}

TEST_CASE("png rgb8 round trip is lossless") {
  const ImageBuffer img = testing::road_fixture(33, 21, 3);
  const auto bytes = encode_png_rgb8(img);
  const ImageBuffer back = decode_png_rgb8(bytes);
  CHECK(back == img);
}

TEST_CASE("png gray8 round trip is lossless") {
  std::vector<std::uint8_t> rows(19 * 7);
  SeedStream s(11);
  for (auto& v : rows) v = static_cast<std::uint8_t>(s.next_in_range(0, 255));
  const auto bytes = encode_png_gray8(19, 7, rows);
  const GrayImage g = decode_png_gray8(bytes);
  CHECK(g.width == 19);
  CHECK(g.height == 7);
  CHECK(g.rows == rows);
}

TEST_CASE("color PNGs are refused where single-channel data is expected") {
  const ImageBuffer color = testing::road_fixture(8, 8);
  const auto bytes = encode_png_rgb8(color);
  CHECK_THROWS_AS(decode_png_gray8(bytes), IoError);
  CHECK_THROWS_AS(decode_label_map(bytes), IoError);
}

TEST_CASE("label map encode/decode round trips bit-exact") {
  const LabelConvention conv = LabelConvention::anomaly_test_default();

  SUBCASE("all-ignore map") {
    LabelMap all_ignore(6, 5, conv.ignore_id);
    const LabelMap back = decode_label_map(encode_label_map(all_ignore, conv));
    CHECK(back == all_ignore);
  }

  SUBCASE("mixed ids round trip") {
    LabelMap m(8, 8, 0);
    m.set(1, 1, conv.ood_id);
    m.set(7, 7, conv.ignore_id);
    m.set(3, 2, conv.ood_id);
    const LabelMap back = decode_label_map(encode_label_map(m, conv));
    CHECK(back == m);
  }

  SUBCASE("out-of-range value is rejected") {
    LabelMap m(4, 4, 0);
    m.set(0, 0, 300);
    CHECK_THROWS_AS(encode_label_map(m, conv), LabelValueError);
  }

  SUBCASE("out-of-convention value is rejected") {
    LabelMap m(4, 4, 0);
    m.set(0, 0, 7);
    CHECK_THROWS_AS(encode_label_map(m, conv), LabelValueError);
  }
}

TEST_CASE("label convention knows its ids") {
  LabelConvention conv = LabelConvention::extend_default({"cow", "sheep"});
  CHECK(conv.new_class_ids.at("cow") == 19);
  CHECK(conv.new_class_ids.at("sheep") == 20);
  CHECK(conv.knows(19));
  CHECK(conv.assignable(19));
  CHECK(conv.knows(255));
  CHECK_FALSE(conv.assignable(255));
  CHECK_FALSE(conv.knows(77));
  conv.new_class_ids["bad"] = 255;
  CHECK_THROWS_AS(conv.validate(), ConfigError);
}

TEST_CASE("score map round trips and rejects bad headers") {
  ScoreMap m = make_score_map(5, 4);
  SeedStream s(1);
  for (auto& v : m.scores) v = static_cast<float>(s.next_double());
  const auto bytes = encode_score_map(m);
  CHECK(bytes.size() == 16 + 5 * 4 * 4);
  const ScoreMap back = decode_score_map(bytes);
  CHECK(back.width == 5);
  CHECK(back.height == 4);
  CHECK(back.scores == m.scores);

  auto bad = bytes;
  bad[0] = 'X';
  CHECK_THROWS_AS(decode_score_map(bad), IoError);
  auto truncated = bytes;
  truncated.resize(truncated.size() - 3);
  CHECK_THROWS_AS(decode_score_map(truncated), IoError);
}

TEST_CASE("base64 round trips and rejects malformed input") {
  SeedStream s(5);
  for (const std::size_t n : {0u, 1u, 2u, 3u, 17u, 100u}) {
    std::vector<std::uint8_t> data(n);
    for (auto& b : data) b = static_cast<std::uint8_t>(s.next_in_range(0, 255));
    CHECK(base64_decode(base64_encode(data)) == data);
  }
  CHECK(base64_encode({'f', 'o', 'o'}) == "Zm9v");
  CHECK(base64_encode({'f', 'o'}) == "Zm8=");
  CHECK_THROWS_AS(base64_decode("abc"), IoError);
  CHECK_THROWS_AS(base64_decode("a=bc"), IoError);
  CHECK_THROWS_AS(base64_decode("ab!c"), IoError);
}
