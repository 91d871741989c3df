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

#include <vector>

#include "poc/mock_backend.hpp"
#include "poc/placement.hpp"
#include "poc/prompt.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace poc;

TEST_CASE("unconstrained location yields the all-true mask with no backend call") {
  struct Counting : SegmentationBackend {
    int calls = 0;
    std::vector<Detection> segment(const SegmentRequest&) override {
      ++calls;
      return {};
    }
  } backend;
  const ImageBuffer img = testing::gray_gradient(32, 16);
  PlacementConfig cfg;

  const BinaryMask m = valid_area(img, kUnconstrainedLocation, backend, cfg);
  CHECK(m.count() == 32u * 16u);
  CHECK(backend.calls == 0);

  cfg.placement_mode = PlacementMode::kRandom;
  const BinaryMask r = valid_area(img, "the road", backend, cfg);
  CHECK(r.count() == 32u * 16u);
  CHECK(backend.calls == 0);
}

TEST_CASE("no detections yield the all-false mask") {
  NeverDetectBackend backend;
  const ImageBuffer img = testing::gray_gradient(16, 16);
  const BinaryMask m = valid_area(img, "the road", backend, PlacementConfig{});
  CHECK(m.count() == 0);
}

TEST_CASE("a rectangle detection becomes exactly that rectangle") {
  // The fixture paints a road-colored band; the mock segmenter must return
  // it as one component.
  MockBackend backend;
  const int w = 64, h = 48;
  const ImageBuffer img = testing::road_fixture(w, h);
  const Region band = testing::road_band(w, h);
  const BinaryMask m = valid_area(img, "the road", backend, PlacementConfig{});
  CHECK(m.count() == band.area());
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      CHECK(m.get(x, y) == band.contains(x, y));
}

TEST_CASE("fixed seed reproduces the placement outcome bit for bit") {
  const BinaryMask valid(128, 128, true);
  PlacementConfig cfg;
  cfg.min_frac = 0.25;
  cfg.max_frac = 0.25;
  const SampleRng rng(7, "img", 0);
  const PlacementOutcome a = sample_region(valid, cfg, rng);
  const PlacementOutcome b = sample_region(valid, cfg, rng);
  CHECK(a == b);
  CHECK(a.region.w == 32);  // 0.25 * 128
  CHECK(a.region.h == 32);
  const PlacementOutcome c = sample_region(valid, cfg, SampleRng(8, "img", 0));
  CHECK(a != c);
}

TEST_CASE("all-false valid mask raises NoValidRegion") {
  const BinaryMask valid(64, 64, false);
  CHECK_THROWS_AS(sample_region(valid, PlacementConfig{}, SampleRng(1, "x", 0)),
                  NoValidRegion);
}

TEST_CASE("region and crop nest inside the image") {
  PlacementConfig cfg;
  cfg.crop_multiple = 16;
  SeedStream misc(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int w = 40 + static_cast<int>(misc.next_in_range(0, 200));
    const int h = 40 + static_cast<int>(misc.next_in_range(0, 200));
    BinaryMask valid(w, h, true);
    const SampleRng rng(trial, "prop", 0);
    const PlacementOutcome out = sample_region(valid, cfg, rng);

    const Region image{0, 0, w, h};
    CHECK(out.crop.contains(out.region));
    CHECK(image.contains(out.crop));
    CHECK(out.region.contains(out.center_x, out.center_y));
    CHECK(out.crop.w == out.crop.h);
    // Stride only bends at the image boundary.
    if (out.crop.w % cfg.crop_multiple != 0) {
      const int largest_multiple =
          (std::min(w, h) / cfg.crop_multiple) * cfg.crop_multiple;
      CHECK(out.crop.w >= largest_multiple);
    }
  }
}

TEST_CASE("bottom edge rests on the valid area in guided mode") {
  // Valid area: bottom half. Every accepted region's bottom edge overlaps it
  // by at least the configured fraction.
  const int w = 96, h = 96;
  BinaryMask valid(w, h);
  valid.fill_region(Region{0, h / 2, w, h - h / 2});
  PlacementConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    const PlacementOutcome out =
        sample_region(valid, cfg, SampleRng(trial, "edge", 0));
    CHECK(valid.get(out.center_x, out.center_y));
    int on = 0;
    const int by = out.region.y1() - 1;
    for (int x = out.region.x0; x < out.region.x1(); ++x)
      on += valid.get(x, by);
    CHECK(static_cast<double>(on) >=
          cfg.overlap_threshold * out.region.w - 1e-9);
  }
}

TEST_CASE("centers are uniform over a half-image support") {
  const int w = 256, h = 256;
  BinaryMask valid(w, h);
  valid.fill_region(Region{0, h / 2, w, h / 2});
  PlacementConfig cfg;
  cfg.min_frac = 0.05;
  cfg.max_frac = 0.15;

  // Bin the sampled centers over the support and chi-square test against
  // uniformity.
  const int gx = 16, gy = 8;
  std::vector<int> cells(gx * gy, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const PlacementOutcome out =
        sample_region(valid, cfg, SampleRng(12345, "chi" + std::to_string(i), 0));
    const int cx = out.center_x * gx / w;
    const int cy = (out.center_y - h / 2) * gy / (h / 2);
    cells[cy * gx + cx]++;
  }
  const double expected = static_cast<double>(n) / (gx * gy);
  double chi2 = 0.0;
  for (int c : cells) {
    const double d = c - expected;
    chi2 += d * d / expected;
  }
  const double critical = testing::chi2_quantile(0.99, gx * gy - 1);
  CHECK(chi2 < critical);
}

TEST_CASE("derive_crop snaps to the stride and falls back at the boundary") {
  CHECK(derive_crop(Region{10, 10, 20, 30}, 512, 512, 64) ==
        Region{derive_crop(Region{10, 10, 20, 30}, 512, 512, 64).x0,
               derive_crop(Region{10, 10, 20, 30}, 512, 512, 64).y0, 64, 64});
  // Region larger than the largest multiple: containment wins.
  const Region crop = derive_crop(Region{0, 0, 90, 90}, 100, 100, 64);
  CHECK(crop.w == 100);
  CHECK(crop.contains(Region{0, 0, 90, 90}));
}

TEST_CASE("placement config validation") {
  PlacementConfig cfg;
  cfg.min_frac = 0.5;
  cfg.max_frac = 0.4;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = PlacementConfig{};
  cfg.max_attempts = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(placement_mode_from_string("sideways"), ConfigError);
}
