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

#ifndef POC_MOCK_BACKEND_HPP
#define POC_MOCK_BACKEND_HPP

#include <array>
#include <cstdint>

#include "poc/backend.hpp"

namespace poc {

// Procedural stand-in for the real model servers. Inpainting paints a filled
// ellipse whose color is a pure function of the prompt; segmentation
// recovers objects of that color by connected components. Together they
// close the loop offline: segment(inpaint(req)) returns exactly the pixels
// the renderer produced, which makes the whole pipeline testable bit-exactly
// without any model.

struct EllipseSpec {
  double center_x = 0.0;
  double center_y = 0.0;
  double semi_axis_x = 0.0;
  double semi_axis_y = 0.0;
  std::array<std::uint8_t, 3> color{0, 0, 0};

  bool covers(int x, int y) const {
    const double dx = (x - center_x) / semi_axis_x;
    const double dy = (y - center_y) / semi_axis_y;
    return dx * dx + dy * dy <= 1.0;
  }
};

// HSV (h in degrees, s and v in [0,1]) to 8-bit RGB.
std::array<std::uint8_t, 3> hsv_to_rgb(double hue_deg, double saturation,
                                       double value);

// Inpainting requests carry the templated prompt while segmentation uses
// the bare object prompt; the mock identifies the object by stripping the
// template so both sides agree on what was painted.
std::string mock_effective_prompt(const std::string& prompt);

// Color associated with a prompt: hue = hash(prompt) mod 360, s=0.8, v=0.9.
std::array<std::uint8_t, 3> mock_prompt_color(const std::string& prompt);

// Deterministic ellipse inscribed in `region` with margin fraction
// 0.1 + 0.15*u, u in [0,1) derived from hash(prompt, seed). This is the
// shared oracle for everything the mock renders.
EllipseSpec mock_render_spec(const std::string& prompt, const Region& region,
                             std::uint64_t seed);

class MockBackend : public InpaintBackend, public SegmentationBackend {
 public:
  ImageBuffer inpaint(const InpaintRequest& req) override;
  std::vector<Detection> segment(const SegmentRequest& req) override;

  // Per-channel L-infinity color tolerance for mask recovery.
  static constexpr int kColorTolerance = 12;
  static constexpr double kBaseConfidence = 0.9;
};

// Segmentation backend that never detects anything; used to exercise the
// rejection paths.
class NeverDetectBackend : public SegmentationBackend {
 public:
  std::vector<Detection> segment(const SegmentRequest&) override {
    return {};
  }
};

}  // namespace poc

#endif  // POC_MOCK_BACKEND_HPP
