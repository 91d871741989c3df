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

#include "poc/mock_backend.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>

#include "poc/errors.hpp"
#include "poc/rng.hpp"

namespace poc {

void InpaintRequest::validate() const {
  require_same_shape(crop.width(), crop.height(), mask.width(), mask.height(),
                     "inpaint request");
  if (!mask.any())
    throw ShapeError("inpaint request: mask has no repaint pixels");
}

void SegmentRequest::validate() const {
  if (prompt.empty()) throw ShapeError("segment request: empty prompt");
  if (!(detection_threshold > 0.0) || detection_threshold > 1.0)
    throw ShapeError("segment request: detection threshold outside (0, 1]");
}

std::array<std::uint8_t, 3> hsv_to_rgb(double hue_deg, double saturation,
                                       double value) {
  const double h = std::fmod(std::fmod(hue_deg, 360.0) + 360.0, 360.0);
  const double c = value * saturation;
  const double x = c * (1.0 - std::fabs(std::fmod(h / 60.0, 2.0) - 1.0));
  const double m = value - c;
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h / 60.0)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  auto to8 = [](double v) {
    return static_cast<std::uint8_t>(std::lround(v * 255.0));
  };
  return {to8(r + m), to8(g + m), to8(b + m)};
}

std::string mock_effective_prompt(const std::string& prompt) {
  constexpr std::string_view kTemplate = "A good photo of ";
  if (prompt.size() > kTemplate.size() &&
      std::string_view(prompt).substr(0, kTemplate.size()) == kTemplate)
    return prompt.substr(kTemplate.size());
  return prompt;
}

std::array<std::uint8_t, 3> mock_prompt_color(const std::string& prompt) {
  const double hue =
      static_cast<double>(fnv1a(mock_effective_prompt(prompt)) % 360);
  return hsv_to_rgb(hue, 0.8, 0.9);
}

EllipseSpec mock_render_spec(const std::string& prompt, const Region& region,
                             std::uint64_t seed) {
  if (region.w < 1 || region.h < 1)
    throw ShapeError("mock_render_spec: degenerate region");
  std::uint64_t state = fnv1a_u64(seed, fnv1a(mock_effective_prompt(prompt)));
  const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
  const double margin = 0.1 + 0.15 * u;

  EllipseSpec spec;
  spec.center_x = region.x0 + (region.w - 1) / 2.0;
  spec.center_y = region.y0 + (region.h - 1) / 2.0;
  spec.semi_axis_x = (region.w / 2.0) * (1.0 - margin);
  spec.semi_axis_y = (region.h / 2.0) * (1.0 - margin);
  spec.color = mock_prompt_color(prompt);
  return spec;
}

ImageBuffer MockBackend::inpaint(const InpaintRequest& req) {
  req.validate();

  // Bounding box of the repaint area.
  int min_x = req.mask.width(), min_y = req.mask.height();
  int max_x = -1, max_y = -1;
  for (int y = 0; y < req.mask.height(); ++y) {
    for (int x = 0; x < req.mask.width(); ++x) {
      if (!req.mask.get(x, y)) continue;
      min_x = std::min(min_x, x);
      min_y = std::min(min_y, y);
      max_x = std::max(max_x, x);
      max_y = std::max(max_y, y);
    }
  }
  const Region bbox{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
  const EllipseSpec spec = mock_render_spec(req.prompt, bbox, req.seed);

  ImageBuffer out = req.crop;
  for (int y = bbox.y0; y < bbox.y1(); ++y) {
    for (int x = bbox.x0; x < bbox.x1(); ++x) {
      if (!spec.covers(x, y)) continue;
      std::uint8_t* px = out.at(x, y);
      px[0] = spec.color[0];
      px[1] = spec.color[1];
      px[2] = spec.color[2];
    }
  }
  return out;
}

std::vector<Detection> MockBackend::segment(const SegmentRequest& req) {
  req.validate();
  const auto target = mock_prompt_color(req.prompt);
  const int w = req.crop.width();
  const int h = req.crop.height();

  auto matches = [&](int x, int y) {
    const std::uint8_t* px = req.crop.at(x, y);
    for (int c = 0; c < 3; ++c) {
      if (std::abs(static_cast<int>(px[c]) - static_cast<int>(target[c])) >
          kColorTolerance)
        return false;
    }
    return true;
  };

  // 4-connected components over color-matching pixels, scanline order.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
  std::vector<Detection> detections;
  std::size_t largest = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (seen[idx] || !matches(x, y)) continue;

      Detection det;
      det.mask = BinaryMask(w, h);
      det.label = req.prompt;
      std::size_t size = 0;
      std::deque<std::pair<int, int>> frontier{{x, y}};
      seen[idx] = 1;
      while (!frontier.empty()) {
        auto [cx, cy] = frontier.front();
        frontier.pop_front();
        det.mask.set(cx, cy, true);
        ++size;
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dy[4] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const int nx = cx + dx[d];
          const int ny = cy + dy[d];
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
          if (seen[nidx] || !matches(nx, ny)) continue;
          seen[nidx] = 1;
          frontier.emplace_back(nx, ny);
        }
      }
      det.confidence = static_cast<double>(size);  // raw size for now
      largest = std::max(largest, size);
      detections.push_back(std::move(det));
    }
  }

  // Largest component gets the base confidence, smaller ones scale down.
  for (auto& det : detections)
    det.confidence = kBaseConfidence * det.confidence / static_cast<double>(largest);

  std::erase_if(detections, [&](const Detection& d) {
    return d.confidence < req.detection_threshold;
  });
  std::stable_sort(detections.begin(), detections.end(),
                   [](const Detection& a, const Detection& b) {
                     return a.confidence > b.confidence;
                   });
  return detections;
}

}  // namespace poc
