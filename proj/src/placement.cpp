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

#include "poc/placement.hpp"

#include <algorithm>
#include <cmath>

#include "poc/errors.hpp"
#include "poc/prompt.hpp"

namespace poc {

std::string to_string(PlacementMode mode) {
  return mode == PlacementMode::kGuided ? "guided" : "random";
}

PlacementMode placement_mode_from_string(const std::string& s) {
  if (s == "guided") return PlacementMode::kGuided;
  if (s == "random") return PlacementMode::kRandom;
  throw ConfigError("unknown placement mode '" + s + "'");
}

void PlacementConfig::validate() const {
  if (!(min_frac > 0.0) || min_frac > 1.0 || !(max_frac > 0.0) ||
      max_frac > 1.0 || min_frac > max_frac)
    throw ConfigError("placement: need 0 < min_frac <= max_frac <= 1");
  if (max_attempts < 1) throw ConfigError("placement: max_attempts >= 1");
  if (!(overlap_threshold > 0.0) || overlap_threshold > 1.0)
    throw ConfigError("placement: overlap_threshold in (0, 1]");
  if (crop_multiple < 1) throw ConfigError("placement: crop_multiple >= 1");
}

BinaryMask valid_area(const ImageBuffer& image,
                      const std::string& location_prompt,
                      SegmentationBackend& backend, const PlacementConfig& cfg,
                      double detection_threshold) {
  if (location_prompt.empty())
    throw PromptError("location prompt must be non-empty");
  if (cfg.placement_mode == PlacementMode::kRandom ||
      location_prompt == kUnconstrainedLocation)
    return BinaryMask(image.width(), image.height(), true);

  SegmentRequest req;
  req.crop = image;
  req.prompt = location_prompt;
  req.detection_threshold = detection_threshold;
  const std::vector<Detection> detections = backend.segment(req);

  BinaryMask mask(image.width(), image.height(), false);
  for (const auto& det : detections) {
    require_same_shape(det.mask.width(), det.mask.height(), image.width(),
                       image.height(), "valid_area detection");
    for (int y = 0; y < mask.height(); ++y)
      for (int x = 0; x < mask.width(); ++x)
        if (det.mask.get(x, y)) mask.set(x, y, true);
  }
  return mask;
}

Region derive_crop(const Region& region, int image_width, int image_height,
                   int crop_multiple) {
  const int need = std::max(region.w, region.h);
  const int max_side = std::min(image_width, image_height);

  int side = ((need + crop_multiple - 1) / crop_multiple) * crop_multiple;
  if (side > max_side) {
    side = (max_side / crop_multiple) * crop_multiple;
    if (side < need) side = max_side;  // containment beats stride
  }

  const double rcx = region.x0 + (region.w - 1) / 2.0;
  const double rcy = region.y0 + (region.h - 1) / 2.0;
  int cx0 = static_cast<int>(std::lround(rcx - (side - 1) / 2.0));
  int cy0 = static_cast<int>(std::lround(rcy - (side - 1) / 2.0));
  // Stay inside the image while still containing the region. Both intervals
  // are non-empty because side >= region side and the region fits the image.
  cx0 = std::clamp(cx0, std::max(0, region.x1() - side),
                   std::min(image_width - side, region.x0));
  cy0 = std::clamp(cy0, std::max(0, region.y1() - side),
                   std::min(image_height - side, region.y0));
  return {cx0, cy0, side, side};
}

PlacementOutcome sample_region(const BinaryMask& valid,
                               const PlacementConfig& cfg,
                               const SampleRng& rng, int first_attempt) {
  cfg.validate();
  const int w = valid.width();
  const int h = valid.height();

  // Support of the valid mask; the sampled center is uniform over it.
  std::vector<std::uint32_t> support;
  support.reserve(valid.count());
  for (std::size_t i = 0; i < valid.bits().size(); ++i)
    if (valid.bits()[i]) support.push_back(static_cast<std::uint32_t>(i));
  if (support.empty())
    throw NoValidRegion("valid-area mask has no true pixels");

  const double side = static_cast<double>(std::min(w, h));
  for (int attempt = first_attempt; attempt < cfg.max_attempts; ++attempt) {
    SeedStream stream = rng.stream("region", static_cast<std::uint64_t>(attempt));

    int rw = static_cast<int>(
        std::lround(stream.next_real(cfg.min_frac, cfg.max_frac) * side));
    int rh = static_cast<int>(
        std::lround(stream.next_real(cfg.min_frac, cfg.max_frac) * side));
    rw = std::clamp(rw, 1, w);
    rh = std::clamp(rh, 1, h);

    const std::uint32_t pick = static_cast<std::uint32_t>(
        stream.next_in_range(0, support.size() - 1));
    const int cx = static_cast<int>(support[pick] % w);
    const int cy = static_cast<int>(support[pick] / w);

    Region region{cx - rw / 2, cy - rh / 2, rw, rh};
    region.x0 = std::clamp(region.x0, 0, w - rw);
    region.y0 = std::clamp(region.y0, 0, h - rh);

    // Objects stand on their bottom edge; demand it rests on valid ground.
    const int bottom = region.y1() - 1;
    int on_valid = 0;
    for (int x = region.x0; x < region.x1(); ++x)
      if (valid.get(x, bottom)) ++on_valid;
    if (static_cast<double>(on_valid) + 1e-9 >= cfg.overlap_threshold * rw) {
      PlacementOutcome out;
      out.region = region;
      out.crop = derive_crop(region, w, h, cfg.crop_multiple);
      out.attempts_used = attempt - first_attempt + 1;
      out.center_x = cx;
      out.center_y = cy;
      return out;
    }
  }
  throw NoValidRegion("no acceptable region within the attempt budget");
}

}  // namespace poc
