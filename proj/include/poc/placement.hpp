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

#ifndef POC_PLACEMENT_HPP
#define POC_PLACEMENT_HPP

#include <cstdint>
#include <string>

#include "poc/backend.hpp"
#include "poc/raster.hpp"
#include "poc/rng.hpp"

namespace poc {

enum class PlacementMode { kGuided, kRandom };

std::string to_string(PlacementMode mode);
PlacementMode placement_mode_from_string(const std::string& s);

struct PlacementConfig {
  // Region width and height are drawn uniformly from
  // [min_frac, max_frac] * min(image width, image height).
  double min_frac = 0.05;
  double max_frac = 0.35;
  int max_attempts = 50;
  // Fraction of the region's bottom edge that must rest on valid pixels;
  // inserted objects touch the ground along their bottom edge.
  double overlap_threshold = 0.6;
  PlacementMode placement_mode = PlacementMode::kGuided;
  // Crop sides snap up to a multiple of this (inpainting model stride).
  int crop_multiple = 64;

  void validate() const;
};

struct PlacementOutcome {
  Region region;
  Region crop;  // square unless clamped by the image boundary
  int attempts_used = 0;
  // The sampled center; always a true pixel of the valid mask in guided
  // mode. Kept for diagnostics and distribution tests.
  int center_x = 0;
  int center_y = 0;

  bool operator==(const PlacementOutcome&) const = default;
};

// Mask of pixels where an object may be centered. Unions all detections for
// the location prompt. Random placement and "unconstrained" locations yield
// the all-true mask without touching the backend; an empty detection set
// yields the all-false mask.
BinaryMask valid_area(const ImageBuffer& image,
                      const std::string& location_prompt,
                      SegmentationBackend& backend,
                      const PlacementConfig& cfg,
                      double detection_threshold = 0.3);

// Draws a region with random size and location inside the valid area.
// A draw is accepted when at least cfg.overlap_threshold of its bottom-edge
// row lies on valid pixels; draws are keyed by attempt index starting at
// `first_attempt` and at most cfg.max_attempts - first_attempt are made.
// Throws NoValidRegion when the mask is empty or attempts run out.
PlacementOutcome sample_region(const BinaryMask& valid,
                               const PlacementConfig& cfg,
                               const SampleRng& rng, int first_attempt = 0);

// Smallest square containing `region`, expanded to a multiple of
// `crop_multiple` and shifted to stay inside width x height. When even the
// largest feasible multiple cannot contain the region, falls back to the
// largest inscribed square.
Region derive_crop(const Region& region, int image_width, int image_height,
                   int crop_multiple);

}  // namespace poc

#endif  // POC_PLACEMENT_HPP
