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

#ifndef POC_BLEND_HPP
#define POC_BLEND_HPP

#include <cstdint>

#include "poc/backend.hpp"
#include "poc/labels.hpp"
#include "poc/prompt.hpp"
#include "poc/raster.hpp"

namespace poc {

struct BlendConfig {
  double sigma = 5.0;     // Gaussian std-dev in pixels
  double truncate = 3.0;  // kernel radius in multiples of sigma
  // Detections smaller than this fraction of the inpainted region are
  // treated as generation failures.
  double min_object_area = 0.01;

  void validate() const;
};

// Fully blended sample: edited image, updated labels and the object mask in
// full-image coordinates.
struct AugmentedSample {
  ImageBuffer image;
  LabelMap labels;
  BinaryMask object_mask;
  PromptSet prompt;
  Region region;
  Region crop;
  std::uint64_t seed = 0;
};

// Segments the inpainted crop for the object prompt and returns the
// highest-confidence mask. Throws GenerationRejected when nothing was found
// or the found mask covers less than cfg.min_object_area of the region.
BinaryMask annotate(const ImageBuffer& crop_edited, const Region& region_in_crop,
                    const PromptSet& prompt, SegmentationBackend& backend,
                    const BlendConfig& cfg, double detection_threshold = 0.3);

// Convolves the {0,1} mask with a normalized 2-D Gaussian truncated at
// cfg.truncate * cfg.sigma. The kernel is renormalized over the in-bounds
// support, so an all-true mask maps to all-one weights exactly.
SoftMask feather(const BinaryMask& mask, const BlendConfig& cfg);

// Per pixel and channel: round((1 - w) * original + w * edited), rounding
// half away from zero. Weights of exactly 0 or 1 reproduce the respective
// input bit-identically.
ImageBuffer blend(const ImageBuffer& original, const ImageBuffer& edited,
                  const SoftMask& soft);

// Pastes the blended crop into the base image and writes class_id into the
// labels wherever the binary object mask is true. Labels stay crisp: the
// feathered mask is photometric only.
AugmentedSample paste_and_label(const ImageBuffer& base_image,
                                const LabelMap& base_labels, const Region& crop,
                                const ImageBuffer& blended_crop,
                                const BinaryMask& object_mask,
                                std::int32_t class_id,
                                const LabelConvention& convention);

}  // namespace poc

#endif  // POC_BLEND_HPP
