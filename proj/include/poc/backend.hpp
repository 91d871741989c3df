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

#ifndef POC_BACKEND_HPP
#define POC_BACKEND_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "poc/raster.hpp"

namespace poc {

// Inpainting job: repaint the true pixels of `mask` inside `crop` according
// to `prompt`. Backends must return an image of identical dimensions and be
// deterministic for a fixed request.
struct InpaintRequest {
  ImageBuffer crop;
  BinaryMask mask;  // true = repaint
  std::string prompt;
  std::uint64_t seed = 0;
  int steps = 50;
  double guidance = 7.5;

  void validate() const;
};

// Open-vocabulary segmentation job over a crop.
struct SegmentRequest {
  ImageBuffer crop;
  std::string prompt;
  double detection_threshold = 0.3;

  void validate() const;
};

// One detected instance. The mask matches the request crop dimensions.
struct Detection {
  BinaryMask mask;
  double confidence = 0.0;
  std::string label;
};

class InpaintBackend {
 public:
  virtual ~InpaintBackend() = default;
  virtual ImageBuffer inpaint(const InpaintRequest& req) = 0;
};

class SegmentationBackend {
 public:
  virtual ~SegmentationBackend() = default;
  // Detections sorted by descending confidence; empty means no instance.
  virtual std::vector<Detection> segment(const SegmentRequest& req) = 0;
};

}  // namespace poc

#endif  // POC_BACKEND_HPP
