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

#include "poc/blend.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "poc/errors.hpp"

namespace poc {

void BlendConfig::validate() const {
  if (!(sigma > 0.0)) throw ConfigError("blend: sigma must be positive");
  if (truncate < 1.0) throw ConfigError("blend: truncate must be >= 1");
  if (min_object_area < 0.0 || min_object_area >= 1.0)
    throw ConfigError("blend: min_object_area in [0, 1)");
}

BinaryMask annotate(const ImageBuffer& crop_edited, const Region& region_in_crop,
                    const PromptSet& prompt, SegmentationBackend& backend,
                    const BlendConfig& cfg, double detection_threshold) {
  cfg.validate();
  SegmentRequest req;
  req.crop = crop_edited;
  req.prompt = prompt.object_prompt;
  req.detection_threshold = detection_threshold;

  const std::vector<Detection> detections = backend.segment(req);
  if (detections.empty())
    throw GenerationRejected("object '" + prompt.object_prompt +
                             "' not detected in the inpainted crop");
  const Detection& best = detections.front();
  const double min_pixels =
      cfg.min_object_area * static_cast<double>(region_in_crop.area());
  if (static_cast<double>(best.mask.count()) < min_pixels)
    throw GenerationRejected("detected mask for '" + prompt.object_prompt +
                             "' is below the minimum object area");
  return best.mask;
}

namespace {

// Separable truncated-Gaussian convolution with zero padding. Numerator and
// denominator run through the identical code path so their ratio is exact
// wherever the input is constant.
std::vector<double> gaussian_kernel(double sigma, double truncate, int& radius) {
  radius = static_cast<int>(std::ceil(sigma * truncate - 1e-12));
  std::vector<double> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    sum += k[i + radius];
  }
  for (double& v : k) v /= sum;
  return k;
}

std::vector<double> convolve_separable(const std::vector<double>& in, int w,
                                       int h, const std::vector<double>& k,
                                       int radius) {
  std::vector<double> mid(in.size(), 0.0);
  for (int y = 0; y < h; ++y) {
    const double* row = in.data() + static_cast<std::size_t>(y) * w;
    double* out = mid.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      const int lo = std::max(-radius, -x);
      const int hi = std::min(radius, w - 1 - x);
      for (int i = lo; i <= hi; ++i) acc += k[i + radius] * row[x + i];
      out[x] = acc;
    }
  }
  std::vector<double> out(in.size(), 0.0);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      double acc = 0.0;
      const int lo = std::max(-radius, -y);
      const int hi = std::min(radius, h - 1 - y);
      for (int j = lo; j <= hi; ++j)
        acc += k[j + radius] * mid[static_cast<std::size_t>(y + j) * w + x];
      out[static_cast<std::size_t>(y) * w + x] = acc;
    }
  }
  return out;
}

}  // namespace

SoftMask feather(const BinaryMask& mask, const BlendConfig& cfg) {
  cfg.validate();
  const int w = mask.width();
  const int h = mask.height();
  SoftMask soft(w, h, 0.0);
  if (!mask.any()) return soft;

  int radius = 0;
  const std::vector<double> kernel = gaussian_kernel(cfg.sigma, cfg.truncate, radius);

  std::vector<double> values(mask.bits().size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = mask.bits()[i] ? 1.0 : 0.0;
  const std::vector<double> ones(values.size(), 1.0);

  const std::vector<double> num = convolve_separable(values, w, h, kernel, radius);
  const std::vector<double> den = convolve_separable(ones, w, h, kernel, radius);

  for (std::size_t i = 0; i < num.size(); ++i)
    soft.weights()[i] = std::clamp(num[i] / den[i], 0.0, 1.0);
  return soft;
}

ImageBuffer blend(const ImageBuffer& original, const ImageBuffer& edited,
                  const SoftMask& soft) {
  require_same_shape(original.width(), original.height(), edited.width(),
                     edited.height(), "blend");
  require_same_shape(original.width(), original.height(), soft.width(),
                     soft.height(), "blend soft mask");

  ImageBuffer out(original.width(), original.height());
  const std::size_t n = soft.weights().size();
  for (std::size_t i = 0; i < n; ++i) {
    const double wgt = soft.weights()[i];
    for (int c = 0; c < 3; ++c) {
      const double o = original.pixels()[i * 3 + c];
      const double e = edited.pixels()[i * 3 + c];
      const double v = (1.0 - wgt) * o + wgt * e;
      out.pixels()[i * 3 + c] = static_cast<std::uint8_t>(std::floor(v + 0.5));
    }
  }
  return out;
}

AugmentedSample paste_and_label(const ImageBuffer& base_image,
                                const LabelMap& base_labels, const Region& crop,
                                const ImageBuffer& blended_crop,
                                const BinaryMask& object_mask,
                                std::int32_t class_id,
                                const LabelConvention& convention) {
  if (!convention.assignable(class_id))
    throw LabelValueError("class id " + std::to_string(class_id) +
                          " is not assignable under the label convention");
  require_same_shape(base_image.width(), base_image.height(),
                     base_labels.width(), base_labels.height(),
                     "paste_and_label labels");
  require_same_shape(blended_crop.width(), blended_crop.height(), crop.w,
                     crop.h, "paste_and_label crop");
  require_same_shape(object_mask.width(), object_mask.height(), crop.w, crop.h,
                     "paste_and_label mask");
  if (!base_image.bounds().contains(crop))
    throw ShapeError("paste_and_label: crop outside image");

  AugmentedSample sample;
  sample.image = base_image;
  sample.image.paste(crop, blended_crop);
  sample.labels = base_labels;
  sample.object_mask = BinaryMask(base_image.width(), base_image.height());
  for (int y = 0; y < crop.h; ++y) {
    for (int x = 0; x < crop.w; ++x) {
      if (!object_mask.get(x, y)) continue;
      sample.labels.set(crop.x0 + x, crop.y0 + y, class_id);
      sample.object_mask.set(crop.x0 + x, crop.y0 + y, true);
    }
  }
  sample.crop = crop;
  return sample;
}

}  // namespace poc
