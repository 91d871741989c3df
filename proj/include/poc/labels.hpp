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

#ifndef POC_LABELS_HPP
#define POC_LABELS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "poc/errors.hpp"
#include "poc/raster.hpp"

namespace poc {

// Integer label raster. Values are kept wider than 8 bits in memory so that
// out-of-range inputs can be detected at encode time.
class LabelMap {
 public:
  LabelMap() = default;
  LabelMap(int width, int height, std::int32_t fill = 0)
      : width_(width), height_(height) {
    if (width < 1 || height < 1) throw ShapeError("LabelMap: empty size");
    values_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }

  std::int32_t get(int x, int y) const {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int x, int y, std::int32_t v) {
    values_[static_cast<std::size_t>(y) * width_ + x] = v;
  }

  const std::vector<std::int32_t>& values() const { return values_; }
  std::vector<std::int32_t>& values() { return values_; }

  bool operator==(const LabelMap&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::int32_t> values_;
};

// Which integer ids mean what. The default for anomaly test sets is
// 0 = in-distribution, 1 = OOD, 255 = ignore; fine-tuning and extension
// conventions are configured per job.
struct LabelConvention {
  std::set<std::int32_t> id_class_ids{0};
  std::int32_t ood_id = 1;
  std::int32_t ignore_id = 255;
  std::map<std::string, std::int32_t> new_class_ids;

  // True when `id` may appear in a label map under this convention.
  bool knows(std::int32_t id) const;

  // True when `id` may be written for an inserted object. The ignore id is
  // reserved and never assignable.
  bool assignable(std::int32_t id) const;

  // Throws ConfigError when the id sets overlap.
  void validate() const;

  static LabelConvention anomaly_test_default();
  static LabelConvention ood_finetune_default();
  static LabelConvention extend_default(
      const std::vector<std::string>& new_class_names);
};

// Serializes to an 8-bit single-channel PNG. Every pixel must be a value
// known to the convention and within [0, 255].
std::vector<std::uint8_t> encode_label_map(const LabelMap& labels,
                                           const LabelConvention& convention);

// Inverse of encode_label_map; the round trip is bit exact.
LabelMap decode_label_map(const std::vector<std::uint8_t>& png_bytes);

}  // namespace poc

#endif  // POC_LABELS_HPP
