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

#include "poc/labels.hpp"

#include "poc/png_io.hpp"

namespace poc {

bool LabelConvention::knows(std::int32_t id) const {
  if (id == ood_id || id == ignore_id) return true;
  if (id_class_ids.count(id)) return true;
  for (const auto& [name, nid] : new_class_ids)
    if (nid == id) return true;
  return false;
}

bool LabelConvention::assignable(std::int32_t id) const {
  return id != ignore_id && knows(id);
}

void LabelConvention::validate() const {
  if (id_class_ids.count(ood_id))
    throw ConfigError("label convention: ood_id overlaps id_class_ids");
  if (ignore_id == ood_id || id_class_ids.count(ignore_id))
    throw ConfigError("label convention: ignore_id overlaps other ids");
  for (const auto& [name, nid] : new_class_ids) {
    if (nid == ood_id || nid == ignore_id || id_class_ids.count(nid))
      throw ConfigError("label convention: new class '" + name +
                        "' id overlaps reserved ids");
  }
}

LabelConvention LabelConvention::anomaly_test_default() {
  LabelConvention c;
  c.id_class_ids = {0};
  c.ood_id = 1;
  c.ignore_id = 255;
  return c;
}

LabelConvention LabelConvention::ood_finetune_default() {
  LabelConvention c;
  c.id_class_ids.clear();
  for (std::int32_t i = 0; i < 19; ++i) c.id_class_ids.insert(i);
  c.ood_id = 254;
  c.ignore_id = 255;
  return c;
}

LabelConvention LabelConvention::extend_default(
    const std::vector<std::string>& new_class_names) {
  LabelConvention c = ood_finetune_default();
  std::int32_t next = *c.id_class_ids.rbegin() + 1;
  for (const auto& name : new_class_names) {
    if (!c.new_class_ids.count(name)) c.new_class_ids[name] = next++;
  }
  return c;
}

std::vector<std::uint8_t> encode_label_map(const LabelMap& labels,
                                           const LabelConvention& convention) {
  std::vector<std::uint8_t> rows(labels.values().size());
  for (std::size_t i = 0; i < labels.values().size(); ++i) {
    const std::int32_t v = labels.values()[i];
    if (v < 0 || v > 255)
      throw LabelValueError("label value " + std::to_string(v) +
                            " does not fit an 8-bit label map");
    if (!convention.knows(v))
      throw LabelValueError("label value " + std::to_string(v) +
                            " is not part of the label convention");
    rows[i] = static_cast<std::uint8_t>(v);
  }
  return encode_png_gray8(labels.width(), labels.height(), rows);
}

LabelMap decode_label_map(const std::vector<std::uint8_t>& png_bytes) {
  GrayImage g = decode_png_gray8(png_bytes);
  LabelMap out(g.width, g.height);
  for (std::size_t i = 0; i < g.rows.size(); ++i)
    out.values()[i] = g.rows[i];
  return out;
}

}  // namespace poc
