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

#include "poc/catalog.hpp"

#include <algorithm>

namespace poc {

std::string to_string(ClassRole role) {
  switch (role) {
    case ClassRole::kOod:
      return "ood";
    case ClassRole::kIdSynthetic:
      return "id-synthetic";
    case ClassRole::kNewClass:
      return "new-class";
  }
  return "ood";
}

ClassRole class_role_from_string(const std::string& s) {
  if (s == "ood") return ClassRole::kOod;
  if (s == "id-synthetic") return ClassRole::kIdSynthetic;
  if (s == "new-class") return ClassRole::kNewClass;
  throw ConfigError("unknown class role '" + s + "'");
}

std::vector<std::string> ObjectCatalog::prompts() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.prompt);
  return out;
}

std::vector<std::string> ObjectCatalog::class_names() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (std::find(out.begin(), out.end(), e.class_name) == out.end())
      out.push_back(e.class_name);
  }
  return out;
}

const std::vector<std::string>& poc_alt_anomaly_prompts() {
  static const std::vector<std::string> kList = {
      "stroller",
      "trolley",
      "garbage bag",
      "wheelie bin",
      "suitcase",
      "skateboard",
      "chair dumped on the street",
      "sofa dumped on the street",
      "furniture dumped on the street",
      "matress dumped on the street",
      "garbage dumped on the street",
      "clothes dumped on the street",
      "cement mixer on the street",
      "cat",
      "dog",
      "bird flying",
      "horse",
      "skunk",
      "sheep",
      "crocodile",
      "alligator",
      "bear",
      "llama",
      "tiger",
      "monkey",
  };
  return kList;
}

const std::vector<std::string>& cityscapes_id_objects() {
  static const std::vector<std::string> kList = {
      "rider", "bicycle", "motorcycle", "bus", "person", "car",
  };
  return kList;
}

const std::vector<std::string>& pascal_animal_classes() {
  static const std::vector<std::string> kList = {
      "bird", "cat", "cow", "dog", "horse", "sheep",
  };
  return kList;
}

const std::vector<std::string>& coco_class_names() {
  static const std::vector<std::string> kList = {
      "person",        "bicycle",      "car",           "motorcycle",
      "airplane",      "bus",          "train",         "truck",
      "boat",          "traffic light", "fire hydrant", "stop sign",
      "parking meter", "bench",        "bird",          "cat",
      "dog",           "horse",        "sheep",         "cow",
      "elephant",      "bear",         "zebra",         "giraffe",
      "backpack",      "umbrella",     "handbag",       "tie",
      "suitcase",      "frisbee",      "skis",          "snowboard",
      "sports ball",   "kite",         "baseball bat",  "baseball glove",
      "skateboard",    "surfboard",    "tennis racket", "bottle",
      "wine glass",    "cup",          "fork",          "knife",
      "spoon",         "bowl",         "banana",        "apple",
      "sandwich",      "orange",       "broccoli",      "carrot",
      "hot dog",       "pizza",        "donut",         "cake",
      "chair",         "couch",        "potted plant",  "bed",
      "dining table",  "toilet",       "tv",            "laptop",
      "mouse",         "remote",       "keyboard",      "cell phone",
      "microwave",     "oven",         "toaster",       "sink",
      "refrigerator",  "book",         "clock",         "vase",
      "scissors",      "teddy bear",   "hair drier",    "toothbrush",
  };
  return kList;
}

namespace {

// The one multi-word prompt whose class differs from the prompt itself;
// birds are the only class with unconstrained placement.
std::string class_name_for_prompt(const std::string& prompt) {
  if (prompt == "bird flying") return "bird";
  return prompt;
}

ObjectCatalog from_prompts(std::string name,
                           const std::vector<std::string>& prompts) {
  ObjectCatalog cat;
  cat.name = std::move(name);
  cat.entries.reserve(prompts.size());
  for (const auto& p : prompts)
    cat.entries.push_back({p, class_name_for_prompt(p)});
  return cat;
}

}  // namespace

ObjectCatalog load_catalog(const std::string& name) {
  if (name == "poc-alt-25") return from_prompts(name, poc_alt_anomaly_prompts());
  if (name == "cityscapes-id-6") return from_prompts(name, cityscapes_id_objects());
  if (name == "pascal-animals-6") return from_prompts(name, pascal_animal_classes());
  if (name == "coco-80") return from_prompts(name, coco_class_names());
  throw CatalogNotFound("unknown catalog '" + name + "'");
}

std::vector<std::string> builtin_catalog_names() {
  return {"poc-alt-25", "cityscapes-id-6", "pascal-animals-6", "coco-80"};
}

}  // namespace poc
