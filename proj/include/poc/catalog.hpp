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

#ifndef POC_CATALOG_HPP
#define POC_CATALOG_HPP

#include <string>
#include <vector>

#include "poc/errors.hpp"

namespace poc {

// How an inserted object is labeled.
enum class ClassRole {
  kOod,         // labeled with the convention's ood id
  kIdSynthetic, // labeled with its in-distribution class id
  kNewClass,    // labeled with a newly assigned class id
};

std::string to_string(ClassRole role);
ClassRole class_role_from_string(const std::string& s);

// One insertable object: the prompt handed to the inpainting model plus the
// class it belongs to. Several prompts may share one class name.
struct CatalogEntry {
  std::string prompt;
  std::string class_name;

  bool operator==(const CatalogEntry&) const = default;
};

// Named list of insertable objects.
struct ObjectCatalog {
  std::string name;
  std::vector<CatalogEntry> entries;

  std::vector<std::string> prompts() const;
  std::vector<std::string> class_names() const;  // deduplicated, in order
};

// Built-in catalogs:
//   poc-alt-25        25 street anomaly prompts
//   cityscapes-id-6   6 Cityscapes object classes
//   pascal-animals-6  6 Pascal animal classes
//   coco-80           80 standard COCO class names
// Throws CatalogNotFound for anything else.
ObjectCatalog load_catalog(const std::string& name);

std::vector<std::string> builtin_catalog_names();

// Raw built-in lists.
const std::vector<std::string>& poc_alt_anomaly_prompts();  // 25 entries
const std::vector<std::string>& cityscapes_id_objects();    // 6 entries
const std::vector<std::string>& pascal_animal_classes();    // 6 entries
const std::vector<std::string>& coco_class_names();         // 80 entries

}  // namespace poc

#endif  // POC_CATALOG_HPP
