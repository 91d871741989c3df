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

#ifndef POC_DATASET_GEN_HPP
#define POC_DATASET_GEN_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "poc/blend.hpp"
#include "poc/catalog.hpp"
#include "poc/labels.hpp"
#include "poc/manifest.hpp"
#include "poc/placement.hpp"
#include "poc/prompt.hpp"

namespace poc {

// anomaly-test   inserts OOD objects (mixed with some ID ones) and writes
//                binary anomaly ground truth
// ood-finetune   inserts OOD objects on top of the base label maps
// extend         inserts new classes with freshly assigned ids
enum class GenerationMode { kAnomalyTest, kOodFinetune, kExtend };

std::string to_string(GenerationMode mode);
GenerationMode generation_mode_from_string(const std::string& s);

// Request knobs forwarded to the model backends.
struct InferenceParams {
  int steps = 50;
  double guidance = 7.5;
  double detection_threshold = 0.3;
};

// A catalog plus how its objects are labeled. `class_ids` optionally pins
// explicit ids per class name (required for id-synthetic classes when the
// convention has more than one ID class).
struct CatalogBinding {
  ObjectCatalog catalog;
  ClassRole role = ClassRole::kOod;
  std::map<std::string, std::int32_t> class_ids;
};

struct GenerationJob {
  GenerationMode mode = GenerationMode::kAnomalyTest;
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  std::vector<CatalogBinding> catalogs;
  int augmentations_per_image = 3;
  std::uint64_t global_seed = 0;
  PlacementConfig placement;
  BlendConfig blend;
  InferenceParams inference;
  LabelConvention labels = LabelConvention::anomaly_test_default();
  // Base-label values mapped to the ignore id when synthesizing anomaly
  // ground truth.
  std::set<std::int32_t> base_ignore_ids{255};
  // Probability that an anomaly-test draw picks an ID object instead of an
  // OOD one (1 ID per 5 OOD by default).
  double id_insert_ratio = 1.0 / 6.0;
  // false: each augmentation starts from the original image and writes its
  //        own output (dataset grows by augmentations_per_image).
  // true:  augmentations compose sequentially onto one output per input.
  bool compose = false;
  int concurrency = 4;
  bool overwrite = false;
  bool resume = false;

  void validate() const;
};

// Stable fingerprint of everything that affects outputs; stored in the
// manifest header and checked on resume.
std::string job_fingerprint(const GenerationJob& job);

// Label id an entry of this binding gets written with.
std::int32_t resolve_class_id(const CatalogBinding& binding,
                              const CatalogEntry& entry,
                              const LabelConvention& convention);

// Prompts for every augmentation of one image. Draws are keyed by
// (global_seed, image_id, augmentation_index) only.
std::vector<PromptSet> sample_prompts(const GenerationJob& job,
                                      const std::string& image_id);

struct RunSummary {
  Manifest manifest;
  int accepted = 0;
  int rejected = 0;
};

// Executes the whole job: enumerate input images, insert objects, write
// outputs under output_dir/{images,labels} plus manifest.jsonl. Outputs are
// a pure function of the job and backend behavior, independent of
// concurrency.
RunSummary run(const GenerationJob& job, InpaintBackend& inpaint_backend,
               SegmentationBackend& segment_backend);

}  // namespace poc

#endif  // POC_DATASET_GEN_HPP
