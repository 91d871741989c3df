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

#ifndef POC_CONFIG_HPP
#define POC_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "poc/dataset_gen.hpp"
#include "poc/http_backend.hpp"

namespace poc {

struct BackendSettings {
  bool mock = true;
  HttpBackendConfig http;
};

struct EvalSettings {
  std::string scores_dir;
  std::string labels_dir;
  std::string out_path;
  int n_bins = 0;  // 0 = exact sweep
  std::string dataset = "dataset";
};

// Whole-tool configuration, loaded from a single JSON file. Unknown keys are
// rejected; violations carry the offending field path.
struct AppConfig {
  GenerationJob job;
  BackendSettings backends;
  EvalSettings eval;
  std::string log_level = "info";
};

// CLI overrides; they are spliced into the config document before
// validation, so they behave exactly as if written in the file.
struct ConfigOverrides {
  std::optional<std::string> mode;
  std::optional<bool> mock;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> input_dir;
  std::optional<std::string> output_dir;
  std::optional<int> augmentations;
  std::optional<int> concurrency;
  std::optional<bool> compose;
  std::optional<bool> overwrite;
  std::optional<bool> resume;
  std::optional<std::string> backend_url;
  std::optional<std::string> placement_mode;
  std::optional<double> min_frac;
  std::optional<double> max_frac;
  std::optional<int> max_attempts;
  std::optional<double> overlap_threshold;
  std::optional<int> crop_multiple;
};

AppConfig load_app_config(const std::filesystem::path& path,
                          const ConfigOverrides& overrides = {});
AppConfig parse_app_config(const std::string& text,
                           const ConfigOverrides& overrides = {});

}  // namespace poc

#endif  // POC_CONFIG_HPP
