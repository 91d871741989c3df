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

#ifndef POC_EVAL_HPP
#define POC_EVAL_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "poc/metrics.hpp"

namespace poc {

struct EvalOptions {
  // 0 = exact sweep over all pooled pixels; otherwise a streaming
  // fixed-bin histogram approximation.
  int n_bins = 0;
  std::string dataset = "dataset";
  std::int32_t ood_id = 1;
  std::int32_t ignore_id = 255;
};

struct EvalResult {
  AnomalyReport report;
  std::vector<std::string> warnings;
  std::size_t pairs = 0;
};

// Pools every pixel of every paired (score map, label map) under the two
// directories and computes the anomaly metrics once over the pool. Pairing
// is by filename stem: <stem>.pocscore with <stem>.png. Unpaired files are
// reported as warnings and skipped; zero pairs is an IoError.
EvalResult evaluate_dataset(const std::filesystem::path& scores_dir,
                            const std::filesystem::path& labels_dir,
                            const EvalOptions& options);

}  // namespace poc

#endif  // POC_EVAL_HPP
