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

#ifndef POC_REPORT_HPP
#define POC_REPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "poc/metrics.hpp"

namespace poc {

// Evaluation report plus its reproducibility block.
struct ReportDocument {
  AnomalyReport report;
  std::string tool_version;
  std::string scores_dir;
  std::string labels_dir;
  int n_bins = 0;
  std::string options_hash;
};

void write_report(const std::filesystem::path& path, const ReportDocument& doc);
ReportDocument read_report(const std::filesystem::path& path);

// One row per dataset, sorted by dataset name. Doubles are printed with
// enough digits to round-trip exactly.
void write_comparison_csv(std::vector<ReportDocument> docs,
                          const std::filesystem::path& path);

void write_pr_curve_csv(const AnomalyReport& report,
                        const std::filesystem::path& path);

std::string render_pr_curve_svg(const AnomalyReport& report);
std::string render_boxplots_svg(const AnomalyReport& report);

}  // namespace poc

#endif  // POC_REPORT_HPP
