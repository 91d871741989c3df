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

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "poc/catalog.hpp"
#include "poc/config.hpp"
#include "poc/dataset_gen.hpp"
#include "poc/errors.hpp"
#include "poc/eval.hpp"
#include "poc/http_backend.hpp"
#include "poc/mock_backend.hpp"
#include "poc/report.hpp"
#include "poc/rng.hpp"
#include "poc/version.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;   // no work done / everything rejected
constexpr int kExitConfig = 2;  // invalid configuration

int cmd_generate(const std::string& config_path,
                 const poc::ConfigOverrides& overrides) {
  poc::AppConfig config;
  try {
    config = poc::load_app_config(config_path, overrides);
    config.job.validate();
  } catch (const poc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::unique_ptr<poc::MockBackend> mock;
  std::unique_ptr<poc::HttpBackend> http;
  poc::InpaintBackend* inpaint = nullptr;
  poc::SegmentationBackend* segment = nullptr;
  if (config.backends.mock) {
    mock = std::make_unique<poc::MockBackend>();
    inpaint = mock.get();
    segment = mock.get();
  } else {
    http = std::make_unique<poc::HttpBackend>(config.backends.http);
    inpaint = http.get();
    segment = http.get();
  }

  const auto t0 = std::chrono::steady_clock::now();
  poc::RunSummary summary;
  try {
    summary = poc::run(config.job, *inpaint, *segment);
  } catch (const poc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const poc::Error& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitEmpty;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const int total = summary.accepted + summary.rejected;
  std::printf("generate: %d accepted, %d rejected (%.1f samples/s)\n",
              summary.accepted, summary.rejected,
              seconds > 0 ? total / seconds : 0.0);
  std::printf("manifest: %s\n",
              (config.job.output_dir / "manifest.jsonl").string().c_str());
  if (config.log_level == "debug" || config.log_level == "info") {
    int shown = 0;
    for (const auto& e : summary.manifest.entries) {
      if (e.accepted) continue;
      if (shown++ == 10 && config.log_level != "debug") {
        std::cerr << "... (" << summary.rejected << " rejected in total)\n";
        break;
      }
      std::cerr << "rejected " << e.image_id << "#" << e.augmentation << ": "
                << e.reject_reason << "\n";
    }
  }
  if (summary.accepted == 0) {
    std::cerr << "every sample was rejected\n";
    return kExitEmpty;
  }
  return kExitOk;
}

int cmd_evaluate(const std::string& scores_dir, const std::string& labels_dir,
                 const std::string& out_path, const poc::EvalOptions& options,
                 const std::string& pr_csv) {
  if (options.n_bins < 0) {
    std::cerr << "config error: --bins must be >= 0\n";
    return kExitConfig;
  }
  poc::EvalResult result;
  try {
    result = poc::evaluate_dataset(scores_dir, labels_dir, options);
  } catch (const poc::Error& e) {
    std::cerr << "evaluate: " << e.what() << "\n";
    return kExitEmpty;
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";

  poc::ReportDocument doc;
  doc.report = result.report;
  doc.tool_version = poc::kToolVersion;
  doc.scores_dir = scores_dir;
  doc.labels_dir = labels_dir;
  doc.n_bins = options.n_bins;
  {
    char buf[17];
    const std::string key = scores_dir + "|" + labels_dir + "|" +
                            std::to_string(options.n_bins) + "|" +
                            std::to_string(options.ood_id) + "|" +
                            std::to_string(options.ignore_id);
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(poc::fnv1a(key)));
    doc.options_hash = buf;
  }
  try {
    poc::write_report(out_path, doc);
    if (!pr_csv.empty()) poc::write_pr_curve_csv(result.report, pr_csv);
  } catch (const poc::Error& e) {
    std::cerr << "evaluate: " << e.what() << "\n";
    return kExitEmpty;
  }
  std::printf(
      "evaluate: %zu pairs, max_f1=%.6f auprc=%.6f fpr@95tpr=%.6f "
      "(%lld ood / %lld id / %lld ignored pixels)\n",
      result.pairs, result.report.max_f1, result.report.auprc,
      result.report.fpr_at_95tpr,
      static_cast<long long>(result.report.n_ood_pixels),
      static_cast<long long>(result.report.n_id_pixels),
      static_cast<long long>(result.report.n_ignored));
  std::printf("report: %s\n", out_path.c_str());
  return kExitOk;
}

int cmd_report(const std::vector<std::string>& report_paths,
               const std::string& out_dir) {
  std::vector<poc::ReportDocument> docs;
  for (const auto& p : report_paths) {
    try {
      docs.push_back(poc::read_report(p));
    } catch (const poc::Error& e) {
      std::cerr << "report: " << e.what() << "\n";
      return kExitEmpty;
    }
  }
  const auto file_stem = [](const std::string& name) {
    std::string out;
    for (char c : name)
      out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
              c == '.' || c == '_')
                 ? c
                 : '_';
    return out.empty() ? std::string("dataset") : out;
  };
  try {
    fs::create_directories(out_dir);
    poc::write_comparison_csv(docs, fs::path(out_dir) / "comparison.csv");
    for (const auto& d : docs) {
      const std::string stem = file_stem(d.report.dataset);
      std::ofstream pr(fs::path(out_dir) / (stem + "_pr.svg"));
      pr << poc::render_pr_curve_svg(d.report);
      std::ofstream box(fs::path(out_dir) / (stem + "_boxplot.svg"));
      box << poc::render_boxplots_svg(d.report);
      if (!pr || !box) throw poc::IoError("svg write failed for " + stem);
    }
  } catch (const poc::Error& e) {
    std::cerr << "report: " << e.what() << "\n";
    return kExitEmpty;
  }
  std::printf("report: wrote comparison.csv and %zu SVG pairs to %s\n",
              docs.size(), out_dir.c_str());
  return kExitOk;
}

int cmd_catalogs(const std::string& name) {
  const auto print_catalog = [](const poc::ObjectCatalog& cat) {
    std::printf("%s (%zu entries)\n", cat.name.c_str(), cat.entries.size());
    for (const auto& e : cat.entries) {
      if (e.class_name != e.prompt)
        std::printf("  %s  [class: %s]\n", e.prompt.c_str(),
                    e.class_name.c_str());
      else
        std::printf("  %s\n", e.prompt.c_str());
    }
  };
  try {
    if (!name.empty()) {
      print_catalog(poc::load_catalog(name));
    } else {
      for (const auto& n : poc::builtin_catalog_names())
        print_catalog(poc::load_catalog(n));
    }
  } catch (const poc::CatalogNotFound& e) {
    std::cerr << "catalogs: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dataset extension via prompted object inpainting, plus "
               "per-pixel anomaly-segmentation evaluation"};
  app.set_version_flag("--version", poc::kToolVersion);
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Run a dataset generation job");
  std::string config_path;
  gen->add_option("--config", config_path, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  poc::ConfigOverrides ov;
  std::string ov_mode, ov_input, ov_output, ov_url, ov_placement;
  std::uint64_t ov_seed = 0;
  int ov_aug = 0, ov_conc = 0;
  bool ov_mock = false, ov_http = false, ov_compose = false,
       ov_overwrite = false, ov_resume = false;
  gen->add_option("--mode", ov_mode,
                  "anomaly-test | ood-finetune | extend");
  gen->add_flag("--mock", ov_mock, "Use the procedural mock backend");
  gen->add_flag("--http", ov_http, "Use the HTTP model backend");
  gen->add_option("--seed", ov_seed, "Global seed");
  gen->add_option("--input-dir", ov_input, "Input dataset directory");
  gen->add_option("--output-dir", ov_output, "Output dataset directory");
  gen->add_option("--augmentations", ov_aug, "Augmentations per image");
  gen->add_option("--concurrency", ov_conc, "Worker threads");
  gen->add_flag("--compose", ov_compose,
                "Compose augmentations onto one output image per input");
  gen->add_flag("--overwrite", ov_overwrite, "Replace an existing output dir");
  gen->add_flag("--resume", ov_resume, "Skip samples already accepted");
  gen->add_option("--backend-url", ov_url, "Model server base URL");
  gen->add_option("--placement-mode", ov_placement, "guided | random");
  double ov_min_frac = 0, ov_max_frac = 0, ov_overlap = 0;
  int ov_attempts = 0, ov_crop_multiple = 0;
  gen->add_option("--min-frac", ov_min_frac,
                  "Smallest region side as a fraction of min(W,H)");
  gen->add_option("--max-frac", ov_max_frac,
                  "Largest region side as a fraction of min(W,H)");
  gen->add_option("--max-attempts", ov_attempts, "Attempt budget per sample");
  gen->add_option("--overlap-threshold", ov_overlap,
                  "Required valid fraction of the region bottom edge");
  gen->add_option("--crop-multiple", ov_crop_multiple,
                  "Crop side stride in pixels");

  // evaluate
  auto* eval = app.add_subcommand("evaluate",
                                  "Compute anomaly metrics over score maps");
  std::string scores_dir, labels_dir, out_path = "report.json", pr_csv;
  poc::EvalOptions eval_options;
  eval->add_option("--scores", scores_dir, "Directory of .pocscore files")
      ->required();
  eval->add_option("--labels", labels_dir, "Directory of label PNGs")
      ->required();
  eval->add_option("--out", out_path, "Report JSON output path");
  eval->add_option("--bins", eval_options.n_bins,
                   "Histogram bins (0 = exact sweep)");
  eval->add_option("--dataset", eval_options.dataset, "Dataset name");
  eval->add_option("--ood-id", eval_options.ood_id, "OOD label id");
  eval->add_option("--ignore-id", eval_options.ignore_id, "Ignore label id");
  eval->add_option("--pr-csv", pr_csv, "Also write the PR curve as CSV");

  // report
  auto* rep = app.add_subcommand("report", "Render tables and plots");
  std::vector<std::string> report_paths;
  std::string report_out = "reports";
  rep->add_option("reports", report_paths, "Report JSON files")
      ->required()
      ->expected(-1);
  rep->add_option("--out-dir", report_out, "Output directory");

  // catalogs
  auto* cats = app.add_subcommand("catalogs", "Print built-in object catalogs");
  std::string catalog_name;
  cats->add_option("name", catalog_name, "Catalog to print (default: all)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    if (!ov_mode.empty()) ov.mode = ov_mode;
    if (ov_mock) ov.mock = true;
    if (ov_http) ov.mock = false;
    if (gen->count("--seed")) ov.seed = ov_seed;
    if (!ov_input.empty()) ov.input_dir = ov_input;
    if (!ov_output.empty()) ov.output_dir = ov_output;
    if (ov_aug > 0) ov.augmentations = ov_aug;
    if (ov_conc > 0) ov.concurrency = ov_conc;
    if (ov_compose) ov.compose = true;
    if (ov_overwrite) ov.overwrite = true;
    if (ov_resume) ov.resume = true;
    if (!ov_url.empty()) ov.backend_url = ov_url;
    if (!ov_placement.empty()) ov.placement_mode = ov_placement;
    if (gen->count("--min-frac")) ov.min_frac = ov_min_frac;
    if (gen->count("--max-frac")) ov.max_frac = ov_max_frac;
    if (gen->count("--max-attempts")) ov.max_attempts = ov_attempts;
    if (gen->count("--overlap-threshold")) ov.overlap_threshold = ov_overlap;
    if (gen->count("--crop-multiple")) ov.crop_multiple = ov_crop_multiple;
    if (!ov.backend_url) {
      if (const char* env = std::getenv("POC_BACKEND_URL"); env && *env)
        ov.backend_url = std::string(env);
    }
    return cmd_generate(config_path, ov);
  }
  if (eval->parsed())
    return cmd_evaluate(scores_dir, labels_dir, out_path, eval_options, pr_csv);
  if (rep->parsed()) return cmd_report(report_paths, report_out);
  if (cats->parsed()) return cmd_catalogs(catalog_name);
  return kExitConfig;
}
