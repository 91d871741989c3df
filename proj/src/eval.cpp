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

#include "poc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poc/errors.hpp"
#include "poc/png_io.hpp"
#include "poc/score_map.hpp"

namespace poc {

namespace fs = std::filesystem;

namespace {

struct Pair {
  fs::path scores;
  fs::path labels;
};

std::vector<Pair> pair_inputs(const fs::path& scores_dir,
                              const fs::path& labels_dir,
                              std::vector<std::string>& warnings) {
  if (!fs::is_directory(scores_dir))
    throw IoError("scores directory " + scores_dir.string() + " not found");
  if (!fs::is_directory(labels_dir))
    throw IoError("labels directory " + labels_dir.string() + " not found");

  std::vector<Pair> pairs;
  std::vector<fs::path> score_files;
  for (const auto& de : fs::directory_iterator(scores_dir))
    if (de.is_regular_file() && de.path().extension() == ".pocscore")
      score_files.push_back(de.path());
  std::sort(score_files.begin(), score_files.end());

  for (const auto& sp : score_files) {
    const fs::path lp = labels_dir / (sp.stem().string() + ".png");
    if (!fs::exists(lp)) {
      warnings.push_back("no label map for " + sp.filename().string() +
                         "; skipped");
      continue;
    }
    pairs.push_back({sp, lp});
  }
  for (const auto& de : fs::directory_iterator(labels_dir)) {
    if (!de.is_regular_file() || de.path().extension() != ".png") continue;
    const fs::path sp = scores_dir / (de.path().stem().string() + ".pocscore");
    if (!fs::exists(sp))
      warnings.push_back("no score map for " + de.path().filename().string() +
                         "; skipped");
  }
  return pairs;
}

// 1 = OOD, 0 = ID, -1 = ignored.
std::int32_t map_label(std::int32_t raw, const EvalOptions& opt) {
  if (raw == opt.ood_id) return 1;
  if (raw == opt.ignore_id) return -1;
  return 0;
}

template <typename Fn>
void for_each_pixel(const Pair& p, const EvalOptions& opt, Fn&& fn) {
  const ScoreMap scores = read_score_map(p.scores);
  const LabelMap labels = decode_label_map(read_file_bytes(p.labels));
  require_same_shape(scores.width, scores.height, labels.width(),
                     labels.height(), "evaluation pair");
  for (std::size_t i = 0; i < scores.scores.size(); ++i) {
    fn(static_cast<double>(scores.scores[i]),
       map_label(labels.values()[i], opt));
  }
}

FiveNumberSummary quantiles_from_bins(const std::vector<std::int64_t>& counts,
                                      double lo, double hi, double exact_min,
                                      double exact_max) {
  std::int64_t total = 0;
  for (const auto c : counts) total += c;
  const double width = (hi - lo) / static_cast<double>(counts.size());
  const auto quantile = [&](double q) {
    const double target = q * static_cast<double>(total - 1);
    std::int64_t cum = 0;
    for (std::size_t b = 0; b < counts.size(); ++b) {
      if (counts[b] == 0) continue;
      if (static_cast<double>(cum + counts[b]) > target) {
        const double frac =
            (target - static_cast<double>(cum)) / static_cast<double>(counts[b]);
        return lo + (static_cast<double>(b) + frac) * width;
      }
      cum += counts[b];
    }
    return exact_max;
  };
  FiveNumberSummary s;
  s.min = exact_min;
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  s.max = exact_max;
  return s;
}

}  // namespace

EvalResult evaluate_dataset(const fs::path& scores_dir,
                            const fs::path& labels_dir,
                            const EvalOptions& options) {
  EvalResult result;
  const std::vector<Pair> pairs =
      pair_inputs(scores_dir, labels_dir, result.warnings);
  if (pairs.empty())
    throw IoError("no paired score/label files to evaluate");
  result.pairs = pairs.size();

  AnomalyReport& report = result.report;
  report.dataset = options.dataset;

  if (options.n_bins == 0) {
    // Exact: pool everything, then sweep.
    std::vector<double> scores;
    std::vector<std::int32_t> labels;
    for (const auto& p : pairs) {
      for_each_pixel(p, options, [&](double s, std::int32_t l) {
        if (l < 0) {
          ++report.n_ignored;
          return;
        }
        scores.push_back(s);
        labels.push_back(l);
        (l == 1 ? report.n_ood_pixels : report.n_id_pixels)++;
      });
    }
    const ConfusionSweep sw = sweep(scores, labels);
    const AnomalyMetrics m = sweep_metrics(sw);
    report.max_f1 = m.max_f1;
    report.auprc = m.auprc;
    report.fpr_at_95tpr = m.fpr_at_95tpr;
    report.pr_curve = pr_curve_points(sw);
    const BoxplotPair box = score_boxplots(scores, labels);
    report.boxplot_id = box.id;
    report.boxplot_ood = box.ood;
    return result;
  }

  // Streaming: first pass finds the score range, second pass bins.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double id_min = lo, id_max = hi, ood_min = lo, ood_max = hi;
  for (const auto& p : pairs) {
    for_each_pixel(p, options, [&](double s, std::int32_t l) {
      if (l < 0) return;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
      if (l == 1) {
        ood_min = std::min(ood_min, s);
        ood_max = std::max(ood_max, s);
      } else {
        id_min = std::min(id_min, s);
        id_max = std::max(id_max, s);
      }
    });
  }
  if (!(lo < hi)) hi = lo + 1.0;  // constant scores still need a valid range

  HistogramAccumulator acc(options.n_bins, lo, hi);
  for (const auto& p : pairs)
    for_each_pixel(p, options, [&](double s, std::int32_t l) { acc.add(s, l); });

  report.n_ood_pixels = acc.total_pos();
  report.n_id_pixels = acc.total_neg();
  report.n_ignored = acc.total_ignored();

  const AnomalyMetrics m = histogram_metrics(acc);
  report.max_f1 = m.max_f1;
  report.auprc = m.auprc;
  report.fpr_at_95tpr = m.fpr_at_95tpr;
  report.boxplot_ood = quantiles_from_bins(acc.pos_counts(), lo, hi, ood_min, ood_max);
  report.boxplot_id = quantiles_from_bins(acc.neg_counts(), lo, hi, id_min, id_max);

  // PR points from cumulative bins, high scores first.
  std::int64_t tp = 0, fp = 0;
  std::vector<std::pair<double, double>> pts;
  for (int b = acc.n_bins() - 1; b >= 0; --b) {
    const std::int64_t p = acc.pos_counts()[b];
    const std::int64_t n = acc.neg_counts()[b];
    if (p == 0 && n == 0) continue;
    tp += p;
    fp += n;
    pts.emplace_back(static_cast<double>(tp) / static_cast<double>(acc.total_pos()),
                     static_cast<double>(tp) / static_cast<double>(tp + fp));
  }
  if (pts.size() > 512) {
    std::vector<std::pair<double, double>> down;
    const std::size_t stride = (pts.size() + 511) / 512;
    for (std::size_t i = 0; i < pts.size(); i += stride) down.push_back(pts[i]);
    if ((pts.size() - 1) % stride != 0) down.push_back(pts.back());
    pts = std::move(down);
  }
  report.pr_curve = std::move(pts);
  return result;
}

}  // namespace poc
