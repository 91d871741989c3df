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

#ifndef POC_METRICS_HPP
#define POC_METRICS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "poc/labels.hpp"

namespace poc {

// Pixel labels for anomaly metrics: 1 = OOD (the positive class),
// 0 = in-distribution, anything else is ignored.

// Exact threshold sweep over the sorted unique scores, ties grouped.
// tp/fp are cumulative counts of positives/negatives scoring >= the
// threshold; they are nondecreasing as the threshold falls.
struct ConfusionSweep {
  std::vector<double> thresholds;  // strictly descending
  std::vector<std::int64_t> tp;
  std::vector<std::int64_t> fp;
  std::int64_t total_pos = 0;
  std::int64_t total_neg = 0;

  std::int64_t fn(std::size_t i) const { return total_pos - tp[i]; }
  std::int64_t tn(std::size_t i) const { return total_neg - fp[i]; }
  std::size_t size() const { return thresholds.size(); }
};

// Builds the sweep. Throws DegenerateLabels unless at least one positive and
// one negative survive after dropping ignored pixels.
ConfusionSweep sweep(std::span<const double> scores,
                     std::span<const std::int32_t> labels);

// Average precision: sum over thresholds of (R_n - R_{n-1}) * P_n with
// R_0 = 0. Step-wise, no interpolation.
double auprc(const ConfusionSweep& sweep);

// False-positive rate at the largest threshold whose recall reaches
// 95%; the achieved operating point, no interpolation.
double fpr_at_95tpr(const ConfusionSweep& sweep);

// Maximum F1 over all thresholds; F1 is 0 where P + R is 0.
double max_f1(const ConfusionSweep& sweep);

// Streaming fixed-bin histogram of scores split by class. Mergeable, so
// per-image accumulation can run in parallel and reduce in any order.
class HistogramAccumulator {
 public:
  HistogramAccumulator(int n_bins, double score_min, double score_max);

  void add(double score, std::int32_t label);
  void merge(const HistogramAccumulator& other);

  int n_bins() const { return n_bins_; }
  double score_min() const { return score_min_; }
  double score_max() const { return score_max_; }
  const std::vector<std::int64_t>& pos_counts() const { return pos_counts_; }
  const std::vector<std::int64_t>& neg_counts() const { return neg_counts_; }
  std::int64_t total_pos() const { return total_pos_; }
  std::int64_t total_neg() const { return total_neg_; }
  std::int64_t total_ignored() const { return total_ignored_; }

  int bin_of(double score) const;

 private:
  int n_bins_;
  double score_min_;
  double score_max_;
  std::vector<std::int64_t> pos_counts_;
  std::vector<std::int64_t> neg_counts_;
  std::int64_t total_pos_ = 0;
  std::int64_t total_neg_ = 0;
  std::int64_t total_ignored_ = 0;
};

struct AnomalyMetrics {
  double max_f1 = 0.0;
  double auprc = 0.0;
  double fpr_at_95tpr = 0.0;
};

// Same formulas as the exact sweep with bins playing the role of grouped
// thresholds. Equals the exact sweep whenever no two distinct scores share
// a bin; otherwise it is a documented approximation that converges as
// n_bins grows.
AnomalyMetrics histogram_metrics(const HistogramAccumulator& acc);

AnomalyMetrics sweep_metrics(const ConfusionSweep& sweep);

// Five-number summary with linearly interpolated quartiles.
struct FiveNumberSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

FiveNumberSummary five_number_summary(std::vector<double> values);

struct BoxplotPair {
  FiveNumberSummary id;
  FiveNumberSummary ood;
};

// Distribution summaries of the ID and OOD score populations.
BoxplotPair score_boxplots(std::span<const double> scores,
                           std::span<const std::int32_t> labels);

struct MiouResult {
  std::map<std::int32_t, double> per_class;  // classes present in GT
  double mean = 0.0;
};

// Closed-set mean intersection-over-union. Pixels whose GT value is the
// convention's ignore id are excluded; the mean runs over classes present
// in the ground truth.
MiouResult miou(std::span<const std::int32_t> pred_labels,
                std::span<const std::int32_t> gt_labels,
                const LabelConvention& convention);

// Full per-dataset evaluation record.
struct AnomalyReport {
  std::string dataset;
  double max_f1 = 0.0;
  double auprc = 0.0;
  double fpr_at_95tpr = 0.0;
  std::int64_t n_ood_pixels = 0;
  std::int64_t n_id_pixels = 0;
  std::int64_t n_ignored = 0;
  FiveNumberSummary boxplot_id;
  FiveNumberSummary boxplot_ood;
  // (recall, precision) pairs in sweep order, possibly downsampled.
  std::vector<std::pair<double, double>> pr_curve;
};

// PR points from a sweep, downsampled to at most max_points entries.
std::vector<std::pair<double, double>> pr_curve_points(
    const ConfusionSweep& sweep, std::size_t max_points = 512);

}  // namespace poc

#endif  // POC_METRICS_HPP
