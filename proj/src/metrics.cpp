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

#include "poc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "poc/errors.hpp"

namespace poc {

ConfusionSweep sweep(std::span<const double> scores,
                     std::span<const std::int32_t> labels) {
  if (scores.size() != labels.size())
    throw ShapeError("sweep: scores and labels differ in length");

  std::vector<std::pair<double, bool>> items;  // (score, is_positive)
  items.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] == 1)
      items.emplace_back(scores[i], true);
    else if (labels[i] == 0)
      items.emplace_back(scores[i], false);
  }

  ConfusionSweep out;
  for (const auto& [s, pos] : items) (pos ? out.total_pos : out.total_neg)++;
  if (out.total_pos == 0 || out.total_neg == 0)
    throw DegenerateLabels("sweep needs at least one positive and one negative");

  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::int64_t tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < items.size()) {
    const double threshold = items[i].first;
    // Ties share one threshold.
    while (i < items.size() && items[i].first == threshold) {
      (items[i].second ? tp : fp)++;
      ++i;
    }
    out.thresholds.push_back(threshold);
    out.tp.push_back(tp);
    out.fp.push_back(fp);
  }
  return out;
}

namespace {

// Shared sweep walk: both the exact sweep and the histogram variant reduce
// to a sequence of cumulative (tp, fp) states.
AnomalyMetrics metrics_from_cumulative(const std::vector<std::int64_t>& tp,
                                       const std::vector<std::int64_t>& fp,
                                       std::int64_t total_pos,
                                       std::int64_t total_neg) {
  AnomalyMetrics m;
  double prev_recall = 0.0;
  double ap = 0.0;
  double best_f1 = 0.0;
  double fpr95 = 1.0;
  bool fpr95_found = false;

  for (std::size_t i = 0; i < tp.size(); ++i) {
    const double precision =
        static_cast<double>(tp[i]) / static_cast<double>(tp[i] + fp[i]);
    const double recall =
        static_cast<double>(tp[i]) / static_cast<double>(total_pos);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;

    const double pr = precision + recall;
    const double f1 = pr > 0.0 ? 2.0 * precision * recall / pr : 0.0;
    best_f1 = std::max(best_f1, f1);

    if (!fpr95_found && recall + 1e-12 >= 0.95) {
      fpr95 = static_cast<double>(fp[i]) / static_cast<double>(total_neg);
      fpr95_found = true;
    }
  }
  m.auprc = ap;
  m.max_f1 = best_f1;
  m.fpr_at_95tpr = fpr95;
  return m;
}

}  // namespace

AnomalyMetrics sweep_metrics(const ConfusionSweep& s) {
  return metrics_from_cumulative(s.tp, s.fp, s.total_pos, s.total_neg);
}

double auprc(const ConfusionSweep& s) { return sweep_metrics(s).auprc; }

double fpr_at_95tpr(const ConfusionSweep& s) {
  return sweep_metrics(s).fpr_at_95tpr;
}

double max_f1(const ConfusionSweep& s) { return sweep_metrics(s).max_f1; }

HistogramAccumulator::HistogramAccumulator(int n_bins, double score_min,
                                           double score_max)
    : n_bins_(n_bins), score_min_(score_min), score_max_(score_max) {
  if (n_bins < 1) throw ConfigError("histogram: n_bins must be >= 1");
  if (!(score_min < score_max))
    throw ConfigError("histogram: score_min must be below score_max");
  pos_counts_.assign(static_cast<std::size_t>(n_bins), 0);
  neg_counts_.assign(static_cast<std::size_t>(n_bins), 0);
}

int HistogramAccumulator::bin_of(double score) const {
  const double t = (score - score_min_) / (score_max_ - score_min_);
  const int bin = static_cast<int>(std::floor(t * n_bins_));
  return std::clamp(bin, 0, n_bins_ - 1);
}

void HistogramAccumulator::add(double score, std::int32_t label) {
  if (label == 1) {
    ++pos_counts_[bin_of(score)];
    ++total_pos_;
  } else if (label == 0) {
    ++neg_counts_[bin_of(score)];
    ++total_neg_;
  } else {
    ++total_ignored_;
  }
}

void HistogramAccumulator::merge(const HistogramAccumulator& other) {
  if (other.n_bins_ != n_bins_ || other.score_min_ != score_min_ ||
      other.score_max_ != score_max_)
    throw ShapeError("histogram merge: binning mismatch");
  for (int b = 0; b < n_bins_; ++b) {
    pos_counts_[b] += other.pos_counts_[b];
    neg_counts_[b] += other.neg_counts_[b];
  }
  total_pos_ += other.total_pos_;
  total_neg_ += other.total_neg_;
  total_ignored_ += other.total_ignored_;
}

AnomalyMetrics histogram_metrics(const HistogramAccumulator& acc) {
  if (acc.total_pos() == 0 || acc.total_neg() == 0)
    throw DegenerateLabels(
        "histogram metrics need at least one positive and one negative");

  // High bins hold high scores; walk downwards, empty bins are not
  // thresholds.
  std::vector<std::int64_t> tp, fp;
  std::int64_t cum_tp = 0, cum_fp = 0;
  for (int b = acc.n_bins() - 1; b >= 0; --b) {
    const std::int64_t p = acc.pos_counts()[b];
    const std::int64_t n = acc.neg_counts()[b];
    if (p == 0 && n == 0) continue;
    cum_tp += p;
    cum_fp += n;
    tp.push_back(cum_tp);
    fp.push_back(cum_fp);
  }
  return metrics_from_cumulative(tp, fp, acc.total_pos(), acc.total_neg());
}

FiveNumberSummary five_number_summary(std::vector<double> values) {
  if (values.empty())
    throw DegenerateLabels("five-number summary of an empty population");
  std::sort(values.begin(), values.end());
  const auto quantile = [&](double p) {
    const double h = p * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(h));
    return values[lo] + (h - std::floor(h)) * (values[hi] - values[lo]);
  };
  FiveNumberSummary s;
  s.min = values.front();
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  s.max = values.back();
  return s;
}

BoxplotPair score_boxplots(std::span<const double> scores,
                           std::span<const std::int32_t> labels) {
  if (scores.size() != labels.size())
    throw ShapeError("score_boxplots: scores and labels differ in length");
  std::vector<double> id_scores, ood_scores;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] == 1)
      ood_scores.push_back(scores[i]);
    else if (labels[i] == 0)
      id_scores.push_back(scores[i]);
  }
  if (id_scores.empty() || ood_scores.empty())
    throw DegenerateLabels("boxplots need both ID and OOD pixels");
  BoxplotPair out;
  out.id = five_number_summary(std::move(id_scores));
  out.ood = five_number_summary(std::move(ood_scores));
  return out;
}

MiouResult miou(std::span<const std::int32_t> pred_labels,
                std::span<const std::int32_t> gt_labels,
                const LabelConvention& convention) {
  if (pred_labels.size() != gt_labels.size())
    throw ShapeError("miou: label rasters differ in length");

  std::unordered_map<std::int32_t, std::int64_t> tp, fp, fn, gt_count;
  std::int64_t considered = 0;
  for (std::size_t i = 0; i < gt_labels.size(); ++i) {
    const std::int32_t g = gt_labels[i];
    if (g == convention.ignore_id) continue;
    ++considered;
    ++gt_count[g];
    const std::int32_t p = pred_labels[i];
    if (p == g) {
      ++tp[g];
    } else {
      ++fn[g];
      ++fp[p];
    }
  }
  if (considered == 0)
    throw DegenerateLabels("miou: every pixel is ignored");

  MiouResult out;
  double sum = 0.0;
  for (const auto& [cls, cnt] : gt_count) {
    const double denom =
        static_cast<double>(tp[cls] + fp[cls] + fn[cls]);
    const double iou = static_cast<double>(tp[cls]) / denom;
    out.per_class[cls] = iou;
    sum += iou;
  }
  out.mean = sum / static_cast<double>(out.per_class.size());
  return out;
}

std::vector<std::pair<double, double>> pr_curve_points(
    const ConfusionSweep& s, std::size_t max_points) {
  std::vector<std::pair<double, double>> pts;
  const std::size_t n = s.size();
  const std::size_t stride = n <= max_points ? 1 : (n + max_points - 1) / max_points;
  for (std::size_t i = 0; i < n; i += stride) {
    const double precision =
        static_cast<double>(s.tp[i]) / static_cast<double>(s.tp[i] + s.fp[i]);
    const double recall =
        static_cast<double>(s.tp[i]) / static_cast<double>(s.total_pos);
    pts.emplace_back(recall, precision);
  }
  // Keep the final operating point.
  if (!pts.empty() && n > 0 && (n - 1) % stride != 0) {
    const std::size_t i = n - 1;
    pts.emplace_back(
        static_cast<double>(s.tp[i]) / static_cast<double>(s.total_pos),
        static_cast<double>(s.tp[i]) / static_cast<double>(s.tp[i] + s.fp[i]));
  }
  return pts;
}

}  // namespace poc
