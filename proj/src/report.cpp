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

#include "poc/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "poc/errors.hpp"

namespace poc {

using nlohmann::json;

namespace {

json summary_to_json(const FiveNumberSummary& s) {
  return json{{"min", s.min},
              {"q1", s.q1},
              {"median", s.median},
              {"q3", s.q3},
              {"max", s.max}};
}

FiveNumberSummary summary_from_json(const json& j) {
  FiveNumberSummary s;
  s.min = j.at("min").get<double>();
  s.q1 = j.at("q1").get<double>();
  s.median = j.at("median").get<double>();
  s.q3 = j.at("q3").get<double>();
  s.max = j.at("max").get<double>();
  return s;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_report(const std::filesystem::path& path, const ReportDocument& doc) {
  json curve = json::array();
  for (const auto& [recall, precision] : doc.report.pr_curve)
    curve.push_back({recall, precision});
  const json j{
      {"dataset", doc.report.dataset},
      {"max_f1", doc.report.max_f1},
      {"auprc", doc.report.auprc},
      {"fpr_at_95tpr", doc.report.fpr_at_95tpr},
      {"n_ood_pixels", doc.report.n_ood_pixels},
      {"n_id_pixels", doc.report.n_id_pixels},
      {"n_ignored", doc.report.n_ignored},
      {"boxplot_id", summary_to_json(doc.report.boxplot_id)},
      {"boxplot_ood", summary_to_json(doc.report.boxplot_ood)},
      {"pr_curve", curve},
      {"meta",
       {{"tool_version", doc.tool_version},
        {"scores_dir", doc.scores_dir},
        {"labels_dir", doc.labels_dir},
        {"n_bins", doc.n_bins},
        {"options_hash", doc.options_hash}}},
  };
  std::ofstream out(path);
  if (!out) throw IoError("cannot create report " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("report write failed: " + path.string());
}

ReportDocument read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("report " + path.string() + ": " + e.what());
  }
  ReportDocument doc;
  try {
    doc.report.dataset = j.at("dataset").get<std::string>();
    doc.report.max_f1 = j.at("max_f1").get<double>();
    doc.report.auprc = j.at("auprc").get<double>();
    doc.report.fpr_at_95tpr = j.at("fpr_at_95tpr").get<double>();
    doc.report.n_ood_pixels = j.at("n_ood_pixels").get<std::int64_t>();
    doc.report.n_id_pixels = j.at("n_id_pixels").get<std::int64_t>();
    doc.report.n_ignored = j.at("n_ignored").get<std::int64_t>();
    doc.report.boxplot_id = summary_from_json(j.at("boxplot_id"));
    doc.report.boxplot_ood = summary_from_json(j.at("boxplot_ood"));
    for (const auto& p : j.at("pr_curve"))
      doc.report.pr_curve.emplace_back(p.at(0).get<double>(),
                                       p.at(1).get<double>());
    const json& meta = j.at("meta");
    doc.tool_version = meta.at("tool_version").get<std::string>();
    doc.scores_dir = meta.value("scores_dir", "");
    doc.labels_dir = meta.value("labels_dir", "");
    doc.n_bins = meta.value("n_bins", 0);
    doc.options_hash = meta.value("options_hash", "");
  } catch (const json::exception& e) {
    throw IoError("report " + path.string() + ": " + e.what());
  }
  return doc;
}

void write_comparison_csv(std::vector<ReportDocument> docs,
                          const std::filesystem::path& path) {
  std::sort(docs.begin(), docs.end(),
            [](const ReportDocument& a, const ReportDocument& b) {
              return a.report.dataset < b.report.dataset;
            });
  std::ofstream out(path);
  if (!out) throw IoError("cannot create " + path.string());
  out << "dataset,max_f1,auprc,fpr_at_95tpr\n";
  for (const auto& d : docs) {
    out << csv_field(d.report.dataset) << ',' << fmt_double(d.report.max_f1)
        << ',' << fmt_double(d.report.auprc) << ','
        << fmt_double(d.report.fpr_at_95tpr) << '\n';
  }
  if (!out) throw IoError("csv write failed: " + path.string());
}

void write_pr_curve_csv(const AnomalyReport& report,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot create " + path.string());
  out << "recall,precision\n";
  for (const auto& [recall, precision] : report.pr_curve)
    out << fmt_double(recall) << ',' << fmt_double(precision) << '\n';
  if (!out) throw IoError("csv write failed: " + path.string());
}

namespace {

// Shared chart frame: 480x360 canvas with a 60px margin.
constexpr double kWidth = 480, kHeight = 360, kMargin = 60;

std::string svg_header(const std::string& title) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
    << kHeight << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << kWidth / 2
    << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"14\">"
    << title << "</text>\n";
  return s.str();
}

}  // namespace

std::string render_pr_curve_svg(const AnomalyReport& report) {
  const double x0 = kMargin, y0 = kHeight - kMargin;
  const double spanx = kWidth - 2 * kMargin, spany = kHeight - 2 * kMargin;
  const auto px = [&](double recall) { return x0 + recall * spanx; };
  const auto py = [&](double precision) { return y0 - precision * spany; };

  std::ostringstream s;
  s << svg_header(xml_escape("PR curve: " + report.dataset));
  s << "<line x1=\"" << fmt2(x0) << "\" y1=\"" << fmt2(y0) << "\" x2=\""
    << fmt2(x0 + spanx) << "\" y2=\"" << fmt2(y0)
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << fmt2(x0) << "\" y1=\"" << fmt2(y0) << "\" x2=\""
    << fmt2(x0) << "\" y2=\"" << fmt2(y0 - spany) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    s << "<text x=\"" << fmt2(px(f)) << "\" y=\"" << fmt2(y0 + 18)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"10\">"
      << fmt2(f) << "</text>\n";
    s << "<text x=\"" << fmt2(x0 - 8) << "\" y=\"" << fmt2(py(f) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << fmt2(f) << "</text>\n";
  }
  s << "<text x=\"" << fmt2(x0 + spanx / 2) << "\" y=\"" << fmt2(kHeight - 12)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"12\">recall</text>\n";
  s << "<text x=\"16\" y=\"" << fmt2(y0 - spany / 2)
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
       "transform=\"rotate(-90 16 "
    << fmt2(y0 - spany / 2) << ")\">precision</text>\n";

  s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
       "points=\"";
  for (const auto& [recall, precision] : report.pr_curve)
    s << fmt2(px(recall)) << ',' << fmt2(py(precision)) << ' ';
  s << "\"/>\n";
  char label[96];
  std::snprintf(label, sizeof(label), "AuPRC = %.4f", report.auprc);
  s << "<text x=\"" << fmt2(x0 + spanx - 4) << "\" y=\"" << fmt2(y0 - spany + 14)
    << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
    << label << "</text>\n";
  s << "</svg>\n";
  return s.str();
}

std::string render_boxplots_svg(const AnomalyReport& report) {
  const double lo = std::min(report.boxplot_id.min, report.boxplot_ood.min);
  const double hi = std::max(report.boxplot_id.max, report.boxplot_ood.max);
  const double span = hi > lo ? hi - lo : 1.0;
  const double y0 = kHeight - kMargin, spany = kHeight - 2 * kMargin;
  const auto py = [&](double v) { return y0 - (v - lo) / span * spany; };

  std::ostringstream s;
  s << svg_header(xml_escape("Anomaly scores: " + report.dataset));
  const struct {
    const FiveNumberSummary* box;
    double cx;
    const char* name;
    const char* fill;
  } plots[2] = {{&report.boxplot_id, kWidth * 0.35, "ID", "#1f77b4"},
                {&report.boxplot_ood, kWidth * 0.65, "OOD", "#d62728"}};
  const double half = 36;
  for (const auto& p : plots) {
    const FiveNumberSummary& b = *p.box;
    s << "<line x1=\"" << fmt2(p.cx) << "\" y1=\"" << fmt2(py(b.min))
      << "\" x2=\"" << fmt2(p.cx) << "\" y2=\"" << fmt2(py(b.max))
      << "\" stroke=\"black\"/>\n";
    for (double v : {b.min, b.max}) {
      s << "<line x1=\"" << fmt2(p.cx - half / 2) << "\" y1=\"" << fmt2(py(v))
        << "\" x2=\"" << fmt2(p.cx + half / 2) << "\" y2=\"" << fmt2(py(v))
        << "\" stroke=\"black\"/>\n";
    }
    s << "<rect x=\"" << fmt2(p.cx - half) << "\" y=\"" << fmt2(py(b.q3))
      << "\" width=\"" << fmt2(2 * half) << "\" height=\""
      << fmt2(py(b.q1) - py(b.q3)) << "\" fill=\"" << p.fill
      << "\" fill-opacity=\"0.35\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << fmt2(p.cx - half) << "\" y1=\"" << fmt2(py(b.median))
      << "\" x2=\"" << fmt2(p.cx + half) << "\" y2=\"" << fmt2(py(b.median))
      << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << fmt2(p.cx) << "\" y=\"" << fmt2(y0 + 18)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">"
      << p.name << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = lo + span * i / 4.0;
    s << "<text x=\"" << fmt2(kMargin - 8) << "\" y=\"" << fmt2(py(v) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << fmt2(v) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace poc
