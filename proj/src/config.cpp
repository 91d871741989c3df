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

#include "poc/config.hpp"

#include <json.hpp>

#include <fstream>

#include "poc/errors.hpp"

namespace poc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ConfigError(path + ": " + why);
}

void check_object(const json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(path + "." + key, "unknown key");
  }
}

template <typename T>
T get_as(const json& j, const std::string& path);

template <>
std::string get_as<std::string>(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

template <>
bool get_as<bool>(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

template <>
double get_as<double>(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

template <>
int get_as<int>(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

template <>
std::uint64_t get_as<std::uint64_t>(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !j.is_number_integer())
    fail(path, "expected an unsigned integer");
  if (j.is_number_integer() && j.get<std::int64_t>() < 0)
    fail(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

template <typename T, typename F>
void maybe(const json& obj, const char* key, const std::string& path, F&& set) {
  if (auto it = obj.find(key); it != obj.end())
    set(get_as<T>(*it, path + "." + key));
}

PlacementConfig parse_placement(const json& j, const std::string& path) {
  check_object(j, path,
               {"min_frac", "max_frac", "max_attempts", "overlap_threshold",
                "placement_mode", "crop_multiple"});
  PlacementConfig cfg;
  maybe<double>(j, "min_frac", path, [&](double v) { cfg.min_frac = v; });
  maybe<double>(j, "max_frac", path, [&](double v) { cfg.max_frac = v; });
  maybe<int>(j, "max_attempts", path, [&](int v) { cfg.max_attempts = v; });
  maybe<double>(j, "overlap_threshold", path,
                [&](double v) { cfg.overlap_threshold = v; });
  maybe<std::string>(j, "placement_mode", path, [&](const std::string& v) {
    cfg.placement_mode = placement_mode_from_string(v);
  });
  maybe<int>(j, "crop_multiple", path, [&](int v) { cfg.crop_multiple = v; });
  return cfg;
}

BlendConfig parse_blend(const json& j, const std::string& path) {
  check_object(j, path, {"sigma", "truncate", "min_object_area"});
  BlendConfig cfg;
  maybe<double>(j, "sigma", path, [&](double v) { cfg.sigma = v; });
  maybe<double>(j, "truncate", path, [&](double v) { cfg.truncate = v; });
  maybe<double>(j, "min_object_area", path,
                [&](double v) { cfg.min_object_area = v; });
  return cfg;
}

LabelConvention parse_labels(const json& j, const std::string& path) {
  check_object(j, path,
               {"id_class_ids", "ood_id", "ignore_id", "new_class_ids"});
  LabelConvention conv;
  if (auto it = j.find("id_class_ids"); it != j.end()) {
    if (!it->is_array()) fail(path + ".id_class_ids", "expected an array");
    conv.id_class_ids.clear();
    for (std::size_t i = 0; i < it->size(); ++i)
      conv.id_class_ids.insert(get_as<int>(
          (*it)[i], path + ".id_class_ids[" + std::to_string(i) + "]"));
  }
  maybe<std::int32_t>(j, "ood_id", path, [&](std::int32_t v) { conv.ood_id = v; });
  maybe<std::int32_t>(j, "ignore_id", path,
                      [&](std::int32_t v) { conv.ignore_id = v; });
  if (auto it = j.find("new_class_ids"); it != j.end()) {
    if (!it->is_object()) fail(path + ".new_class_ids", "expected an object");
    for (const auto& [name, id] : it->items())
      conv.new_class_ids[name] =
          get_as<int>(id, path + ".new_class_ids." + name);
  }
  return conv;
}

CatalogBinding parse_catalog(const json& j, const std::string& path) {
  check_object(j, path, {"name", "role", "entries", "class_ids"});
  CatalogBinding binding;
  const bool has_name = j.contains("name");
  const bool has_entries = j.contains("entries");
  if (has_entries) {
    binding.catalog.name =
        has_name ? get_as<std::string>(j.at("name"), path + ".name") : "inline";
    const json& entries = j.at("entries");
    if (!entries.is_array()) fail(path + ".entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string epath = path + ".entries[" + std::to_string(i) + "]";
      check_object(entries[i], epath, {"prompt", "class"});
      CatalogEntry e;
      e.prompt = get_as<std::string>(entries[i].at("prompt"), epath + ".prompt");
      e.class_name = entries[i].contains("class")
                         ? get_as<std::string>(entries[i].at("class"),
                                               epath + ".class")
                         : e.prompt;
      binding.catalog.entries.push_back(std::move(e));
    }
  } else if (has_name) {
    const std::string name = get_as<std::string>(j.at("name"), path + ".name");
    try {
      binding.catalog = load_catalog(name);
    } catch (const CatalogNotFound& e) {
      fail(path + ".name", e.what());
    }
  } else {
    fail(path, "needs either a built-in 'name' or inline 'entries'");
  }
  if (!j.contains("role")) fail(path + ".role", "missing");
  binding.role = class_role_from_string(
      get_as<std::string>(j.at("role"), path + ".role"));
  if (auto it = j.find("class_ids"); it != j.end()) {
    if (!it->is_object()) fail(path + ".class_ids", "expected an object");
    for (const auto& [name, id] : it->items())
      binding.class_ids[name] =
          get_as<int>(id, path + ".class_ids." + name);
  }
  return binding;
}

GenerationJob parse_job(const json& j, const std::string& path) {
  check_object(j, path,
               {"mode", "input_dir", "output_dir", "catalogs",
                "augmentations_per_image", "global_seed", "placement", "blend",
                "inference", "labels", "base_ignore_ids", "id_insert_ratio",
                "compose", "concurrency", "overwrite", "resume"});
  GenerationJob job;
  maybe<std::string>(j, "mode", path, [&](const std::string& v) {
    job.mode = generation_mode_from_string(v);
  });
  maybe<std::string>(j, "input_dir", path,
                     [&](const std::string& v) { job.input_dir = v; });
  maybe<std::string>(j, "output_dir", path,
                     [&](const std::string& v) { job.output_dir = v; });
  if (auto it = j.find("catalogs"); it != j.end()) {
    if (!it->is_array()) fail(path + ".catalogs", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      job.catalogs.push_back(parse_catalog(
          (*it)[i], path + ".catalogs[" + std::to_string(i) + "]"));
  }
  maybe<int>(j, "augmentations_per_image", path,
             [&](int v) { job.augmentations_per_image = v; });
  maybe<std::uint64_t>(j, "global_seed", path,
                       [&](std::uint64_t v) { job.global_seed = v; });
  if (auto it = j.find("placement"); it != j.end())
    job.placement = parse_placement(*it, path + ".placement");
  if (auto it = j.find("blend"); it != j.end())
    job.blend = parse_blend(*it, path + ".blend");
  if (auto it = j.find("inference"); it != j.end()) {
    const std::string ipath = path + ".inference";
    check_object(*it, ipath, {"steps", "guidance", "detection_threshold"});
    maybe<int>(*it, "steps", ipath, [&](int v) { job.inference.steps = v; });
    maybe<double>(*it, "guidance", ipath,
                  [&](double v) { job.inference.guidance = v; });
    maybe<double>(*it, "detection_threshold", ipath,
                  [&](double v) { job.inference.detection_threshold = v; });
  }

  // Label convention defaults track the mode.
  switch (job.mode) {
    case GenerationMode::kAnomalyTest:
      job.labels = LabelConvention::anomaly_test_default();
      break;
    case GenerationMode::kOodFinetune:
    case GenerationMode::kExtend:
      job.labels = LabelConvention::ood_finetune_default();
      break;
  }
  if (auto it = j.find("labels"); it != j.end())
    job.labels = parse_labels(*it, path + ".labels");

  // New classes without explicit ids get consecutive ids after the base
  // training ids.
  std::int32_t next_id = job.labels.id_class_ids.empty()
                             ? 1
                             : *job.labels.id_class_ids.rbegin() + 1;
  for (const auto& [name, id] : job.labels.new_class_ids)
    next_id = std::max(next_id, id + 1);
  for (const auto& binding : job.catalogs) {
    if (binding.role != ClassRole::kNewClass) continue;
    for (const auto& cls : binding.catalog.class_names()) {
      if (binding.class_ids.count(cls) || job.labels.new_class_ids.count(cls))
        continue;
      while (next_id == job.labels.ood_id || next_id == job.labels.ignore_id)
        ++next_id;
      job.labels.new_class_ids[cls] = next_id++;
    }
  }

  if (auto it = j.find("base_ignore_ids"); it != j.end()) {
    if (!it->is_array()) fail(path + ".base_ignore_ids", "expected an array");
    job.base_ignore_ids.clear();
    for (std::size_t i = 0; i < it->size(); ++i)
      job.base_ignore_ids.insert(get_as<int>(
          (*it)[i], path + ".base_ignore_ids[" + std::to_string(i) + "]"));
  }
  maybe<double>(j, "id_insert_ratio", path,
                [&](double v) { job.id_insert_ratio = v; });
  maybe<bool>(j, "compose", path, [&](bool v) { job.compose = v; });
  maybe<int>(j, "concurrency", path, [&](int v) { job.concurrency = v; });
  maybe<bool>(j, "overwrite", path, [&](bool v) { job.overwrite = v; });
  maybe<bool>(j, "resume", path, [&](bool v) { job.resume = v; });
  return job;
}

BackendSettings parse_backends(const json& j, const std::string& path) {
  check_object(j, path,
               {"mock", "base_url", "timeout_s", "retries", "backoff_ms",
                "backoff_factor"});
  BackendSettings s;
  maybe<bool>(j, "mock", path, [&](bool v) { s.mock = v; });
  maybe<std::string>(j, "base_url", path,
                     [&](const std::string& v) { s.http.base_url = v; });
  maybe<double>(j, "timeout_s", path,
                [&](double v) { s.http.timeout_s = v; });
  maybe<int>(j, "retries", path, [&](int v) { s.http.max_attempts = v; });
  maybe<double>(j, "backoff_ms", path,
                [&](double v) { s.http.backoff_initial_ms = v; });
  maybe<double>(j, "backoff_factor", path,
                [&](double v) { s.http.backoff_factor = v; });
  if (s.http.max_attempts < 1)
    fail(path + ".retries", "must be at least 1");
  return s;
}

EvalSettings parse_eval(const json& j, const std::string& path) {
  check_object(j, path,
               {"scores_dir", "labels_dir", "out_path", "n_bins", "dataset"});
  EvalSettings s;
  maybe<std::string>(j, "scores_dir", path,
                     [&](const std::string& v) { s.scores_dir = v; });
  maybe<std::string>(j, "labels_dir", path,
                     [&](const std::string& v) { s.labels_dir = v; });
  maybe<std::string>(j, "out_path", path,
                     [&](const std::string& v) { s.out_path = v; });
  maybe<int>(j, "n_bins", path, [&](int v) { s.n_bins = v; });
  maybe<std::string>(j, "dataset", path,
                     [&](const std::string& v) { s.dataset = v; });
  if (s.n_bins < 0) fail(path + ".n_bins", "must be >= 0");
  return s;
}

}  // namespace

AppConfig parse_app_config(const std::string& text,
                           const ConfigOverrides& o) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected an object");

  if (o.mode) j["job"]["mode"] = *o.mode;
  if (o.seed) j["job"]["global_seed"] = *o.seed;
  if (o.input_dir) j["job"]["input_dir"] = *o.input_dir;
  if (o.output_dir) j["job"]["output_dir"] = *o.output_dir;
  if (o.augmentations) j["job"]["augmentations_per_image"] = *o.augmentations;
  if (o.concurrency) j["job"]["concurrency"] = *o.concurrency;
  if (o.compose) j["job"]["compose"] = *o.compose;
  if (o.overwrite) j["job"]["overwrite"] = *o.overwrite;
  if (o.resume) j["job"]["resume"] = *o.resume;
  if (o.placement_mode) j["job"]["placement"]["placement_mode"] = *o.placement_mode;
  if (o.min_frac) j["job"]["placement"]["min_frac"] = *o.min_frac;
  if (o.max_frac) j["job"]["placement"]["max_frac"] = *o.max_frac;
  if (o.max_attempts) j["job"]["placement"]["max_attempts"] = *o.max_attempts;
  if (o.overlap_threshold)
    j["job"]["placement"]["overlap_threshold"] = *o.overlap_threshold;
  if (o.crop_multiple) j["job"]["placement"]["crop_multiple"] = *o.crop_multiple;
  if (o.mock) j["backends"]["mock"] = *o.mock;
  if (o.backend_url) j["backends"]["base_url"] = *o.backend_url;

  check_object(j, "config", {"job", "backends", "eval", "log_level"});
  AppConfig config;
  if (auto it = j.find("job"); it != j.end())
    config.job = parse_job(*it, "job");
  if (auto it = j.find("backends"); it != j.end())
    config.backends = parse_backends(*it, "backends");
  if (auto it = j.find("eval"); it != j.end())
    config.eval = parse_eval(*it, "eval");
  if (auto it = j.find("log_level"); it != j.end()) {
    config.log_level = get_as<std::string>(*it, "log_level");
    if (config.log_level != "debug" && config.log_level != "info" &&
        config.log_level != "warning" && config.log_level != "error")
      fail("log_level", "expected debug|info|warning|error");
  }
  return config;
}

AppConfig load_app_config(const std::filesystem::path& path,
                          const ConfigOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_app_config(text, overrides);
}

}  // namespace poc
