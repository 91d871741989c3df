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

#include "poc/dataset_gen.hpp"

#include <json.hpp>

#include <algorithm>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>

#include "poc/errors.hpp"
#include "poc/png_io.hpp"
#include "poc/rng.hpp"
#include "poc/version.hpp"

namespace poc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string to_string(GenerationMode mode) {
  switch (mode) {
    case GenerationMode::kAnomalyTest:
      return "anomaly-test";
    case GenerationMode::kOodFinetune:
      return "ood-finetune";
    case GenerationMode::kExtend:
      return "extend";
  }
  return "anomaly-test";
}

GenerationMode generation_mode_from_string(const std::string& s) {
  if (s == "anomaly-test") return GenerationMode::kAnomalyTest;
  if (s == "ood-finetune") return GenerationMode::kOodFinetune;
  if (s == "extend") return GenerationMode::kExtend;
  throw ConfigError("unknown generation mode '" + s + "'");
}

void GenerationJob::validate() const {
  if (input_dir.empty()) throw ConfigError("job.input_dir: required");
  if (output_dir.empty()) throw ConfigError("job.output_dir: required");
  if (augmentations_per_image < 1)
    throw ConfigError("job: augmentations_per_image must be >= 1");
  if (catalogs.empty()) throw ConfigError("job: at least one catalog");
  for (const auto& b : catalogs)
    if (b.catalog.entries.empty())
      throw ConfigError("job: catalog '" + b.catalog.name + "' is empty");
  if (concurrency < 1) throw ConfigError("job: concurrency must be >= 1");
  if (id_insert_ratio < 0.0 || id_insert_ratio > 1.0)
    throw ConfigError("job: id_insert_ratio in [0, 1]");
  placement.validate();
  blend.validate();
  labels.validate();
  if (inference.steps < 1) throw ConfigError("job: steps must be >= 1");
  if (!(inference.detection_threshold > 0.0) ||
      inference.detection_threshold > 1.0)
    throw ConfigError("job: detection_threshold in (0, 1]");
}

std::string job_fingerprint(const GenerationJob& job) {
  json cats = json::array();
  for (const auto& b : job.catalogs) {
    json entries = json::array();
    for (const auto& e : b.catalog.entries)
      entries.push_back({{"prompt", e.prompt}, {"class", e.class_name}});
    cats.push_back({{"name", b.catalog.name},
                    {"role", to_string(b.role)},
                    {"class_ids", b.class_ids},
                    {"entries", entries}});
  }
  const json j{
      {"mode", to_string(job.mode)},
      {"catalogs", cats},
      {"augmentations", job.augmentations_per_image},
      {"seed", job.global_seed},
      {"placement",
       {{"min_frac", job.placement.min_frac},
        {"max_frac", job.placement.max_frac},
        {"max_attempts", job.placement.max_attempts},
        {"overlap_threshold", job.placement.overlap_threshold},
        {"mode", to_string(job.placement.placement_mode)},
        {"crop_multiple", job.placement.crop_multiple}}},
      {"blend",
       {{"sigma", job.blend.sigma},
        {"truncate", job.blend.truncate},
        {"min_object_area", job.blend.min_object_area}}},
      {"inference",
       {{"steps", job.inference.steps},
        {"guidance", job.inference.guidance},
        {"detection_threshold", job.inference.detection_threshold}}},
      {"labels",
       {{"id_class_ids", job.labels.id_class_ids},
        {"ood_id", job.labels.ood_id},
        {"ignore_id", job.labels.ignore_id},
        {"new_class_ids", job.labels.new_class_ids}}},
      {"base_ignore_ids", job.base_ignore_ids},
      {"id_insert_ratio", job.id_insert_ratio},
      {"compose", job.compose},
  };
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(j.dump())));
  return buf;
}

std::int32_t resolve_class_id(const CatalogBinding& binding,
                              const CatalogEntry& entry,
                              const LabelConvention& convention) {
  switch (binding.role) {
    case ClassRole::kOod:
      return convention.ood_id;
    case ClassRole::kIdSynthetic: {
      if (auto it = binding.class_ids.find(entry.class_name);
          it != binding.class_ids.end())
        return it->second;
      if (convention.id_class_ids.size() == 1)
        return *convention.id_class_ids.begin();
      throw ConfigError("id-synthetic class '" + entry.class_name +
                        "' needs an explicit class id");
    }
    case ClassRole::kNewClass: {
      if (auto it = binding.class_ids.find(entry.class_name);
          it != binding.class_ids.end())
        return it->second;
      if (auto it = convention.new_class_ids.find(entry.class_name);
          it != convention.new_class_ids.end())
        return it->second;
      throw ConfigError("new class '" + entry.class_name +
                        "' has no assigned id");
    }
  }
  throw ConfigError("unreachable class role");
}

namespace {

struct FlatEntry {
  const CatalogBinding* binding;
  const CatalogEntry* entry;
};

PromptSet make_prompt(const FlatEntry& pick, const LabelConvention& conv) {
  PromptSet p = build_prompt(pick.entry->prompt, pick.entry->class_name);
  p.class_role = pick.binding->role;
  p.class_id = resolve_class_id(*pick.binding, *pick.entry, conv);
  return p;
}

}  // namespace

std::vector<PromptSet> sample_prompts(const GenerationJob& job,
                                      const std::string& image_id) {
  std::vector<FlatEntry> id_pool, other_pool;
  for (const auto& b : job.catalogs) {
    auto& pool = b.role == ClassRole::kIdSynthetic ? id_pool : other_pool;
    for (const auto& e : b.catalog.entries) pool.push_back({&b, &e});
  }
  const bool mix = job.mode == GenerationMode::kAnomalyTest &&
                   !id_pool.empty() && !other_pool.empty();

  std::vector<PromptSet> out;
  out.reserve(static_cast<std::size_t>(job.augmentations_per_image));
  for (int k = 0; k < job.augmentations_per_image; ++k) {
    SampleRng rng(job.global_seed, image_id, k);
    SeedStream stream = rng.stream("prompt");
    FlatEntry pick{};
    if (mix) {
      const bool use_id = stream.next_double() < job.id_insert_ratio;
      const auto& pool = use_id ? id_pool : other_pool;
      pick = pool[stream.next_in_range(0, pool.size() - 1)];
    } else {
      const auto& pool = id_pool.empty() ? other_pool : id_pool;
      if (!id_pool.empty() && !other_pool.empty()) {
        // No mixing outside anomaly-test: uniform over the union.
        std::vector<FlatEntry> all = id_pool;
        all.insert(all.end(), other_pool.begin(), other_pool.end());
        pick = all[stream.next_in_range(0, all.size() - 1)];
      } else {
        pick = pool[stream.next_in_range(0, pool.size() - 1)];
      }
    }
    out.push_back(make_prompt(pick, job.labels));
  }
  return out;
}

namespace {

struct InputImage {
  std::string stem;
  fs::path image_path;
  fs::path label_path;  // may be empty
};

std::vector<InputImage> list_inputs(const GenerationJob& job) {
  fs::path images_dir = job.input_dir / "images";
  if (!fs::is_directory(images_dir)) images_dir = job.input_dir;
  const fs::path labels_dir = job.input_dir / "labels";

  std::vector<InputImage> inputs;
  if (!fs::is_directory(images_dir))
    throw IoError("input directory " + images_dir.string() + " not found");
  for (const auto& de : fs::directory_iterator(images_dir)) {
    if (!de.is_regular_file() || de.path().extension() != ".png") continue;
    InputImage in;
    in.stem = de.path().stem().string();
    in.image_path = de.path();
    const fs::path lp = labels_dir / (in.stem + ".png");
    if (fs::exists(lp)) in.label_path = lp;
    inputs.push_back(std::move(in));
  }
  std::sort(inputs.begin(), inputs.end(),
            [](const InputImage& a, const InputImage& b) {
              return a.stem < b.stem;
            });
  return inputs;
}

LabelMap load_base_labels(const GenerationJob& job, const InputImage& input,
                          int width, int height) {
  if (job.mode == GenerationMode::kAnomalyTest) {
    LabelMap out(width, height, 0);
    if (!input.label_path.empty()) {
      const LabelMap raw = decode_label_map(read_file_bytes(input.label_path));
      require_same_shape(raw.width(), raw.height(), width, height,
                         "base label map");
      for (std::size_t i = 0; i < raw.values().size(); ++i) {
        if (job.base_ignore_ids.count(raw.values()[i]))
          out.values()[i] = job.labels.ignore_id;
      }
    }
    return out;
  }
  if (input.label_path.empty())
    throw IoError("mode " + to_string(job.mode) +
                  " requires a label map for " + input.stem);
  const LabelMap raw = decode_label_map(read_file_bytes(input.label_path));
  require_same_shape(raw.width(), raw.height(), width, height,
                     "base label map");
  return raw;
}

struct Inserted {
  AugmentedSample sample;
  int attempts = 0;
};

// One object insertion including the retry-on-rejection loop. The attempt
// budget is shared between region sampling and generation failures.
Inserted insert_object(const ImageBuffer& image, const LabelMap& labels,
                       const PromptSet& prompt, const GenerationJob& job,
                       InpaintBackend& inpaint_backend,
                       SegmentationBackend& segment_backend,
                       const SampleRng& rng) {
  const BinaryMask valid =
      valid_area(image, prompt.location_prompt, segment_backend, job.placement,
                 job.inference.detection_threshold);

  int next_attempt = 0;
  std::string last_rejection;
  while (next_attempt < job.placement.max_attempts) {
    const PlacementOutcome outcome =
        sample_region(valid, job.placement, rng, next_attempt);
    const int accepted_attempt = next_attempt + outcome.attempts_used - 1;
    next_attempt += outcome.attempts_used;

    const std::uint64_t seed =
        rng.key("inpaint", static_cast<std::uint64_t>(accepted_attempt));
    const ImageBuffer crop_img = image.crop(outcome.crop);
    const Region region_in_crop{outcome.region.x0 - outcome.crop.x0,
                                outcome.region.y0 - outcome.crop.y0,
                                outcome.region.w, outcome.region.h};
    BinaryMask repaint(outcome.crop.w, outcome.crop.h);
    repaint.fill_region(region_in_crop);

    InpaintRequest req;
    req.crop = crop_img;
    req.mask = repaint;
    req.prompt = prompt.inpaint_prompt;
    req.seed = seed;
    req.steps = job.inference.steps;
    req.guidance = job.inference.guidance;
    const ImageBuffer edited = inpaint_backend.inpaint(req);
    require_same_shape(edited.width(), edited.height(), crop_img.width(),
                       crop_img.height(), "inpainted crop");

    BinaryMask object_mask;
    try {
      object_mask = annotate(edited, region_in_crop, prompt, segment_backend,
                             job.blend, job.inference.detection_threshold);
    } catch (const GenerationRejected& e) {
      last_rejection = e.what();
      continue;  // fresh region, shared budget
    }

    const SoftMask soft = feather(object_mask, job.blend);
    const ImageBuffer blended = blend(crop_img, edited, soft);
    AugmentedSample sample =
        paste_and_label(image, labels, outcome.crop, blended, object_mask,
                        prompt.class_id, job.labels);
    sample.prompt = prompt;
    sample.region = outcome.region;
    sample.seed = seed;
    return {std::move(sample), next_attempt};
  }
  throw GenerationRejected(last_rejection.empty()
                               ? "attempt budget exhausted"
                               : last_rejection + "; attempt budget exhausted");
}

std::string relative_to_output(const fs::path& p, const fs::path& out_dir) {
  return fs::relative(p, out_dir).generic_string();
}

// Entries produced by one task (one sample, or one whole image when
// composing).
using TaskResult = std::vector<ManifestEntry>;

}  // namespace

RunSummary run(const GenerationJob& job, InpaintBackend& inpaint_backend,
               SegmentationBackend& segment_backend) {
  job.validate();

  ManifestHeader header;
  header.tool_version = kToolVersion;
  header.mode = to_string(job.mode);
  header.global_seed = job.global_seed;
  header.config_hash = job_fingerprint(job);

  const fs::path manifest_path = job.output_dir / "manifest.jsonl";
  bool resuming = false;
  std::set<std::string> done_keys;

  if (fs::exists(job.output_dir) && !fs::is_empty(job.output_dir)) {
    if (job.resume && fs::exists(manifest_path)) {
      const Manifest existing = read_manifest(manifest_path);
      if (existing.header.config_hash != header.config_hash)
        throw ConfigError("resume: output was generated with a different config");
      for (const auto& e : existing.entries)
        if (e.accepted)
          done_keys.insert(e.image_id + "#" + std::to_string(e.augmentation));
      resuming = true;
    } else if (job.overwrite) {
      fs::remove_all(job.output_dir);
    } else {
      throw IoError("output directory " + job.output_dir.string() +
                    " is not empty (use overwrite or resume)");
    }
  }
  fs::create_directories(job.output_dir / "images");
  fs::create_directories(job.output_dir / "labels");

  const std::vector<InputImage> inputs = list_inputs(job);

  // Build the task list. Tasks are independent samples, except in compose
  // mode where a whole image is one sequential task.
  struct Task {
    std::size_t image_index;
    int augmentation;  // -1 = all augmentations (compose)
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (job.compose) {
      bool all_done = true;
      for (int k = 0; k < job.augmentations_per_image; ++k)
        all_done = all_done && done_keys.count(inputs[i].stem + "#" +
                                               std::to_string(k)) > 0;
      if (!all_done) tasks.push_back({i, -1});
    } else {
      for (int k = 0; k < job.augmentations_per_image; ++k) {
        if (!done_keys.count(inputs[i].stem + "#" + std::to_string(k)))
          tasks.push_back({i, k});
      }
    }
  }

  const auto run_single = [&](const InputImage& input, int k) -> ManifestEntry {
    ManifestEntry entry;
    entry.image_id = input.stem;
    entry.augmentation = k;
    entry.source_image = input.image_path.generic_string();
    entry.prompt = sample_prompts(job, input.stem)[static_cast<std::size_t>(k)];
    try {
      const ImageBuffer image = read_image_png(input.image_path);
      const LabelMap labels =
          load_base_labels(job, input, image.width(), image.height());
      const SampleRng rng(job.global_seed, input.stem, k);
      Inserted ins = insert_object(image, labels, entry.prompt, job,
                                   inpaint_backend, segment_backend, rng);
      const std::string name = input.stem + "_aug" + std::to_string(k) + ".png";
      const fs::path img_path = job.output_dir / "images" / name;
      const fs::path lab_path = job.output_dir / "labels" / name;
      write_image_png(img_path, ins.sample.image);
      write_file_bytes(lab_path, encode_label_map(ins.sample.labels, job.labels));
      entry.region = ins.sample.region;
      entry.crop = ins.sample.crop;
      entry.seed = ins.sample.seed;
      entry.attempts = ins.attempts;
      entry.accepted = true;
      entry.output_image = relative_to_output(img_path, job.output_dir);
      entry.output_labels = relative_to_output(lab_path, job.output_dir);
    } catch (const Error& e) {
      entry.accepted = false;
      entry.reject_reason = e.what();
      entry.attempts = job.placement.max_attempts;
    }
    return entry;
  };

  const auto run_composed = [&](const InputImage& input) -> TaskResult {
    TaskResult entries;
    std::optional<ImageBuffer> image;
    std::optional<LabelMap> labels;
    try {
      image = read_image_png(input.image_path);
      labels = load_base_labels(job, input, image->width(), image->height());
    } catch (const Error& e) {
      for (int k = 0; k < job.augmentations_per_image; ++k) {
        ManifestEntry entry;
        entry.image_id = input.stem;
        entry.augmentation = k;
        entry.source_image = input.image_path.generic_string();
        entry.accepted = false;
        entry.reject_reason = e.what();
        entries.push_back(std::move(entry));
      }
      return entries;
    }

    const std::vector<PromptSet> prompts = sample_prompts(job, input.stem);
    const std::string name = input.stem + "_composed.png";
    const fs::path img_path = job.output_dir / "images" / name;
    const fs::path lab_path = job.output_dir / "labels" / name;
    bool any_accepted = false;

    for (int k = 0; k < job.augmentations_per_image; ++k) {
      ManifestEntry entry;
      entry.image_id = input.stem;
      entry.augmentation = k;
      entry.source_image = input.image_path.generic_string();
      entry.prompt = prompts[static_cast<std::size_t>(k)];
      try {
        const SampleRng rng(job.global_seed, input.stem, k);
        Inserted ins = insert_object(*image, *labels, entry.prompt, job,
                                     inpaint_backend, segment_backend, rng);
        image = ins.sample.image;
        labels = ins.sample.labels;
        entry.region = ins.sample.region;
        entry.crop = ins.sample.crop;
        entry.seed = ins.sample.seed;
        entry.attempts = ins.attempts;
        entry.accepted = true;
        entry.output_image = relative_to_output(img_path, job.output_dir);
        entry.output_labels = relative_to_output(lab_path, job.output_dir);
        any_accepted = true;
      } catch (const Error& e) {
        entry.accepted = false;
        entry.reject_reason = e.what();
        entry.attempts = job.placement.max_attempts;
      }
      entries.push_back(std::move(entry));
    }

    if (any_accepted) {
      try {
        write_image_png(img_path, *image);
        write_file_bytes(lab_path, encode_label_map(*labels, job.labels));
      } catch (const Error& e) {
        any_accepted = false;
        for (auto& entry : entries) {
          entry.accepted = false;
          entry.reject_reason = e.what();
        }
      }
    }
    if (!any_accepted) {
      for (auto& e : entries) {
        e.output_image.clear();
        e.output_labels.clear();
      }
    }
    return entries;
  };

  // Worker pool. Results are flushed to the manifest strictly in task order
  // so the output is byte-identical no matter how workers are scheduled.
  ManifestWriter writer(manifest_path, header, resuming);
  std::vector<std::optional<TaskResult>> results(tasks.size());
  std::mutex mu;
  std::size_t next_task = 0;
  std::size_t flushed = 0;
  int accepted = 0, rejected = 0;
  std::exception_ptr failure;

  const auto worker = [&]() {
    for (;;) {
      std::size_t index;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure || next_task >= tasks.size()) return;
        index = next_task++;
      }
      TaskResult result;
      try {
        const Task& t = tasks[index];
        if (t.augmentation < 0) {
          result = run_composed(inputs[t.image_index]);
        } else {
          result.push_back(run_single(inputs[t.image_index], t.augmentation));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      results[index] = std::move(result);
      while (flushed < results.size() && results[flushed].has_value()) {
        for (const auto& e : *results[flushed]) {
          writer.append(e);
          (e.accepted ? accepted : rejected)++;
        }
        results[flushed].reset();  // free early
        ++flushed;
      }
    }
  };

  const int n_workers =
      std::max(1, std::min<int>(job.concurrency,
                                static_cast<int>(tasks.size() ? tasks.size() : 1)));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(n_workers));
  for (int i = 0; i < n_workers; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  RunSummary summary;
  summary.manifest = read_manifest(manifest_path);
  for (const auto& e : summary.manifest.entries)
    (e.accepted ? summary.accepted : summary.rejected)++;
  return summary;
}

}  // namespace poc
