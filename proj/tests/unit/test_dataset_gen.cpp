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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "poc/dataset_gen.hpp"
#include "poc/mock_backend.hpp"
#include "poc/png_io.hpp"
#include "support/fixtures.hpp"
#include "support/temp_dir.hpp"

using namespace poc;

namespace {

// Object prompts whose mock colors stay far from the road color and from
// each other; asserted below so mask recovery stays exact.
const std::vector<std::string> kSafePrompts = {"garbage bag", "wheelie bin",
                                               "stroller", "suitcase"};

CatalogBinding safe_ood_catalog() {
  CatalogBinding b;
  b.catalog.name = "test-ood";
  for (const auto& p : kSafePrompts) b.catalog.entries.push_back({p, p});
  b.role = ClassRole::kOod;
  return b;
}

GenerationJob base_job(const std::filesystem::path& input,
                       const std::filesystem::path& output) {
  GenerationJob job;
  job.mode = GenerationMode::kAnomalyTest;
  job.input_dir = input;
  job.output_dir = output;
  job.catalogs = {safe_ood_catalog()};
  job.augmentations_per_image = 3;
  job.global_seed = 11;
  job.placement.min_frac = 0.08;
  job.placement.max_frac = 0.2;
  job.placement.crop_multiple = 32;
  job.blend.sigma = 2.0;
  job.concurrency = 2;
  return job;
}

int color_distance(const std::array<std::uint8_t, 3>& a,
                   const std::array<std::uint8_t, 3>& b) {
  int d = 0;
  for (int c = 0; c < 3; ++c)
    d = std::max(d, std::abs(static_cast<int>(a[c]) - static_cast<int>(b[c])));
  return d;
}

}  // namespace

TEST_CASE("fixture prompts are color-safe against the road") {
  const auto road = mock_prompt_color("the road");
  for (const auto& p : kSafePrompts)
    CHECK(color_distance(mock_prompt_color(p), road) >
          2 * MockBackend::kColorTolerance);
}

TEST_CASE("prompt sampling is deterministic and uniform") {
  testing::TempDir dir("gen");
  GenerationJob job = base_job(dir / "in", dir / "out");

  SUBCASE("single-entry catalog repeats the prompt") {
    job.catalogs[0].catalog.entries = {{"cat", "cat"}};
    const auto prompts = sample_prompts(job, "img0");
    REQUIRE(prompts.size() == 3);
    for (const auto& p : prompts) CHECK(p.object_prompt == "cat");
  }

  SUBCASE("fixed seed gives identical lists") {
    const auto a = sample_prompts(job, "img0");
    const auto b = sample_prompts(job, "img0");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    CHECK(sample_prompts(job, "img1") != a);
  }

  SUBCASE("draws over a 25-entry catalog are uniform within 3 sigma") {
    job.catalogs = {CatalogBinding{load_catalog("poc-alt-25"), ClassRole::kOod, {}}};
    job.augmentations_per_image = 1;
    std::map<std::string, int> freq;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
      const auto prompts = sample_prompts(job, "u" + std::to_string(i));
      freq[prompts[0].object_prompt]++;
    }
    CHECK(freq.size() == 25);
    const double expected = n / 25.0;
    const double sigma = std::sqrt(n * (1.0 / 25) * (24.0 / 25));
    for (const auto& [prompt, count] : freq)
      CHECK(std::fabs(count - expected) <= 3.0 * sigma);
  }

  SUBCASE("ood draws get the ood id, bird gets unconstrained placement") {
    job.catalogs = {CatalogBinding{load_catalog("poc-alt-25"), ClassRole::kOod, {}}};
    for (int i = 0; i < 50; ++i) {
      for (const auto& p : sample_prompts(job, "b" + std::to_string(i))) {
        CHECK(p.class_id == job.labels.ood_id);
        if (p.object_prompt == "bird flying")
          CHECK(p.location_prompt == kUnconstrainedLocation);
        else
          CHECK(p.location_prompt == "the road");
      }
    }
  }
}

TEST_CASE("id-synthetic class ids resolve explicitly or from a single-id set") {
  testing::TempDir dir("gen");
  GenerationJob job = base_job(dir / "in", dir / "out");
  CatalogBinding binding;
  binding.catalog.name = "cs";
  binding.catalog.entries = {{"car", "car"}, {"person", "person"}};
  binding.role = ClassRole::kIdSynthetic;

  SUBCASE("explicit per-class ids win") {
    binding.class_ids = {{"car", 13}, {"person", 11}};
    CHECK(resolve_class_id(binding, binding.catalog.entries[0], job.labels) == 13);
    CHECK(resolve_class_id(binding, binding.catalog.entries[1], job.labels) == 11);
  }
  SUBCASE("a single-id convention needs no map") {
    CHECK(resolve_class_id(binding, binding.catalog.entries[0], job.labels) == 0);
  }
  SUBCASE("a multi-id convention without a map is a config error") {
    job.labels = LabelConvention::ood_finetune_default();
    CHECK_THROWS_AS(
        resolve_class_id(binding, binding.catalog.entries[0], job.labels),
        ConfigError);
  }
}

TEST_CASE("anomaly-test run: counting contract and exact labels") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 2, 96, 96, /*with_road=*/true);
  GenerationJob job = base_job(dir / "in", dir / "out");

  MockBackend backend;
  const RunSummary summary = run(job, backend, backend);

  CHECK(summary.accepted == 6);
  CHECK(summary.rejected == 0);
  REQUIRE(summary.manifest.entries.size() == 6);

  int outputs = 0;
  for (const auto& de :
       std::filesystem::directory_iterator(dir / "out" / "images"))
    outputs += de.is_regular_file();
  CHECK(outputs == 6);

  for (const auto& e : summary.manifest.entries) {
    REQUIRE(e.accepted);
    CHECK(e.prompt.class_id == 1);

    // Oracle: recompute the ellipse from the manifest provenance.
    const Region region_in_crop{e.region.x0 - e.crop.x0,
                                e.region.y0 - e.crop.y0, e.region.w,
                                e.region.h};
    const EllipseSpec spec =
        mock_render_spec(e.prompt.object_prompt, region_in_crop, e.seed);

    const LabelMap labels = decode_label_map(
        read_file_bytes(dir / "out" / e.output_labels));
    const ImageBuffer out_img = read_image_png(dir / "out" / e.output_image);
    const ImageBuffer in_img =
        read_image_png(dir / "in" / "images" / (e.image_id + ".png"));

    for (int y = 0; y < labels.height(); ++y) {
      for (int x = 0; x < labels.width(); ++x) {
        const bool in_ellipse =
            e.crop.contains(x, y) &&
            region_in_crop.contains(x - e.crop.x0, y - e.crop.y0) &&
            spec.covers(x - e.crop.x0, y - e.crop.y0);
        CHECK(labels.get(x, y) == (in_ellipse ? 1 : 0));
        if (!e.crop.contains(x, y)) {
          // Locality: nothing changes outside the crop.
          CHECK(out_img.at(x, y)[0] == in_img.at(x, y)[0]);
          CHECK(out_img.at(x, y)[1] == in_img.at(x, y)[1]);
          CHECK(out_img.at(x, y)[2] == in_img.at(x, y)[2]);
        }
      }
    }
  }
}

TEST_CASE("compose mode writes one multi-object image per input") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 2, 96, 96, true);
  GenerationJob job = base_job(dir / "in", dir / "out");
  job.compose = true;

  MockBackend backend;
  const RunSummary summary = run(job, backend, backend);
  CHECK(summary.accepted == 6);

  int outputs = 0;
  for (const auto& de :
       std::filesystem::directory_iterator(dir / "out" / "images"))
    outputs += de.is_regular_file();
  CHECK(outputs == 2);

  // All three entries of an image point at the same composed output.
  std::map<std::string, std::set<std::string>> by_image;
  for (const auto& e : summary.manifest.entries)
    by_image[e.image_id].insert(e.output_image);
  for (const auto& [id, paths] : by_image) CHECK(paths.size() == 1);
}

TEST_CASE("a segmenter that never detects rejects everything") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 1, 96, 96, true);
  GenerationJob job = base_job(dir / "in", dir / "out");
  job.placement.placement_mode = PlacementMode::kRandom;
  job.placement.max_attempts = 4;

  MockBackend inpaint;
  NeverDetectBackend never;
  const RunSummary summary = run(job, inpaint, never);
  CHECK(summary.accepted == 0);
  CHECK(summary.rejected == 3);
  CHECK(std::filesystem::is_empty(dir / "out" / "images"));
  for (const auto& e : summary.manifest.entries) {
    CHECK_FALSE(e.accepted);
    CHECK(e.output_image.empty());
    CHECK(e.attempts == 4);
    CHECK(!e.reject_reason.empty());
  }
}

TEST_CASE("identical runs at concurrency 1 and 8 are byte-identical") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 2, 96, 96, true);

  GenerationJob job1 = base_job(dir / "in", dir / "out1");
  job1.concurrency = 1;
  GenerationJob job8 = base_job(dir / "in", dir / "out8");
  job8.concurrency = 8;

  MockBackend backend;
  run(job1, backend, backend);
  run(job8, backend, backend);

  // Compare the full trees byte for byte.
  std::map<std::string, std::vector<std::uint8_t>> tree1, tree8;
  for (const auto& de :
       std::filesystem::recursive_directory_iterator(dir / "out1"))
    if (de.is_regular_file())
      tree1[std::filesystem::relative(de.path(), dir / "out1").string()] =
          read_file_bytes(de.path());
  for (const auto& de :
       std::filesystem::recursive_directory_iterator(dir / "out8"))
    if (de.is_regular_file())
      tree8[std::filesystem::relative(de.path(), dir / "out8").string()] =
          read_file_bytes(de.path());
  REQUIRE(tree1.size() == tree8.size());
  for (const auto& [rel, bytes] : tree1) {
    REQUIRE(tree8.count(rel));
    CHECK(tree8.at(rel) == bytes);
  }
}

TEST_CASE("output collision needs overwrite; resume skips accepted work") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 1, 96, 96, true);
  GenerationJob job = base_job(dir / "in", dir / "out");
  MockBackend backend;
  const RunSummary first = run(job, backend, backend);
  CHECK(first.accepted == 3);

  SUBCASE("collision refused") {
    CHECK_THROWS_AS(run(job, backend, backend), IoError);
  }
  SUBCASE("overwrite regenerates") {
    job.overwrite = true;
    const RunSummary again = run(job, backend, backend);
    CHECK(again.accepted == 3);
    CHECK(again.manifest.entries.size() == 3);
  }
  SUBCASE("resume does nothing when everything is done") {
    job.resume = true;
    const RunSummary resumed = run(job, backend, backend);
    CHECK(resumed.accepted == 3);
    CHECK(resumed.manifest.entries.size() == 3);
  }
  SUBCASE("resume with a different config is refused") {
    job.resume = true;
    job.global_seed = 999;
    CHECK_THROWS_AS(run(job, backend, backend), ConfigError);
  }
}

TEST_CASE("id-synthetic objects never get the ood id") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 1, 96, 96, true);
  GenerationJob job = base_job(dir / "in", dir / "out");
  CatalogBinding id_binding;
  id_binding.catalog.name = "test-id";
  id_binding.catalog.entries = {{"suitcase", "suitcase"}};  // color-safe
  id_binding.role = ClassRole::kIdSynthetic;
  job.catalogs.push_back(id_binding);
  job.id_insert_ratio = 1.0;  // force ID draws

  MockBackend backend;
  const RunSummary summary = run(job, backend, backend);
  CHECK(summary.accepted == 3);
  for (const auto& e : summary.manifest.entries) {
    CHECK(e.prompt.class_role == ClassRole::kIdSynthetic);
    CHECK(e.prompt.class_id == 0);  // the single ID class
    const LabelMap labels =
        decode_label_map(read_file_bytes(dir / "out" / e.output_labels));
    for (const auto v : labels.values()) CHECK(v != job.labels.ood_id);
  }
}

TEST_CASE("anomaly-test maps base ignore ids into the ground truth") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 1, 96, 96, true);
  std::filesystem::create_directories(dir / "in" / "labels");

  GenerationJob job = base_job(dir / "in", dir / "out");
  job.augmentations_per_image = 1;
  job.base_ignore_ids = {7, 255};

  // Base labels in the source dataset's scheme: train ids plus two values
  // that must map to ignore.
  LabelMap base(96, 96, 3);
  for (int x = 0; x < 96; ++x) base.set(x, 0, 7);
  for (int x = 0; x < 96; ++x) base.set(x, 1, 255);
  LabelConvention base_conv;
  base_conv.id_class_ids = {3, 7};
  base_conv.ood_id = 254;
  base_conv.ignore_id = 255;
  write_file_bytes(dir / "in" / "labels" / "img0.png",
                   encode_label_map(base, base_conv));

  MockBackend backend;
  const RunSummary summary = run(job, backend, backend);
  REQUIRE(summary.accepted == 1);
  const auto& e = summary.manifest.entries[0];
  const LabelMap out =
      decode_label_map(read_file_bytes(dir / "out" / e.output_labels));
  // Rows 0 and 1 were base-ignore; everything else is ID except the object.
  for (int x = 0; x < 96; ++x) {
    if (!e.crop.contains(x, 0)) CHECK(out.get(x, 0) == 255);
    if (!e.crop.contains(x, 1)) CHECK(out.get(x, 1) == 255);
  }
  std::size_t ones = 0;
  for (const auto v : out.values()) ones += v == 1;
  CHECK(ones > 0);
}

TEST_CASE("ood-finetune requires base labels and preserves them") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 1, 96, 96, true);
  GenerationJob job = base_job(dir / "in", dir / "out");
  job.mode = GenerationMode::kOodFinetune;
  job.labels = LabelConvention::ood_finetune_default();

  MockBackend backend;

  SUBCASE("missing label maps reject the samples") {
    const RunSummary summary = run(job, backend, backend);
    CHECK(summary.accepted == 0);
    CHECK(summary.rejected == 3);
  }

  SUBCASE("base labels survive outside the object mask") {
    std::filesystem::create_directories(dir / "in" / "labels");
    LabelMap base(96, 96, 7);  // arbitrary valid train id
    for (int x = 0; x < 96; ++x) base.set(x, 0, 255);  // an ignore row
    write_file_bytes(dir / "in" / "labels" / "img0.png",
                     encode_label_map(base, job.labels));
    const RunSummary summary = run(job, backend, backend);
    CHECK(summary.accepted == 3);
    for (const auto& e : summary.manifest.entries) {
      const LabelMap out =
          decode_label_map(read_file_bytes(dir / "out" / e.output_labels));
      CHECK(e.prompt.class_id == 254);
      std::size_t ood_pixels = 0;
      for (int y = 0; y < 96; ++y)
        for (int x = 0; x < 96; ++x) {
          if (out.get(x, y) == 254) {
            ++ood_pixels;
            CHECK(e.crop.contains(x, y));
          } else {
            CHECK(out.get(x, y) == base.get(x, y));
          }
        }
      CHECK(ood_pixels > 0);
    }
  }
}

TEST_CASE("extend mode writes the assigned new-class ids") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 1, 96, 96, true);
  std::filesystem::create_directories(dir / "in" / "labels");

  GenerationJob job = base_job(dir / "in", dir / "out");
  job.mode = GenerationMode::kExtend;
  job.labels = LabelConvention::extend_default({"suitcase"});
  CatalogBinding binding;
  binding.catalog.name = "new";
  binding.catalog.entries = {{"suitcase", "suitcase"}};
  binding.role = ClassRole::kNewClass;
  job.catalogs = {binding};
  job.augmentations_per_image = 1;

  LabelMap base(96, 96, 0);
  write_file_bytes(dir / "in" / "labels" / "img0.png",
                   encode_label_map(base, job.labels));

  MockBackend backend;
  const RunSummary summary = run(job, backend, backend);
  REQUIRE(summary.accepted == 1);
  const auto& e = summary.manifest.entries[0];
  CHECK(e.prompt.class_id == 19);
  const LabelMap out =
      decode_label_map(read_file_bytes(dir / "out" / e.output_labels));
  std::size_t count19 = 0;
  for (const auto v : out.values()) count19 += v == 19;
  CHECK(count19 > 0);
}

TEST_CASE("an unreadable input image is recorded and the run continues") {
  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 1, 96, 96, true);
  write_file_bytes(dir / "in" / "images" / "broken.png",
                   {'n', 'o', 't', ' ', 'a', ' ', 'p', 'n', 'g'});
  GenerationJob job = base_job(dir / "in", dir / "out");
  job.augmentations_per_image = 1;
  MockBackend backend;
  const RunSummary summary = run(job, backend, backend);
  CHECK(summary.accepted == 1);   // the good image
  CHECK(summary.rejected == 1);   // the broken one
  for (const auto& e : summary.manifest.entries)
    if (e.image_id == "broken") CHECK_FALSE(e.accepted);
}

TEST_CASE("a backend failure skips that sample and the run continues") {
  // The inpainting backend blows up for one specific image; every other
  // sample still completes.
  struct FlakyInpaint : InpaintBackend {
    MockBackend inner;
    int calls = 0;
    ImageBuffer inpaint(const InpaintRequest& req) override {
      if (calls++ % 2 == 0)
        throw BackendError("injected transport failure", true);
      return inner.inpaint(req);
    }
  };

  testing::TempDir dir("gen");
  testing::write_fixture_images(dir / "in", 2, 96, 96, true);
  GenerationJob job = base_job(dir / "in", dir / "out");
  job.augmentations_per_image = 2;
  job.concurrency = 1;  // make the failing call sequence deterministic

  FlakyInpaint inpaint;
  MockBackend segment;
  const RunSummary summary = run(job, inpaint, segment);
  CHECK(summary.accepted == 2);
  CHECK(summary.rejected == 2);
  for (const auto& e : summary.manifest.entries) {
    if (!e.accepted)
      CHECK(e.reject_reason.find("injected") != std::string::npos);
  }
}

TEST_CASE("job validation catches nonsense") {
  GenerationJob job;
  job.catalogs.clear();
  CHECK_THROWS_AS(job.validate(), ConfigError);
  job = GenerationJob{};
  job.catalogs = {safe_ood_catalog()};
  job.augmentations_per_image = 0;
  CHECK_THROWS_AS(job.validate(), ConfigError);
  job.augmentations_per_image = 1;
  job.id_insert_ratio = 2.0;
  CHECK_THROWS_AS(job.validate(), ConfigError);
}

TEST_CASE("job fingerprint tracks semantic fields but not directories") {
  testing::TempDir dir("gen");
  GenerationJob a = base_job(dir / "in", dir / "out1");
  GenerationJob b = base_job(dir / "in", dir / "out2");
  CHECK(job_fingerprint(a) == job_fingerprint(b));
  b.global_seed ^= 1;
  CHECK(job_fingerprint(a) != job_fingerprint(b));
}
