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

#include "poc/manifest.hpp"

#include <json.hpp>

#include "poc/errors.hpp"

namespace poc {

using nlohmann::json;

namespace {

json region_to_json(const Region& r) { return json{r.x0, r.y0, r.w, r.h}; }

Region region_from_json(const json& j) {
  return Region{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(),
                j.at(3).get<int>()};
}

json prompt_to_json(const PromptSet& p) {
  return json{{"object", p.object_prompt},
              {"location", p.location_prompt},
              {"inpaint", p.inpaint_prompt},
              {"class_id", p.class_id},
              {"role", to_string(p.class_role)}};
}

PromptSet prompt_from_json(const json& j) {
  PromptSet p;
  p.object_prompt = j.at("object").get<std::string>();
  p.location_prompt = j.at("location").get<std::string>();
  p.inpaint_prompt = j.at("inpaint").get<std::string>();
  p.class_id = j.at("class_id").get<std::int32_t>();
  p.class_role = class_role_from_string(j.at("role").get<std::string>());
  return p;
}

}  // namespace

std::string manifest_header_line(const ManifestHeader& h) {
  const json j{{"type", "header"},
               {"tool_version", h.tool_version},
               {"mode", h.mode},
               {"global_seed", h.global_seed},
               {"config_hash", h.config_hash}};
  return j.dump();
}

std::string manifest_entry_line(const ManifestEntry& e) {
  json j{{"type", "sample"},
         {"image_id", e.image_id},
         {"augmentation", e.augmentation},
         {"source_image", e.source_image},
         {"prompt", prompt_to_json(e.prompt)},
         {"region", region_to_json(e.region)},
         {"crop", region_to_json(e.crop)},
         {"seed", e.seed},
         {"status", e.accepted ? "accepted" : "rejected"},
         {"attempts", e.attempts}};
  if (e.accepted) {
    j["output_image"] = e.output_image;
    j["output_labels"] = e.output_labels;
  } else {
    j["reject_reason"] = e.reject_reason;
  }
  return j.dump();
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  Manifest m;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw IoError("manifest " + path.string() + ": bad line: " + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "header") {
      m.header.tool_version = j.at("tool_version").get<std::string>();
      m.header.mode = j.at("mode").get<std::string>();
      m.header.global_seed = j.at("global_seed").get<std::uint64_t>();
      m.header.config_hash = j.at("config_hash").get<std::string>();
      have_header = true;
    } else if (type == "sample") {
      ManifestEntry e;
      e.image_id = j.at("image_id").get<std::string>();
      e.augmentation = j.at("augmentation").get<int>();
      e.source_image = j.at("source_image").get<std::string>();
      e.prompt = prompt_from_json(j.at("prompt"));
      e.region = region_from_json(j.at("region"));
      e.crop = region_from_json(j.at("crop"));
      e.seed = j.at("seed").get<std::uint64_t>();
      e.accepted = j.at("status").get<std::string>() == "accepted";
      e.attempts = j.at("attempts").get<int>();
      if (e.accepted) {
        e.output_image = j.at("output_image").get<std::string>();
        e.output_labels = j.at("output_labels").get<std::string>();
      } else {
        e.reject_reason = j.value("reject_reason", "");
      }
      m.entries.push_back(std::move(e));
    } else {
      throw IoError("manifest " + path.string() + ": unknown line type");
    }
  }
  if (!have_header)
    throw IoError("manifest " + path.string() + ": missing header line");
  return m;
}

void write_manifest(const std::filesystem::path& path, const Manifest& m) {
  ManifestWriter writer(path, m.header, false);
  for (const auto& e : m.entries) writer.append(e);
}

ManifestWriter::ManifestWriter(const std::filesystem::path& path,
                               const ManifestHeader& header, bool append)
    : out_(path, append ? std::ios::app : std::ios::trunc) {
  if (!out_) throw IoError("cannot open manifest " + path.string());
  if (!append) {
    out_ << manifest_header_line(header) << '\n';
    out_.flush();
  }
}

void ManifestWriter::append(const ManifestEntry& entry) {
  out_ << manifest_entry_line(entry) << '\n';
  out_.flush();
  if (!out_) throw IoError("manifest write failed");
}

}  // namespace poc
