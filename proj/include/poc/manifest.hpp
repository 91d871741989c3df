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

#ifndef POC_MANIFEST_HPP
#define POC_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "poc/prompt.hpp"
#include "poc/raster.hpp"

namespace poc {

// Reproducibility block written as the first manifest line. Deliberately
// free of timestamps so identical runs produce identical bytes.
struct ManifestHeader {
  std::string tool_version;
  std::string mode;
  std::uint64_t global_seed = 0;
  std::string config_hash;
};

// Provenance of one attempted insertion.
struct ManifestEntry {
  std::string image_id;
  int augmentation = 0;
  std::string source_image;
  std::string output_image;   // empty when rejected
  std::string output_labels;  // empty when rejected
  PromptSet prompt;
  Region region;
  Region crop;
  std::uint64_t seed = 0;
  bool accepted = false;
  std::string reject_reason;
  int attempts = 0;
};

struct Manifest {
  ManifestHeader header;
  std::vector<ManifestEntry> entries;
};

std::string manifest_header_line(const ManifestHeader& header);
std::string manifest_entry_line(const ManifestEntry& entry);

Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const Manifest& m);

// Append-oriented writer: one line per entry, flushed immediately, so a
// crashed run leaves a readable prefix.
class ManifestWriter {
 public:
  // Truncates unless `append` is set (resume).
  ManifestWriter(const std::filesystem::path& path,
                 const ManifestHeader& header, bool append = false);

  void append(const ManifestEntry& entry);

 private:
  std::ofstream out_;
};

}  // namespace poc

#endif  // POC_MANIFEST_HPP
