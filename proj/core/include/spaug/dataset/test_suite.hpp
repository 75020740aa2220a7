// Copyright 2026 The spaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "spaug/dataset/manifest.hpp"
#include "spaug/imgcorrupt/severity_table.hpp"
#include "spaug/textaug/augment.hpp"

namespace spaug {

struct SuiteOptions {
  int severity = 3;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  const SeverityTable* severity_table = &SeverityTable::defaults();
  TextAugConfig text;
  /// Keep a caption unchanged (and record it) when the translator fails.
  bool fallback_on_transport_error = true;
  std::string source_name;  // recorded in suite.json
};

struct SuiteVariant {
  std::string group;  // seen, unseen, mixed or text
  std::string kind;
  std::filesystem::path manifest_path;  // relative to the output directory
  Manifest manifest;
};

struct TestSuite {
  Manifest clean;
  std::vector<SuiteVariant> seen;
  std::vector<SuiteVariant> unseen;
  std::vector<SuiteVariant> mixed;
  std::vector<SuiteVariant> text;
  std::size_t files_written = 0;    // created or changed
  std::size_t files_unchanged = 0;  // already byte-identical
};

/// Seed of one (item, variant) pair.
std::uint64_t variant_item_seed(std::uint64_t seed, std::uint64_t item_id, std::string_view kind);

/// Writes the 16 seen, 6 unseen and 6 mixed image sets plus the 6 text sets
/// under `out_dir`:
///
///   suite.json                  summary and provenance
///   clean.jsonl                 the input items (image paths as given)
///   <group>/<kind>.jsonl        variant manifest
///   <group>/<kind>/<image>.png  corrupted images, mirroring clean paths
///
/// Image paths inside image-variant manifests are relative to <group>/; text
/// manifests keep the clean paths. Files whose bytes would not change are not
/// rewritten. On failure, files created by this call are removed.
TestSuite generate_test_suite(const Manifest& clean, const SuiteOptions& options,
                              const std::filesystem::path& out_dir);

/// Path of an item's corrupted image relative to its group directory.
std::string variant_image_path(std::string_view kind, std::string_view clean_image);

}  // namespace spaug
