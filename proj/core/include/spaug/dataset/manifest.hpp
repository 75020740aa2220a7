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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spaug/imgcorrupt/corruption_kind.hpp"
#include "spaug/textaug/token.hpp"

namespace spaug {

inline constexpr std::size_t kCaptionsPerImage = 5;

enum class Split { kTrain, kVal, kTest };

std::string_view to_string(Split split) noexcept;
std::optional<Split> parse_split(std::string_view tag) noexcept;

struct CorruptionRecord {
  CorruptionKind kind = CorruptionKind::kGaussianNoise;
  int severity = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const CorruptionRecord&, const CorruptionRecord&) = default;
};

struct TextAugRecord {
  TextAugKind kind = TextAugKind::kSynonymReplacement;
  std::uint64_t seed = 0;
  std::string translator;  // back-translation only
  std::string pivot;       // back-translation only
  std::vector<std::size_t> fallback_captions;  // captions left unchanged after a transport error
  friend bool operator==(const TextAugRecord&, const TextAugRecord&) = default;
};

struct ManifestItem {
  std::uint64_t id = 0;
  std::string image;  // relative to the manifest's image root
  std::vector<std::string> captions;
  Split split = Split::kTest;
  std::optional<CorruptionRecord> corruption;
  std::optional<TextAugRecord> text_aug;
  friend bool operator==(const ManifestItem&, const ManifestItem&) = default;
};

struct SplitCounts {
  std::size_t train = 0;
  std::size_t val = 0;
  std::size_t test = 0;
  std::size_t total() const noexcept { return train + val + test; }
};

struct Manifest {
  std::vector<ManifestItem> items;
  std::filesystem::path image_root;  // base directory for relative image paths

  SplitCounts counts() const;
  /// Items of one split, order preserved.
  Manifest restricted_to(Split split) const;
};

struct ManifestLoadOptions {
  /// Base for image paths; empty means the manifest file's directory.
  std::filesystem::path image_root;
  /// Verify every referenced image exists (validation error listing offenders).
  bool check_images = true;
};

/// Parses and validates a JSONL manifest. Throws kSchema for malformed rows
/// (including a caption count other than 5, duplicate ids, an empty file) and
/// kValidation for missing images or an image assigned to two splits.
Manifest load_manifest(const std::filesystem::path& path, const ManifestLoadOptions& options = {});
Manifest parse_manifest(std::string_view jsonl, const std::filesystem::path& image_root = {});

std::string manifest_line(const ManifestItem& item);
std::string serialize_manifest(const Manifest& manifest);

// Standard split layouts, assigned in manifest order: train first, then val,
// then test.
struct SplitLayout {
  std::string name;
  std::size_t val = 0;
  std::size_t test = 0;
  std::size_t fold_size = 0;  // 0 = no folds
};

SplitLayout flickr30k_layout();  // 1,000 val / 1,000 test
SplitLayout coco_layout();       // 5,000 val / 5,000 test, 5 folds of 1,000
SplitLayout layout_from_string(std::string_view name);

/// Rewrites every item's split. Throws kInvalidArgument when the manifest has
/// fewer than val + test items.
void assign_splits(Manifest& manifest, const SplitLayout& layout);

/// Fold of the i-th test item under `layout` (manifest order).
std::size_t test_fold(std::size_t test_index, const SplitLayout& layout);

}  // namespace spaug
