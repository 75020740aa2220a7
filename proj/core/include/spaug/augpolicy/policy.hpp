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
#include <vector>

#include "spaug/imgcorrupt/corrupt.hpp"
#include "spaug/textaug/augment.hpp"

namespace spaug {

enum class Modality { kImage, kText };

struct PolicyDecision {
  Modality modality = Modality::kImage;
  bool augment = false;
  CorruptionKind image_kind = CorruptionKind::kGaussianNoise;  // image, when augment
  int severity = 0;                                            // image, when augment
  TextAugKind text_kind = TextAugKind::kSynonymReplacement;    // text, when augment
  double draw = 0.0;        // the uniform variate behind the decision
  std::uint64_t seed = 0;   // decision seed

  /// "none", a corruption tag or a text augmentation tag.
  std::string choice() const;
  friend bool operator==(const PolicyDecision&, const PolicyDecision&) = default;
};

/// Defaults: half the samples untouched, the rest split evenly over the 16
/// seen image kinds (severity uniform on 1..5) or the 6 text kinds.
struct PolicyConfig {
  double p_none = 0.5;
  int severity_min = 1;
  int severity_max = 5;
  std::vector<CorruptionKind> image_kinds;
  std::vector<TextAugKind> text_kinds;
  bool redraw_per_epoch = true;

  PolicyConfig();
  /// Throws kInvalidArgument.
  void validate() const;

  /// JSON object with any subset of: p_none, severity [lo, hi], image_kinds,
  /// text_kinds, redraw_per_epoch.
  static PolicyConfig from_json(std::string_view json);
  static PolicyConfig load(const std::filesystem::path& path);
  std::string to_json() const;
};

/// Index into `count` kinds chosen by draw u in [0, 1), or nullopt for the
/// no-augmentation branch (u >= p_aug, p_aug = 1 - p_none). The index is
/// floor(u * count / p_aug) evaluated exactly, without intermediate rounding,
/// so each kind receives exactly its share of the 2^-53 draw grid.
std::optional<std::size_t> decide_index(double u, double p_none, std::size_t count) noexcept;

PolicyDecision sample_image_aug(std::uint64_t seed, const PolicyConfig& config = {});
PolicyDecision sample_text_aug(std::uint64_t seed, const PolicyConfig& config = {});

/// Per-item seed: independent of batch position, optionally of the epoch.
std::uint64_t item_seed(std::uint64_t global_seed, std::uint64_t item_id, int epoch,
                        const PolicyConfig& config = {});
/// Seeds of the image decision and of caption j's decision for one item.
std::uint64_t image_decision_seed(std::uint64_t item_seed);
std::uint64_t caption_decision_seed(std::uint64_t item_seed, std::size_t caption_index);
/// Seed handed to the operator once a decision says augment.
std::uint64_t operator_seed(std::uint64_t decision_seed);

struct PolicySample {
  std::uint64_t id = 0;
  Image image;
  std::vector<std::string> captions;
};

struct PolicyOutput {
  Image image;
  std::vector<std::string> captions;
  std::vector<PolicyDecision> audit;  // image first, then one per caption
  std::vector<std::string> notes;     // e.g. back-translation fallbacks
};

struct PolicyContext {
  PolicyConfig config;
  const SeverityTable* severity_table = &SeverityTable::defaults();
  TextAugConfig text;
  /// On translator failure keep the caption unchanged (with a note) instead of throwing.
  bool fallback_on_transport_error = true;
};

/// Draws and applies the image decision and one independent decision per
/// caption. Errors are rethrown with the sample id prefixed.
PolicyOutput apply_policy(const PolicySample& sample, std::uint64_t global_seed, int epoch = 0,
                          const PolicyContext& context = {});

/// One audit JSON object (single line) for a decision.
std::string audit_json(const PolicyDecision& d, std::uint64_t item_id,
                       std::optional<std::size_t> caption_index);

}  // namespace spaug
