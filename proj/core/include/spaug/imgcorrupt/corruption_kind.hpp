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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace spaug {

// Ordering is part of the public contract: the augmentation policy indexes
// into the first 16 (seen) values.
enum class CorruptionKind : std::uint8_t {
  // seen
  kGaussianNoise,
  kShotNoise,
  kImpulseNoise,
  kSpeckleNoise,
  kDefocusBlur,
  kGlassBlur,
  kMotionBlur,
  kZoomBlur,
  kSnow,
  kFrost,
  kFog,
  kBrightness,
  kContrast,
  kElastic,
  kPixelate,
  kJpegCompression,
  // unseen
  kGaussianBlur,
  kSpatter,
  kSaturate,
  kAverageBlur,
  kMedianBlur,
  kDropout,
  // mixed (ordered compositions of two seen kinds)
  kZoomSnow,
  kZoomPixelate,
  kZoomContrast,
  kSnowPixelate,
  kSnowContrast,
  kPixelateContrast,
};

enum class CorruptionGroup { kSeen, kUnseen, kMixed };

inline constexpr int kCorruptionKindCount = 28;
inline constexpr int kSeenKindCount = 16;
inline constexpr int kUnseenKindCount = 6;
inline constexpr int kMixedKindCount = 6;
inline constexpr int kAtomicKindCount = kSeenKindCount + kUnseenKindCount;

std::span<const CorruptionKind> all_corruption_kinds();
std::span<const CorruptionKind> seen_kinds();
std::span<const CorruptionKind> unseen_kinds();
std::span<const CorruptionKind> mixed_kinds();
/// Seen followed by unseen: every kind with its own severity parameters.
std::span<const CorruptionKind> atomic_kinds();

CorruptionGroup group_of(CorruptionKind kind) noexcept;
std::string_view to_string(CorruptionGroup group) noexcept;
inline bool is_mixed(CorruptionKind kind) noexcept {
  return group_of(kind) == CorruptionGroup::kMixed;
}

/// The ordered (first applied, second applied) pair behind a mixed kind.
std::pair<CorruptionKind, CorruptionKind> constituents(CorruptionKind mixed);

std::string_view to_string(CorruptionKind kind) noexcept;
std::optional<CorruptionKind> parse_corruption_kind(std::string_view tag) noexcept;
/// Like parse_corruption_kind but throws an invalid-spec error listing every
/// valid tag.
CorruptionKind corruption_kind_from_string(std::string_view tag);
/// Comma-separated list of all 28 tags.
std::string corruption_kind_list();

}  // namespace spaug
