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

#include "spaug/imgcorrupt/corruption_kind.hpp"

#include <array>

#include "spaug/common/error.hpp"

namespace spaug {
namespace {

using K = CorruptionKind;

constexpr std::array<K, kCorruptionKindCount> kAll = {
    K::kGaussianNoise, K::kShotNoise,      K::kImpulseNoise,  K::kSpeckleNoise,
    K::kDefocusBlur,   K::kGlassBlur,      K::kMotionBlur,    K::kZoomBlur,
    K::kSnow,          K::kFrost,          K::kFog,           K::kBrightness,
    K::kContrast,      K::kElastic,        K::kPixelate,      K::kJpegCompression,
    K::kGaussianBlur,  K::kSpatter,        K::kSaturate,      K::kAverageBlur,
    K::kMedianBlur,    K::kDropout,        K::kZoomSnow,      K::kZoomPixelate,
    K::kZoomContrast,  K::kSnowPixelate,   K::kSnowContrast,  K::kPixelateContrast,
};

constexpr std::array<std::string_view, kCorruptionKindCount> kNames = {
    "gaussian_noise", "shot_noise",    "impulse_noise",  "speckle_noise",
    "defocus_blur",   "glass_blur",    "motion_blur",    "zoom_blur",
    "snow",           "frost",         "fog",            "brightness",
    "contrast",       "elastic",       "pixelate",       "jpeg_compression",
    "gaussian_blur",  "spatter",       "saturate",       "average_blur",
    "median_blur",    "dropout",       "zoom+snow",      "zoom+pixelate",
    "zoom+contrast",  "snow+pixelate", "snow+contrast",  "pixelate+contrast",
};

constexpr std::size_t index_of(K kind) { return static_cast<std::size_t>(kind); }

}  // namespace

std::span<const CorruptionKind> all_corruption_kinds() { return kAll; }

std::span<const CorruptionKind> seen_kinds() {
  return std::span(kAll).first(kSeenKindCount);
}

std::span<const CorruptionKind> unseen_kinds() {
  return std::span(kAll).subspan(kSeenKindCount, kUnseenKindCount);
}

std::span<const CorruptionKind> mixed_kinds() {
  return std::span(kAll).subspan(kAtomicKindCount, kMixedKindCount);
}

std::span<const CorruptionKind> atomic_kinds() {
  return std::span(kAll).first(kAtomicKindCount);
}

CorruptionGroup group_of(CorruptionKind kind) noexcept {
  const auto i = index_of(kind);
  if (i < kSeenKindCount) return CorruptionGroup::kSeen;
  if (i < kAtomicKindCount) return CorruptionGroup::kUnseen;
  return CorruptionGroup::kMixed;
}

std::string_view to_string(CorruptionGroup group) noexcept {
  switch (group) {
    case CorruptionGroup::kSeen: return "seen";
    case CorruptionGroup::kUnseen: return "unseen";
    case CorruptionGroup::kMixed: return "mixed";
  }
  return "?";
}

std::pair<CorruptionKind, CorruptionKind> constituents(CorruptionKind mixed) {
  switch (mixed) {
    case K::kZoomSnow: return {K::kZoomBlur, K::kSnow};
    case K::kZoomPixelate: return {K::kZoomBlur, K::kPixelate};
    case K::kZoomContrast: return {K::kZoomBlur, K::kContrast};
    case K::kSnowPixelate: return {K::kSnow, K::kPixelate};
    case K::kSnowContrast: return {K::kSnow, K::kContrast};
    case K::kPixelateContrast: return {K::kPixelate, K::kContrast};
    default: break;
  }
  fail(ErrorCode::kInvalidSpec,
       std::string(to_string(mixed)) + " is not a mixed corruption kind");
}

std::string_view to_string(CorruptionKind kind) noexcept {
  const auto i = index_of(kind);
  return i < kNames.size() ? kNames[i] : std::string_view("unknown");
}

std::optional<CorruptionKind> parse_corruption_kind(std::string_view tag) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == tag) return kAll[i];
  }
  return std::nullopt;
}

CorruptionKind corruption_kind_from_string(std::string_view tag) {
  if (auto kind = parse_corruption_kind(tag)) return *kind;
  fail(ErrorCode::kInvalidSpec, "unknown corruption kind '" + std::string(tag) +
                                    "'; valid kinds: " + corruption_kind_list());
}

std::string corruption_kind_list() {
  std::string out;
  for (auto name : kNames) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace spaug
