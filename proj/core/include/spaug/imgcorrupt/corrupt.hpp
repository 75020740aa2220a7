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
#include <span>
#include <vector>

#include "spaug/imgcorrupt/corruption_kind.hpp"
#include "spaug/imgcorrupt/image.hpp"
#include "spaug/imgcorrupt/severity_table.hpp"

namespace spaug {

/// One fully determined image transform.
struct CorruptionSpec {
  CorruptionKind kind = CorruptionKind::kGaussianNoise;
  int severity = 1;
  std::uint64_t seed = 0;

  /// Throws invalid-spec for unknown kinds or severity outside 1..5.
  void validate() const;

  friend bool operator==(const CorruptionSpec&, const CorruptionSpec&) = default;
};

/// Seed of the first (step 0) or second (step 1) constituent of a mixed kind:
/// derive_subseed(seed, "step0") / derive_subseed(seed, "step1").
std::uint64_t mixed_step_seed(std::uint64_t seed, int step);

/// Applies `spec` to `image`. Pure: identical inputs give bit-identical
/// outputs. Mixed kinds run the first-named constituent then the second, each
/// at the same severity with its mixed_step_seed.
Image corrupt(const Image& image, const CorruptionSpec& spec,
              const SeverityTable& table = SeverityTable::defaults());

/// Applies an atomic kind with explicit parameters (dispatches to a family).
Image apply_corruption(const Image& image, CorruptionKind kind,
                       const ParamSet& params, std::uint64_t seed);

/// corrupt() over a batch on `workers` threads. Output i depends only on
/// images[i] and specs[i].
std::vector<Image> corrupt_batch(std::span<const Image> images,
                                 std::span<const CorruptionSpec> specs,
                                 unsigned workers,
                                 const SeverityTable& table = SeverityTable::defaults());

// Families. Each throws invalid-spec when `kind` does not belong to it or the
// parameters fail validate_params.

/// gaussian_noise, shot_noise, impulse_noise, speckle_noise, dropout, spatter.
Image noise_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                   std::uint64_t seed);

/// defocus_blur, glass_blur, motion_blur, zoom_blur, gaussian_blur,
/// average_blur, median_blur. Kernels with a radius above min(H, W) / 2 are
/// rejected.
Image blur_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                  std::uint64_t seed);

/// snow, frost, fog.
Image weather_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                     std::uint64_t seed);

/// brightness, contrast, saturate. No randomness.
Image photometric_family(const Image& image, CorruptionKind kind, const ParamSet& params);

/// elastic, pixelate, jpeg_compression.
Image digital_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                     std::uint64_t seed);

}  // namespace spaug
