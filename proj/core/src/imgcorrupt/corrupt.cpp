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

#include "spaug/imgcorrupt/corrupt.hpp"

#include <string>

#include "spaug/common/error.hpp"
#include "spaug/common/parallel.hpp"
#include "spaug/common/seed.hpp"

namespace spaug {

void CorruptionSpec::validate() const {
  if (static_cast<int>(kind) >= kCorruptionKindCount) {
    fail(ErrorCode::kInvalidSpec, "unknown corruption kind tag " +
                                      std::to_string(static_cast<int>(kind)));
  }
  if (severity < SeverityTable::kMinSeverity || severity > SeverityTable::kMaxSeverity) {
    fail(ErrorCode::kInvalidSpec,
         "severity " + std::to_string(severity) + " outside 1..5");
  }
}

std::uint64_t mixed_step_seed(std::uint64_t seed, int step) {
  return derive_subseed(seed, step == 0 ? "step0" : "step1");
}

Image apply_corruption(const Image& image, CorruptionKind kind,
                       const ParamSet& params, std::uint64_t seed) {
  using K = CorruptionKind;
  switch (kind) {
    case K::kGaussianNoise:
    case K::kShotNoise:
    case K::kImpulseNoise:
    case K::kSpeckleNoise:
    case K::kDropout:
    case K::kSpatter:
      return noise_family(image, kind, params, seed);
    case K::kDefocusBlur:
    case K::kGlassBlur:
    case K::kMotionBlur:
    case K::kZoomBlur:
    case K::kGaussianBlur:
    case K::kAverageBlur:
    case K::kMedianBlur:
      return blur_family(image, kind, params, seed);
    case K::kSnow:
    case K::kFrost:
    case K::kFog:
      return weather_family(image, kind, params, seed);
    case K::kBrightness:
    case K::kContrast:
    case K::kSaturate:
      return photometric_family(image, kind, params);
    case K::kElastic:
    case K::kPixelate:
    case K::kJpegCompression:
      return digital_family(image, kind, params, seed);
    default:
      break;
  }
  fail(ErrorCode::kInvalidSpec,
       std::string(to_string(kind)) + " is not an atomic corruption kind");
}

Image corrupt(const Image& image, const CorruptionSpec& spec, const SeverityTable& table) {
  spec.validate();
  if (image.empty()) fail(ErrorCode::kShape, "corrupt: empty image");
  if (is_mixed(spec.kind)) {
    const auto [first, second] = constituents(spec.kind);
    const Image step = corrupt(image, {first, spec.severity, mixed_step_seed(spec.seed, 0)}, table);
    return corrupt(step, {second, spec.severity, mixed_step_seed(spec.seed, 1)}, table);
  }
  return apply_corruption(image, spec.kind, table.params(spec.kind, spec.severity), spec.seed);
}

std::vector<Image> corrupt_batch(std::span<const Image> images,
                                 std::span<const CorruptionSpec> specs,
                                 unsigned workers, const SeverityTable& table) {
  if (images.size() != specs.size()) {
    fail(ErrorCode::kInvalidArgument, "corrupt_batch: " + std::to_string(images.size()) +
                                          " images but " + std::to_string(specs.size()) +
                                          " specs");
  }
  std::vector<Image> out(images.size());
  parallel_for(images.size(), workers,
               [&](std::size_t i) { out[i] = corrupt(images[i], specs[i], table); });
  return out;
}

}  // namespace spaug
