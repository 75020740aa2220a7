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

#include <algorithm>
#include <cmath>

#include "family_common.hpp"
#include "raster_ops.hpp"

namespace spaug {
namespace {

using detail::Plane;
using K = CorruptionKind;

Image gaussian_noise(const Image& in, double sigma, Rng rng) {
  Image out = in;
  for (float& v : out.data()) v += static_cast<float>(sigma * rng.normal());
  return out;
}

Image shot_noise(const Image& in, double lambda, Rng rng) {
  Image out = in;
  for (float& v : out.data()) {
    const double mean = std::max(0.0, static_cast<double>(v)) * lambda;
    v = static_cast<float>(static_cast<double>(rng.poisson(mean)) / lambda);
  }
  return out;
}

Image impulse_noise(const Image& in, double rate, Rng rng) {
  Image out = in;
  auto d = out.data();
  for (std::size_t i = 0; i < d.size(); i += 3) {
    if (rng.uniform() < rate) {
      const float v = rng.uniform() < 0.5 ? 0.0f : 1.0f;
      d[i] = d[i + 1] = d[i + 2] = v;
    }
  }
  return out;
}

Image speckle_noise(const Image& in, double sigma, Rng rng) {
  Image out = in;
  for (float& v : out.data()) v += v * static_cast<float>(sigma * rng.normal());
  return out;
}

Image dropout(const Image& in, double rate, Rng rng) {
  Image out = in;
  auto d = out.data();
  for (std::size_t i = 0; i < d.size(); i += 3) {
    if (rng.uniform() < rate) d[i] = d[i + 1] = d[i + 2] = 0.0f;
  }
  return out;
}

// Liquid drops: white noise smoothed into blobs, standardized, then
// soft-thresholded so only the upper tail survives as the drop mask.
Image spatter(const Image& in, double sigma, double threshold, double intensity, Rng rng) {
  constexpr float kTint[3] = {0.32f, 0.42f, 0.58f};
  constexpr double kSoftness = 0.35;
  Plane field(in.height(), in.width());
  for (float& v : field.values) v = static_cast<float>(rng.normal());
  detail::convolve_separable(field, detail::gaussian_kernel(sigma));

  double mean = 0.0;
  for (float v : field.values) mean += v;
  mean /= static_cast<double>(field.values.size());
  double var = 0.0;
  for (float v : field.values) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(field.values.size()));

  Image out = in;
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      const double z = sd > 0.0 ? (field.at(y, x) - mean) / sd : 0.0;
      const double mask = std::clamp((z - threshold) / kSoftness, 0.0, 1.0);
      if (mask == 0.0) continue;
      for (int c = 0; c < 3; ++c) {
        out.at(y, x, c) += static_cast<float>(intensity * mask) * kTint[c];
      }
    }
  }
  return out;
}

}  // namespace

Image noise_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                   std::uint64_t seed) {
  switch (kind) {
    case K::kGaussianNoise:
    case K::kShotNoise:
    case K::kImpulseNoise:
    case K::kSpeckleNoise:
    case K::kDropout:
    case K::kSpatter:
      break;
    default:
      detail::wrong_family(kind, "noise");
  }
  validate_params(kind, params);
  auto rng = detail::stream_for(kind, seed);
  Image out;
  switch (kind) {
    case K::kGaussianNoise: out = gaussian_noise(image, params.get("sigma"), rng); break;
    case K::kShotNoise: out = shot_noise(image, params.get("lambda"), rng); break;
    case K::kImpulseNoise: out = impulse_noise(image, params.get("rate"), rng); break;
    case K::kSpeckleNoise: out = speckle_noise(image, params.get("sigma"), rng); break;
    case K::kDropout: out = dropout(image, params.get("rate"), rng); break;
    default:
      out = spatter(image, params.get("sigma"), params.get("threshold"),
                    params.get("intensity"), rng);
      break;
  }
  out.clamp();
  return out;
}

}  // namespace spaug
