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

#include "family_common.hpp"

namespace spaug {
namespace {

using K = CorruptionKind;

constexpr float kLumaR = 0.299f;
constexpr float kLumaG = 0.587f;
constexpr float kLumaB = 0.114f;

Image brightness(const Image& in, double delta) {
  Image out = in;
  const auto d = static_cast<float>(delta);
  for (float& v : out.data()) v += d;
  return out;
}

Image contrast(const Image& in, double factor) {
  const auto means = channel_means(in);
  Image out = in;
  auto d = out.data();
  for (std::size_t i = 0; i < d.size(); i += 3) {
    for (int c = 0; c < 3; ++c) {
      d[i + c] = static_cast<float>(means[c] + factor * (d[i + c] - means[c]));
    }
  }
  return out;
}

Image saturate(const Image& in, double factor) {
  Image out = in;
  auto d = out.data();
  const auto s = static_cast<float>(factor);
  for (std::size_t i = 0; i < d.size(); i += 3) {
    const float luma = kLumaR * d[i] + kLumaG * d[i + 1] + kLumaB * d[i + 2];
    for (int c = 0; c < 3; ++c) d[i + c] = luma + s * (d[i + c] - luma);
  }
  return out;
}

}  // namespace

Image photometric_family(const Image& image, CorruptionKind kind, const ParamSet& params) {
  if (kind != K::kBrightness && kind != K::kContrast && kind != K::kSaturate) {
    detail::wrong_family(kind, "photometric");
  }
  validate_params(kind, params);
  Image out;
  switch (kind) {
    case K::kBrightness: out = brightness(image, params.get("delta")); break;
    case K::kContrast: out = contrast(image, params.get("factor")); break;
    default: out = saturate(image, params.get("factor")); break;
  }
  out.clamp();
  return out;
}

}  // namespace spaug
