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
#include <numbers>

#include "family_common.hpp"
#include "raster_ops.hpp"

namespace spaug {
namespace {

using detail::Plane;
using K = CorruptionKind;

int next_pow2(int v) {
  int n = 8;
  while (n < v) n *= 2;
  return n;
}

// Diamond-square plasma on an n x n torus, normalized to [0, 1].
Plane plasma_fractal(int n, double wibble_decay, Rng& rng) {
  Plane map(n, n, 0.0f);
  auto at = [&](int y, int x) -> float& { return map.at(((y % n) + n) % n, ((x % n) + n) % n); };
  double wibble = 100.0;
  for (int step = n; step >= 2; step /= 2) {
    const int half = step / 2;
    const int m = n / step;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double sum = at(i * step, j * step) + at((i + 1) * step, j * step) +
                           at(i * step, (j + 1) * step) + at((i + 1) * step, (j + 1) * step);
        at(i * step + half, j * step + half) =
            static_cast<float>(sum / 4.0 + rng.uniform(-wibble, wibble));
      }
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double sum = at(i * step + half, j * step + half) +
                           at(i * step - half, j * step + half) + at(i * step, j * step) +
                           at(i * step, (j + 1) * step);
        at(i * step, j * step + half) = static_cast<float>(sum / 4.0 + rng.uniform(-wibble, wibble));
      }
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double sum = at(i * step + half, j * step + half) +
                           at(i * step + half, j * step - half) + at(i * step, j * step) +
                           at((i + 1) * step, j * step);
        at(i * step + half, j * step) = static_cast<float>(sum / 4.0 + rng.uniform(-wibble, wibble));
      }
    }
    wibble /= wibble_decay;
  }
  const auto [lo, hi] = std::minmax_element(map.values.begin(), map.values.end());
  const float min = *lo;
  const float range = *hi - *lo;
  for (float& v : map.values) v = range > 0.0f ? (v - min) / range : 0.0f;
  return map;
}

Image fog(const Image& in, double weight, double wibble_decay, Rng rng) {
  const Plane plasma = plasma_fractal(next_pow2(std::max(in.height(), in.width())), wibble_decay, rng);
  Image out = in;
  const auto w = static_cast<float>(weight);
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      const float p = w * plasma.at(y, x);
      for (int c = 0; c < 3; ++c) {
        float& v = out.at(y, x, c);
        v += p * (1.0f - v);
      }
    }
  }
  return out;
}

Image snow(const Image& in, const ParamSet& p, Rng rng) {
  const int h = in.height();
  const int w = in.width();
  const double zoom = p.get("zoom");
  const int lh = std::max(1, static_cast<int>(std::lround(h / zoom)));
  const int lw = std::max(1, static_cast<int>(std::lround(w / zoom)));
  Plane flakes(lh, lw);
  const double loc = p.get("loc");
  const double scale = p.get("scale");
  for (float& v : flakes.values) v = static_cast<float>(loc + scale * rng.normal());
  flakes = detail::resize_bilinear(flakes, h, w);
  const auto threshold = static_cast<float>(p.get("threshold"));
  for (float& v : flakes.values) v = v < threshold ? 0.0f : std::min(v, 1.0f);

  const double angle = rng.uniform(-0.75, -0.25) * std::numbers::pi;
  flakes = detail::line_blur(flakes, detail::motion_weights(p.get_int("blur_length"), p.get("blur_sigma")),
                             angle);

  const auto iw = static_cast<float>(p.get("image_weight"));
  Image out = in;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float gray = 0.299f * in.at(y, x, 0) + 0.587f * in.at(y, x, 1) + 0.114f * in.at(y, x, 2);
      const float lifted = gray * 1.5f + 0.5f;
      const float s = flakes.at(y, x) + flakes.at(h - 1 - y, w - 1 - x);
      for (int c = 0; c < 3; ++c) {
        const float v = in.at(y, x, c);
        out.at(y, x, c) = iw * v + (1.0f - iw) * std::max(v, lifted) + s;
      }
    }
  }
  return out;
}

// Lattice value noise with smoothstep interpolation; lattice values come from
// hashing (key, ix, iy), so no generator state is consumed.
class ValueNoise {
 public:
  ValueNoise(std::uint64_t key, double cell) : key_(key), cell_(cell) {}

  double operator()(int y, int x) const {
    const double fy = y / cell_;
    const double fx = x / cell_;
    const auto iy = static_cast<std::int64_t>(std::floor(fy));
    const auto ix = static_cast<std::int64_t>(std::floor(fx));
    const double ty = smooth(fy - static_cast<double>(iy));
    const double tx = smooth(fx - static_cast<double>(ix));
    const double a = lattice(iy, ix), b = lattice(iy, ix + 1);
    const double c = lattice(iy + 1, ix), d = lattice(iy + 1, ix + 1);
    return (a + (b - a) * tx) * (1.0 - ty) + (c + (d - c) * tx) * ty;
  }

 private:
  static double smooth(double t) { return t * t * (3.0 - 2.0 * t); }

  double lattice(std::int64_t iy, std::int64_t ix) const {
    const auto h = mix64(key_ ^ mix64(static_cast<std::uint64_t>(iy) * 0x9E3779B97F4A7C15ULL +
                                      static_cast<std::uint64_t>(ix)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
  }

  std::uint64_t key_;
  double cell_;
};

// Frost texture: a soft multi-octave haze plus two layers of ridged noise whose
// sharp crests read as ice crystal veins, tinted slightly blue.
Plane frost_texture(int h, int w, std::uint64_t seed) {
  constexpr int kOctaves = 5;
  std::vector<ValueNoise> haze;
  for (int o = 0; o < kOctaves; ++o) {
    haze.emplace_back(derive_subseed(seed, "haze" + std::to_string(o)), 64.0 / (1 << o));
  }
  const ValueNoise veins_coarse(derive_subseed(seed, "veins0"), 23.0);
  const ValueNoise veins_fine(derive_subseed(seed, "veins1"), 9.0);
  const ValueNoise sparkle(derive_subseed(seed, "sparkle"), 1.5);
  Plane tex(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double fbm = 0.0;
      double amp = 1.0;
      double norm = 0.0;
      for (const auto& octave : haze) {
        fbm += amp * octave(y, x);
        norm += amp;
        amp *= 0.5;
      }
      fbm /= norm;
      const double r0 = 1.0 - std::fabs(2.0 * veins_coarse(y, x) - 1.0);
      const double r1 = 1.0 - std::fabs(2.0 * veins_fine(y, x) - 1.0);
      const double crystal = std::max(std::pow(r0, 8.0), 0.7 * std::pow(r1, 12.0));
      const double glint = sparkle(y, x) > 0.93 ? 0.35 : 0.0;
      tex.at(y, x) = static_cast<float>(std::clamp(0.55 * fbm + 0.55 * crystal + glint, 0.0, 1.0));
    }
  }
  return tex;
}

Image frost(const Image& in, double image_weight, double frost_weight, std::uint64_t seed) {
  constexpr float kTint[3] = {0.86f, 0.93f, 1.0f};
  const Plane tex = frost_texture(in.height(), in.width(), seed);
  Image out = in;
  const auto iw = static_cast<float>(image_weight);
  const auto fw = static_cast<float>(frost_weight);
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      for (int c = 0; c < 3; ++c) {
        out.at(y, x, c) = iw * in.at(y, x, c) + fw * kTint[c] * tex.at(y, x);
      }
    }
  }
  return out;
}

}  // namespace

Image weather_family(const Image& image, CorruptionKind kind, const ParamSet& params,
                     std::uint64_t seed) {
  if (kind != K::kSnow && kind != K::kFrost && kind != K::kFog) {
    detail::wrong_family(kind, "weather");
  }
  validate_params(kind, params);
  Image out;
  switch (kind) {
    case K::kFog:
      out = fog(image, params.get("weight"), params.get("wibble_decay"), detail::stream_for(kind, seed));
      break;
    case K::kSnow:
      out = snow(image, params, detail::stream_for(kind, seed));
      break;
    default:
      out = frost(image, params.get("image_weight"), params.get("frost_weight"),
                  derive_subseed(seed, "frost/texture"));
      break;
  }
  out.clamp();
  return out;
}

}  // namespace spaug
