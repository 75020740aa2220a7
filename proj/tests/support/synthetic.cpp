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

#include "synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "spaug/common/seed.hpp"
#include "spaug/imgcorrupt/image_io.hpp"

namespace spaug::testing {

Image synthetic_image(int index, int size) {
  Rng rng(derive_subseed(0x5EED, "synthetic:" + std::to_string(index)));
  Image img(size, size);
  float c0[3], c1[3];
  for (int c = 0; c < 3; ++c) {
    c0[c] = static_cast<float>(rng.uniform(0.1, 0.9));
    c1[c] = static_cast<float>(rng.uniform(0.1, 0.9));
  }
  const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double ca = std::cos(angle), sa = std::sin(angle);
  const double freq = rng.uniform(4.0, 16.0) * 2.0 * std::numbers::pi / size;
  const double tex_amp = rng.uniform(0.03, 0.1);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double t = 0.5 + 0.5 * ((x - size / 2.0) * ca + (y - size / 2.0) * sa) / (0.71 * size);
      const double tex = tex_amp * std::sin(freq * x) * std::cos(freq * 0.7 * y);
      for (int c = 0; c < 3; ++c) {
        img.at(y, x, c) = static_cast<float>(c0[c] + (c1[c] - c0[c]) * t + tex);
      }
    }
  }
  const int shapes = 3 + static_cast<int>(rng.below(5));
  for (int s = 0; s < shapes; ++s) {
    float col[3];
    for (float& v : col) v = static_cast<float>(rng.uniform(0.0, 1.0));
    const double cx = rng.uniform(0, size), cy = rng.uniform(0, size);
    const double r = rng.uniform(size * 0.05, size * 0.25);
    const bool circle = rng.bernoulli(0.5);
    for (int y = 0; y < size; ++y) {
      for (int x = 0; x < size; ++x) {
        const double dx = x - cx, dy = y - cy;
        const bool inside = circle ? dx * dx + dy * dy <= r * r
                                   : std::abs(dx) <= r && std::abs(dy) <= 0.6 * r;
        if (!inside) continue;
        for (int c = 0; c < 3; ++c) img.at(y, x, c) = col[c];
      }
    }
  }
  img.clamp();
  return img;
}

std::vector<Image> synthetic_suite(int count, int size) {
  std::vector<Image> out;
  for (int i = 0; i < count; ++i) out.push_back(synthetic_image(i, size));
  return out;
}

Image constant_image(int height, int width, float value) { return Image(height, width, value); }

std::vector<std::string> synthetic_captions(int index) {
  static const char* kColors[] = {"red", "blue", "green", "yellow", "white", "black", "orange"};
  static const char* kSubjects[] = {"man", "woman", "dog", "child", "girl", "boy", "cat"};
  static const char* kActions[] = {"sitting on", "walking near", "standing by", "running past",
                                   "looking at", "jumping over", "holding"};
  static const char* kObjects[] = {"bench", "car", "tree", "building", "fence", "ball", "table"};
  std::vector<std::string> caps;
  for (int j = 0; j < 5; ++j) {
    const int k = index * 5 + j;
    std::string s = "A ";
    s += kColors[k % 7];
    s += ' ';
    s += kSubjects[(k / 7) % 7];
    s += j % 2 == 0 ? " is " : " ";
    std::string act = kActions[(k / 3) % 7];
    if (j % 2 != 0) {
      // Present simple: "walks near".
      const auto sp = std::min(act.find(' '), act.size());
      auto verb = act.substr(0, sp);
      verb = verb.substr(0, verb.size() - 3);
      if (verb == "sitt") verb = "sit";
      if (verb == "runn") verb = "run";
      s += verb + "s" + act.substr(sp);
    } else {
      s += act;
    }
    s += " the ";
    s += kObjects[(k / 2) % 7];
    s += '.';
    caps.push_back(s);
  }
  return caps;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("spaug_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path write_synthetic_dataset(const std::filesystem::path& dir, int count, int size,
                                              const std::string& split) {
  std::filesystem::create_directories(dir / "images");
  const auto manifest = dir / "manifest.jsonl";
  std::ofstream out(manifest, std::ios::binary);
  for (int i = 0; i < count; ++i) {
    const auto rel = "images/img_" + std::to_string(i) + ".png";
    write_png(synthetic_image(i, size), dir / rel);
    out << "{\"id\":" << i << ",\"image\":\"" << rel << "\",\"captions\":[";
    const auto caps = synthetic_captions(i);
    for (std::size_t j = 0; j < caps.size(); ++j) out << (j ? "," : "") << '"' << caps[j] << '"';
    out << "],\"split\":\"" << split << "\"}\n";
  }
  return manifest;
}

}  // namespace spaug::testing
