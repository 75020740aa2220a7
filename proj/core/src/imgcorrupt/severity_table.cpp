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

#include "spaug/imgcorrupt/severity_table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "spaug/common/error.hpp"

namespace spaug {

extern const char* const kEmbeddedSeverityTable;

namespace {

using K = CorruptionKind;

constexpr ParamSpec kGaussianNoise[] = {{"sigma", 0.0, 1.0, +1, false}};
constexpr ParamSpec kShotNoise[] = {{"lambda", 0.5, 10000.0, -1, false}};
constexpr ParamSpec kImpulseNoise[] = {{"rate", 0.0, 1.0, +1, false}};
constexpr ParamSpec kSpeckleNoise[] = {{"sigma", 0.0, 2.0, +1, false}};
constexpr ParamSpec kDefocusBlur[] = {{"radius", 0.0, 64.0, +1, false},
                                      {"alias_sigma", 0.0, 4.0, +1, false}};
constexpr ParamSpec kGlassBlur[] = {{"sigma", 0.0, 8.0, +1, false},
                                    {"max_delta", 0.0, 16.0, +1, true},
                                    {"iterations", 0.0, 10.0, +1, true}};
constexpr ParamSpec kMotionBlur[] = {{"length", 1.0, 128.0, +1, true},
                                     {"sigma", 0.1, 128.0, +1, false}};
constexpr ParamSpec kZoomBlur[] = {{"max_zoom", 1.0, 2.0, +1, false},
                                   {"step", 0.001, 0.5, 0, false}};
constexpr ParamSpec kSnow[] = {{"loc", 0.0, 1.0, +1, false},
                               {"scale", 0.0, 1.0, 0, false},
                               {"zoom", 1.0, 8.0, 0, false},
                               {"threshold", 0.0, 1.0, -1, false},
                               {"blur_length", 1.0, 64.0, +1, true},
                               {"blur_sigma", 0.1, 64.0, +1, false},
                               {"image_weight", 0.0, 1.0, -1, false}};
constexpr ParamSpec kFrost[] = {{"image_weight", 0.0, 1.0, -1, false},
                                {"frost_weight", 0.0, 1.0, +1, false}};
constexpr ParamSpec kFog[] = {{"weight", 0.0, 1.0, +1, false},
                              {"wibble_decay", 1.0, 4.0, -1, false}};
constexpr ParamSpec kBrightness[] = {{"delta", -1.0, 1.0, +1, false}};
constexpr ParamSpec kContrast[] = {{"factor", 0.0, 1.0, -1, false}};
constexpr ParamSpec kElastic[] = {{"alpha", 0.0, 0.5, +1, false},
                                  {"sigma", 0.001, 0.5, 0, false}};
constexpr ParamSpec kPixelate[] = {{"factor", 1.0, 64.0, +1, true}};
constexpr ParamSpec kJpeg[] = {{"quality", 1.0, 100.0, -1, true}};
constexpr ParamSpec kGaussianBlur[] = {{"sigma", 0.0, 32.0, +1, false}};
constexpr ParamSpec kSpatter[] = {{"sigma", 0.5, 32.0, 0, false},
                                  {"threshold", -4.0, 4.0, -1, false},
                                  {"intensity", 0.0, 1.0, +1, false}};
constexpr ParamSpec kSaturate[] = {{"factor", 0.0, 20.0, +1, false}};
constexpr ParamSpec kAverageBlur[] = {{"size", 1.0, 63.0, +1, true}};
constexpr ParamSpec kMedianBlur[] = {{"size", 1.0, 63.0, +1, true}};
constexpr ParamSpec kDropout[] = {{"rate", 0.0, 1.0, +1, false}};

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, int line_no) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    fail(ErrorCode::kInvalidSpec, "severity table line " + std::to_string(line_no) +
                                      ": bad number '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParamSet::ParamSet(std::initializer_list<std::pair<std::string, double>> values) {
  for (const auto& [name, value] : values) set(name, value);
}

void ParamSet::set(std::string_view name, double value) {
  for (auto& [n, v] : values_) {
    if (n == name) {
      v = value;
      return;
    }
  }
  values_.emplace_back(std::string(name), value);
}

bool ParamSet::has(std::string_view name) const noexcept {
  return std::any_of(values_.begin(), values_.end(),
                     [&](const auto& p) { return p.first == name; });
}

double ParamSet::get(std::string_view name) const {
  for (const auto& [n, v] : values_) {
    if (n == name) return v;
  }
  fail(ErrorCode::kInvalidSpec, "missing parameter '" + std::string(name) + "'");
}

int ParamSet::get_int(std::string_view name) const {
  return static_cast<int>(std::lround(get(name)));
}

std::span<const ParamSpec> param_schema(CorruptionKind kind) {
  switch (kind) {
    case K::kGaussianNoise: return kGaussianNoise;
    case K::kShotNoise: return kShotNoise;
    case K::kImpulseNoise: return kImpulseNoise;
    case K::kSpeckleNoise: return kSpeckleNoise;
    case K::kDefocusBlur: return kDefocusBlur;
    case K::kGlassBlur: return kGlassBlur;
    case K::kMotionBlur: return kMotionBlur;
    case K::kZoomBlur: return kZoomBlur;
    case K::kSnow: return kSnow;
    case K::kFrost: return kFrost;
    case K::kFog: return kFog;
    case K::kBrightness: return kBrightness;
    case K::kContrast: return kContrast;
    case K::kElastic: return kElastic;
    case K::kPixelate: return kPixelate;
    case K::kJpegCompression: return kJpeg;
    case K::kGaussianBlur: return kGaussianBlur;
    case K::kSpatter: return kSpatter;
    case K::kSaturate: return kSaturate;
    case K::kAverageBlur: return kAverageBlur;
    case K::kMedianBlur: return kMedianBlur;
    case K::kDropout: return kDropout;
    default: return {};
  }
}

void validate_params(CorruptionKind kind, const ParamSet& params) {
  const auto schema = param_schema(kind);
  if (schema.empty()) {
    fail(ErrorCode::kInvalidSpec,
         std::string(to_string(kind)) + " has no parameters of its own");
  }
  for (const auto& spec : schema) {
    const double v = params.get(spec.name);
    const auto where = std::string(to_string(kind)) + "." + std::string(spec.name);
    if (!std::isfinite(v) || v < spec.min || v > spec.max) {
      fail(ErrorCode::kInvalidSpec, where + " = " + format_double(v) +
                                        " outside [" + format_double(spec.min) +
                                        ", " + format_double(spec.max) + "]");
    }
    if (spec.integer && v != std::round(v)) {
      fail(ErrorCode::kInvalidSpec, where + " must be an integer");
    }
  }
}

const SeverityTable& SeverityTable::defaults() {
  static const SeverityTable table = parse(kEmbeddedSeverityTable);
  return table;
}

std::string_view SeverityTable::default_text() { return kEmbeddedSeverityTable; }

SeverityTable SeverityTable::parse(std::string_view text) {
  SeverityTable table;
  std::array<std::array<bool, kMaxSeverity>, kAtomicKindCount> seen{};
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    while (!line.empty()) {
      const auto sp = line.find_first_of(" \t");
      fields.push_back(line.substr(0, sp));
      line = sp == std::string_view::npos ? std::string_view() : trim(line.substr(sp));
    }
    const auto where = "severity table line " + std::to_string(line_no);
    if (fields.size() < 3) fail(ErrorCode::kInvalidSpec, where + ": expected kind, severity and parameters");

    const auto kind = corruption_kind_from_string(fields[0]);
    if (is_mixed(kind)) fail(ErrorCode::kInvalidSpec, where + ": mixed kinds take their constituents' parameters");
    const double sev = parse_number(fields[1], line_no);
    if (sev != std::round(sev) || sev < kMinSeverity || sev > kMaxSeverity) {
      fail(ErrorCode::kInvalidSpec, where + ": severity must be an integer in 1..5");
    }
    const auto k = static_cast<std::size_t>(kind);
    const auto s = static_cast<std::size_t>(sev) - 1;
    if (seen[k][s]) fail(ErrorCode::kInvalidSpec, where + ": duplicate row");
    seen[k][s] = true;

    ParamSet params;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      const auto eq = fields[i].find('=');
      if (eq == std::string_view::npos || eq == 0) {
        fail(ErrorCode::kInvalidSpec, where + ": expected name=value, got '" + std::string(fields[i]) + "'");
      }
      params.set(fields[i].substr(0, eq), parse_number(fields[i].substr(eq + 1), line_no));
    }
    validate_params(kind, params);
    table.rows_[k][s] = std::move(params);
  }

  for (auto kind : atomic_kinds()) {
    const auto k = static_cast<std::size_t>(kind);
    for (int s = 0; s < kMaxSeverity; ++s) {
      if (!seen[k][s]) {
        fail(ErrorCode::kInvalidSpec, "severity table is missing " +
                                          std::string(to_string(kind)) +
                                          " severity " + std::to_string(s + 1));
      }
    }
    for (const auto& spec : param_schema(kind)) {
      if (spec.direction == 0) continue;
      for (int s = 1; s < kMaxSeverity; ++s) {
        const double prev = table.rows_[k][s - 1].get(spec.name);
        const double cur = table.rows_[k][s].get(spec.name);
        if ((cur - prev) * spec.direction < 0.0) {
          fail(ErrorCode::kInvalidSpec,
               std::string(to_string(kind)) + "." + std::string(spec.name) +
                   " is not monotone in severity (" + format_double(prev) +
                   " at " + std::to_string(s) + ", " + format_double(cur) +
                   " at " + std::to_string(s + 1) + ")");
        }
      }
    }
  }
  return table;
}

SeverityTable SeverityTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open severity table " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const ParamSet& SeverityTable::params(CorruptionKind kind, int severity) const {
  if (is_mixed(kind)) {
    fail(ErrorCode::kInvalidSpec, std::string(to_string(kind)) +
                                      " is mixed; look up its constituents");
  }
  if (static_cast<std::size_t>(kind) >= kAtomicKindCount) {
    fail(ErrorCode::kInvalidSpec, "unknown corruption kind");
  }
  if (severity < kMinSeverity || severity > kMaxSeverity) {
    fail(ErrorCode::kInvalidSpec,
         "severity " + std::to_string(severity) + " outside 1..5");
  }
  return rows_[static_cast<std::size_t>(kind)][static_cast<std::size_t>(severity - 1)];
}

std::string SeverityTable::to_text() const {
  std::string out;
  for (auto kind : atomic_kinds()) {
    for (int s = kMinSeverity; s <= kMaxSeverity; ++s) {
      out += to_string(kind);
      out += ' ';
      out += std::to_string(s);
      for (const auto& [name, value] : params(kind, s).entries()) {
        out += ' ' + name + '=' + format_double(value);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace spaug
