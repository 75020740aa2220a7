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

#include "spaug/augpolicy/policy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spaug/common/error.hpp"
#include "spaug/common/log.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/textaug/tokenizer.hpp"

namespace spaug {

using nlohmann::json;

std::string PolicyDecision::choice() const {
  if (!augment) return "none";
  return std::string(modality == Modality::kImage ? to_string(image_kind) : to_string(text_kind));
}

PolicyConfig::PolicyConfig()
    : image_kinds(seen_kinds().begin(), seen_kinds().end()),
      text_kinds(text_aug_kinds().begin(), text_aug_kinds().end()) {}

void PolicyConfig::validate() const {
  if (!(p_none >= 0.0 && p_none <= 1.0)) {
    fail(ErrorCode::kInvalidArgument, "policy p_none must lie in [0, 1]");
  }
  if (severity_min < 1 || severity_max > 5 || severity_min > severity_max) {
    fail(ErrorCode::kInvalidArgument, "policy severity range must be within 1..5 and non-empty");
  }
  if (p_none < 1.0 && (image_kinds.empty() || text_kinds.empty())) {
    fail(ErrorCode::kInvalidArgument, "policy enables augmentation but no kinds");
  }
}

PolicyConfig PolicyConfig::from_json(std::string_view text) {
  const auto j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    fail(ErrorCode::kInvalidArgument, "policy config is not a JSON object");
  }
  PolicyConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "p_none") {
        c.p_none = value.get<double>();
      } else if (key == "severity") {
        const auto range = value.get<std::vector<int>>();
        if (range.size() != 2) fail(ErrorCode::kInvalidArgument, "severity must be [lo, hi]");
        c.severity_min = range[0];
        c.severity_max = range[1];
      } else if (key == "image_kinds") {
        c.image_kinds.clear();
        for (const auto& tag : value.get<std::vector<std::string>>()) {
          c.image_kinds.push_back(corruption_kind_from_string(tag));
        }
      } else if (key == "text_kinds") {
        c.text_kinds.clear();
        for (const auto& tag : value.get<std::vector<std::string>>()) {
          c.text_kinds.push_back(text_aug_kind_from_string(tag));
        }
      } else if (key == "redraw_per_epoch") {
        c.redraw_per_epoch = value.get<bool>();
      } else {
        fail(ErrorCode::kInvalidArgument, "unknown policy config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("policy config: ") + e.what());
  } catch (const Error& e) {
    fail(ErrorCode::kInvalidArgument, e.what());
  }
  c.validate();
  return c;
}

PolicyConfig PolicyConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open policy config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string PolicyConfig::to_json() const {
  json j;
  j["p_none"] = p_none;
  j["severity"] = {severity_min, severity_max};
  j["image_kinds"] = json::array();
  for (auto k : image_kinds) j["image_kinds"].push_back(std::string(to_string(k)));
  j["text_kinds"] = json::array();
  for (auto k : text_kinds) j["text_kinds"].push_back(std::string(to_string(k)));
  j["redraw_per_epoch"] = redraw_per_epoch;
  return j.dump();
}

namespace {

// Exact test of a * m >= b * n for finite non-negative a, b and small
// integers m, n, via 53-bit mantissas in 128-bit arithmetic.
bool product_ge(double a, std::uint64_t m, double b, std::uint64_t n) noexcept {
  __extension__ using u128 = unsigned __int128;
  auto split = [](double v, std::uint64_t k, u128& mant, int& exp) {
    int e = 0;
    const double f = std::frexp(v, &e);
    mant = static_cast<u128>(static_cast<std::uint64_t>(std::ldexp(f, 53))) * k;
    exp = e - 53;
  };
  u128 lhs = 0, rhs = 0;
  int le = 0, re = 0;
  split(a, m, lhs, le);
  split(b, n, rhs, re);
  if (rhs == 0) return true;
  if (lhs == 0) return false;
  auto bits = [](u128 v) {
    int n = 0;
    while (v) {
      v >>= 1;
      ++n;
    }
    return n;
  };
  // Align exponents, shifting the larger-exponent side left when it fits.
  if (le >= re) {
    const int d = le - re;
    if (bits(lhs) + d > 127) return true;
    return (lhs << d) >= rhs;
  }
  const int d = re - le;
  if (bits(rhs) + d > 127) return false;
  return lhs >= (rhs << d);
}

}  // namespace

std::optional<std::size_t> decide_index(double u, double p_none, std::size_t count) noexcept {
  const double p_aug = 1.0 - p_none;
  if (count == 0 || !(u < p_aug)) return std::nullopt;
  // Estimate in floating point, then settle on the largest b with
  // u * count >= b * p_aug.
  auto idx = static_cast<std::size_t>(std::floor(u / p_aug * static_cast<double>(count)));
  if (idx >= count) idx = count - 1;
  while (idx > 0 && !product_ge(u, count, p_aug, idx)) --idx;
  while (idx + 1 < count && product_ge(u, count, p_aug, idx + 1)) ++idx;
  return idx;
}

PolicyDecision sample_image_aug(std::uint64_t seed, const PolicyConfig& config) {
  PolicyDecision d;
  d.modality = Modality::kImage;
  d.seed = seed;
  d.draw = Rng(derive_subseed(seed, "policy/kind")).uniform();
  Rng sev(derive_subseed(seed, "policy/severity"));
  const int severity = sev.uniform_int(config.severity_min, config.severity_max);
  if (const auto idx = decide_index(d.draw, config.p_none, config.image_kinds.size())) {
    d.augment = true;
    d.image_kind = config.image_kinds[*idx];
    d.severity = severity;
  }
  return d;
}

PolicyDecision sample_text_aug(std::uint64_t seed, const PolicyConfig& config) {
  PolicyDecision d;
  d.modality = Modality::kText;
  d.seed = seed;
  d.draw = Rng(derive_subseed(seed, "policy/kind")).uniform();
  if (const auto idx = decide_index(d.draw, config.p_none, config.text_kinds.size())) {
    d.augment = true;
    d.text_kind = config.text_kinds[*idx];
  }
  return d;
}

std::uint64_t item_seed(std::uint64_t global_seed, std::uint64_t item_id, int epoch,
                        const PolicyConfig& config) {
  auto base = global_seed;
  if (config.redraw_per_epoch) base = derive_subseed(global_seed, "epoch:" + std::to_string(epoch));
  return derive_subseed(base, "item:" + std::to_string(item_id));
}

std::uint64_t image_decision_seed(std::uint64_t item) { return derive_subseed(item, "image"); }

std::uint64_t caption_decision_seed(std::uint64_t item, std::size_t j) {
  return derive_subseed(item, "caption:" + std::to_string(j));
}

std::uint64_t operator_seed(std::uint64_t decision_seed) {
  return derive_subseed(decision_seed, "apply");
}

PolicyOutput apply_policy(const PolicySample& sample, std::uint64_t global_seed, int epoch,
                          const PolicyContext& ctx) {
  ctx.config.validate();
  const auto where = "sample " + std::to_string(sample.id) + ": ";
  const auto iseed = item_seed(global_seed, sample.id, epoch, ctx.config);
  PolicyOutput out;
  try {
    const auto img = sample_image_aug(image_decision_seed(iseed), ctx.config);
    out.audit.push_back(img);
    if (img.augment) {
      const CorruptionSpec spec{img.image_kind, img.severity, operator_seed(img.seed)};
      out.image = corrupt(sample.image, spec, *ctx.severity_table);
    } else {
      out.image = sample.image;
    }

    for (std::size_t j = 0; j < sample.captions.size(); ++j) {
      const auto txt = sample_text_aug(caption_decision_seed(iseed, j), ctx.config);
      out.audit.push_back(txt);
      if (!txt.augment) {
        out.captions.push_back(sample.captions[j]);
        continue;
      }
      const auto seq = tokenize(sample.captions[j], *ctx.text.lexicon);
      try {
        const auto res = augment_text(seq, txt.text_kind, operator_seed(txt.seed), ctx.text);
        out.captions.push_back(detokenize(res.seq));
      } catch (const TransportError& e) {
        if (!ctx.fallback_on_transport_error) throw;
        const auto note = where + "caption " + std::to_string(j) +
                          " kept unchanged after translator failure: " + e.what();
        log_warning(note);
        out.notes.push_back(note);
        out.captions.push_back(sample.captions[j]);
      }
    }
  } catch (const TransportError& e) {
    throw TransportError(where + e.what(), e.untranslated());
  } catch (const Error& e) {
    throw Error(e.code(), where + e.what());
  }
  return out;
}

std::string audit_json(const PolicyDecision& d, std::uint64_t item_id,
                       std::optional<std::size_t> caption_index) {
  json j;
  j["item"] = item_id;
  j["modality"] = d.modality == Modality::kImage ? "image" : "text";
  if (caption_index) j["caption"] = *caption_index;
  j["choice"] = d.choice();
  if (d.augment && d.modality == Modality::kImage) j["severity"] = d.severity;
  j["draw"] = d.draw;
  j["seed"] = d.seed;
  return j.dump();
}

}  // namespace spaug
