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

#include "spaug/dataset/manifest.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "common/text_util.hpp"
#include "spaug/common/error.hpp"

namespace spaug {

using nlohmann::json;

std::string_view to_string(Split split) noexcept {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "test";
}

std::optional<Split> parse_split(std::string_view tag) noexcept {
  if (tag == "train") return Split::kTrain;
  if (tag == "val") return Split::kVal;
  if (tag == "test") return Split::kTest;
  return std::nullopt;
}

SplitCounts Manifest::counts() const {
  SplitCounts c;
  for (const auto& item : items) {
    switch (item.split) {
      case Split::kTrain: ++c.train; break;
      case Split::kVal: ++c.val; break;
      case Split::kTest: ++c.test; break;
    }
  }
  return c;
}

Manifest Manifest::restricted_to(Split split) const {
  Manifest m;
  m.image_root = image_root;
  for (const auto& item : items) {
    if (item.split == split) m.items.push_back(item);
  }
  return m;
}

namespace {

[[noreturn]] void schema(int line_no, const std::string& msg) {
  fail(ErrorCode::kSchema, "manifest line " + std::to_string(line_no) + ": " + msg);
}

ManifestItem parse_item(const json& j, int line_no) {
  if (!j.is_object()) schema(line_no, "expected a JSON object");
  for (const char* key : {"id", "image", "captions", "split"}) {
    if (!j.contains(key)) schema(line_no, std::string("missing field '") + key + "'");
  }
  ManifestItem item;
  if (!j["id"].is_number_unsigned()) schema(line_no, "'id' must be a non-negative integer");
  item.id = j["id"].get<std::uint64_t>();
  if (!j["image"].is_string() || j["image"].get<std::string>().empty()) {
    schema(line_no, "'image' must be a non-empty string");
  }
  item.image = j["image"].get<std::string>();
  if (std::filesystem::path(item.image).is_absolute()) {
    schema(line_no, "'image' must be a relative path");
  }
  const auto& caps = j["captions"];
  if (!caps.is_array()) schema(line_no, "'captions' must be an array");
  if (caps.size() != kCaptionsPerImage) {
    schema(line_no, "expected 5 captions, found " + std::to_string(caps.size()));
  }
  for (const auto& c : caps) {
    if (!c.is_string()) schema(line_no, "captions must be strings");
    auto s = c.get<std::string>();
    if (!detail::valid_utf8(s)) schema(line_no, "caption is not valid UTF-8");
    item.captions.push_back(std::move(s));
  }
  const auto split = j["split"].is_string() ? parse_split(j["split"].get<std::string>())
                                            : std::optional<Split>{};
  if (!split) schema(line_no, "'split' must be one of train, val, test");
  item.split = *split;

  try {
    if (j.contains("corruption")) {
      const auto& c = j["corruption"];
      const auto kind = parse_corruption_kind(c.at("kind").get<std::string>());
      if (!kind) schema(line_no, "unknown corruption kind");
      item.corruption = CorruptionRecord{*kind, c.at("severity").get<int>(),
                                         c.at("seed").get<std::uint64_t>()};
    }
    if (j.contains("text_aug")) {
      const auto& t = j["text_aug"];
      const auto kind = parse_text_aug_kind(t.at("kind").get<std::string>());
      if (!kind) schema(line_no, "unknown text augmentation kind");
      TextAugRecord rec;
      rec.kind = *kind;
      rec.seed = t.at("seed").get<std::uint64_t>();
      if (t.contains("translator")) rec.translator = t["translator"].get<std::string>();
      if (t.contains("pivot")) rec.pivot = t["pivot"].get<std::string>();
      if (t.contains("fallback_captions")) {
        rec.fallback_captions = t["fallback_captions"].get<std::vector<std::size_t>>();
      }
      item.text_aug = std::move(rec);
    }
  } catch (const json::exception& e) {
    schema(line_no, std::string("bad provenance record: ") + e.what());
  }
  return item;
}

}  // namespace

Manifest parse_manifest(std::string_view jsonl, const std::filesystem::path& image_root) {
  Manifest m;
  m.image_root = image_root;
  std::unordered_set<std::uint64_t> ids;
  detail::for_each_line(jsonl, [&](int line_no, std::string_view line) {
    if (detail::trim(line).empty()) return;
    const auto j = json::parse(line, nullptr, false);
    if (j.is_discarded()) schema(line_no, "invalid JSON");
    auto item = parse_item(j, line_no);
    if (!ids.insert(item.id).second) schema(line_no, "duplicate id " + std::to_string(item.id));
    m.items.push_back(std::move(item));
  });
  if (m.items.empty()) fail(ErrorCode::kSchema, "manifest has no items");
  return m;
}

Manifest load_manifest(const std::filesystem::path& path, const ManifestLoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open manifest " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const auto root = options.image_root.empty() ? path.parent_path() : options.image_root;
  Manifest m = parse_manifest(ss.str(), root);

  std::unordered_map<std::string, Split> split_of;
  std::vector<std::string> conflicts;
  for (const auto& item : m.items) {
    const auto [it, fresh] = split_of.emplace(item.image, item.split);
    if (!fresh && it->second != item.split) conflicts.push_back(item.image);
  }
  if (!conflicts.empty()) {
    fail(ErrorCode::kValidation,
         "images assigned to more than one split: " + conflicts.front() +
             (conflicts.size() > 1 ? " and " + std::to_string(conflicts.size() - 1) + " more" : ""));
  }

  if (options.check_images) {
    std::vector<std::string> missing;
    for (const auto& item : m.items) {
      if (!std::filesystem::is_regular_file(m.image_root / item.image)) missing.push_back(item.image);
    }
    if (!missing.empty()) {
      std::string msg = std::to_string(missing.size()) + " image file(s) missing under " +
                        m.image_root.string() + ":";
      constexpr std::size_t kShown = 20;
      for (std::size_t i = 0; i < missing.size() && i < kShown; ++i) msg += "\n  " + missing[i];
      if (missing.size() > kShown) msg += "\n  ...";
      fail(ErrorCode::kValidation, msg);
    }
  }
  return m;
}

std::string manifest_line(const ManifestItem& item) {
  json j;
  j["id"] = item.id;
  j["image"] = item.image;
  j["captions"] = item.captions;
  j["split"] = std::string(to_string(item.split));
  if (item.corruption) {
    j["corruption"] = {{"kind", std::string(to_string(item.corruption->kind))},
                       {"severity", item.corruption->severity},
                       {"seed", item.corruption->seed}};
  }
  if (item.text_aug) {
    json t = {{"kind", std::string(to_string(item.text_aug->kind))}, {"seed", item.text_aug->seed}};
    if (!item.text_aug->translator.empty()) t["translator"] = item.text_aug->translator;
    if (!item.text_aug->pivot.empty()) t["pivot"] = item.text_aug->pivot;
    if (!item.text_aug->fallback_captions.empty()) {
      t["fallback_captions"] = item.text_aug->fallback_captions;
    }
    j["text_aug"] = std::move(t);
  }
  return j.dump();
}

std::string serialize_manifest(const Manifest& manifest) {
  std::string out;
  for (const auto& item : manifest.items) {
    out += manifest_line(item);
    out += '\n';
  }
  return out;
}

SplitLayout flickr30k_layout() { return {"flickr30k", 1000, 1000, 0}; }
SplitLayout coco_layout() { return {"coco", 5000, 5000, 1000}; }

SplitLayout layout_from_string(std::string_view name) {
  if (name == "flickr30k" || name == "flickr") return flickr30k_layout();
  if (name == "coco" || name == "mscoco") return coco_layout();
  fail(ErrorCode::kInvalidArgument,
       "unknown dataset layout '" + std::string(name) + "'; use flickr30k or coco");
}

void assign_splits(Manifest& manifest, const SplitLayout& layout) {
  const auto n = manifest.items.size();
  if (n < layout.val + layout.test) {
    fail(ErrorCode::kInvalidArgument,
         layout.name + " layout needs at least " + std::to_string(layout.val + layout.test) +
             " items, manifest has " + std::to_string(n));
  }
  const auto train = n - layout.val - layout.test;
  for (std::size_t i = 0; i < n; ++i) {
    manifest.items[i].split = i < train ? Split::kTrain
                              : i < train + layout.val ? Split::kVal
                                                       : Split::kTest;
  }
}

std::size_t test_fold(std::size_t test_index, const SplitLayout& layout) {
  return layout.fold_size == 0 ? 0 : test_index / layout.fold_size;
}

}  // namespace spaug
