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

#include "spaug/textaug/translator.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <semaphore>
#include <sstream>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "common/text_util.hpp"
#include "spaug/common/error.hpp"
#include "spaug/common/log.hpp"
#include "spaug/textaug/token.hpp"

namespace spaug {
namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '\''; }

}  // namespace

// ---------------------------------------------------------------------------
// DictionaryTranslator

std::unique_ptr<DictionaryTranslator> DictionaryTranslator::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open translation dictionary " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const auto text = ss.str();
  auto t = std::make_unique<DictionaryTranslator>("dictionary:" + path.filename().string());
  detail::for_each_line(text, [&](int line_no, std::string_view raw) {
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') return;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 4) {
      fail(ErrorCode::kSchema, "translation dictionary line " + std::to_string(line_no) +
                                   ": expected 4 tab-separated columns");
    }
    t->add(std::string(detail::trim(cols[0])), std::string(detail::trim(cols[1])),
           detail::trim(cols[2]), detail::trim(cols[3]));
  });
  return t;
}

void DictionaryTranslator::add(const std::string& source_lang, const std::string& target_lang,
                               std::string_view phrase, std::string_view translation) {
  if (phrase.empty()) fail(ErrorCode::kInvalidArgument, "empty dictionary phrase");
  tables_[{source_lang, target_lang}][to_lower(phrase)] = std::string(translation);
}

std::string DictionaryTranslator::translate(const std::string& text, const std::string& source_lang,
                                            const std::string& target_lang) {
  const auto it = tables_.find({source_lang, target_lang});
  if (it == tables_.end()) return text;

  std::vector<const std::pair<const std::string, std::string>*> phrases;
  for (const auto& entry : it->second) phrases.push_back(&entry);
  std::stable_sort(phrases.begin(), phrases.end(),
                   [](auto* a, auto* b) { return a->first.size() > b->first.size(); });

  const auto lower = to_lower(text);
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool boundary = i == 0 || !is_word_char(text[i - 1]);
    bool matched = false;
    if (boundary) {
      for (const auto* p : phrases) {
        const auto& key = p->first;
        if (lower.compare(i, key.size(), key) != 0) continue;
        const auto end = i + key.size();
        if (end < text.size() && is_word_char(text[end])) continue;
        out += with_leading_case(p->second, starts_upper(std::string_view(text).substr(i, 1)));
        i = end;
        matched = true;
        break;
      }
    }
    if (!matched) out += text[i++];
  }
  return out;
}

// ---------------------------------------------------------------------------
// HttpTranslator

struct HttpTranslator::Impl {
  explicit Impl(int limit) : in_flight(limit) {}

  std::string origin;
  std::string path;
  std::counting_semaphore<> in_flight;
};

HttpTranslator::HttpTranslator(HttpTranslatorOptions options) : options_(std::move(options)) {
  if (options_.max_in_flight < 1) {
    fail(ErrorCode::kInvalidArgument, "translator in-flight limit must be at least 1");
  }
  const std::string_view url = options_.url;
  constexpr std::string_view kScheme = "http://";
  if (url.substr(0, kScheme.size()) != kScheme) {
    fail(ErrorCode::kInvalidArgument, "translator URL must start with http://: " + options_.url);
  }
  impl_ = std::make_unique<Impl>(options_.max_in_flight);
  const auto slash = url.find('/', kScheme.size());
  impl_->origin = std::string(url.substr(0, slash));
  impl_->path = slash == std::string_view::npos ? "/" : std::string(url.substr(slash));
  if (impl_->origin.size() == kScheme.size()) {
    fail(ErrorCode::kInvalidArgument, "translator URL has no host: " + options_.url);
  }
}

HttpTranslator::~HttpTranslator() = default;

std::string HttpTranslator::translate(const std::string& text, const std::string& source_lang,
                                      const std::string& target_lang) {
  impl_->in_flight.acquire();
  struct Release {
    std::counting_semaphore<>& s;
    ~Release() { s.release(); }
  } release{impl_->in_flight};

  httplib::Client client(impl_->origin);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto usecs =
      std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const nlohmann::json request = {
      {"text", text}, {"source_lang", source_lang}, {"target_lang", target_lang}};
  auto res = client.Post(impl_->path, request.dump(), "application/json");
  if (!res) {
    throw TransportError("translator request to " + options_.url +
                             " failed: " + httplib::to_string(res.error()),
                         text);
  }
  if (res->status != 200) {
    throw TransportError(
        "translator at " + options_.url + " returned HTTP " + std::to_string(res->status), text);
  }
  const auto body = nlohmann::json::parse(res->body, nullptr, false);
  if (body.is_discarded() || !body.is_object() || !body.contains("text") ||
      !body["text"].is_string()) {
    throw TransportError("translator at " + options_.url + " sent a malformed response", text);
  }
  return body["text"].get<std::string>();
}

// ---------------------------------------------------------------------------
// CachingTranslator

CachingTranslator::CachingTranslator(std::shared_ptr<TranslatorClient> inner,
                                     std::filesystem::path cache_path)
    : inner_(std::move(inner)), cache_path_(std::move(cache_path)) {
  if (!inner_) fail(ErrorCode::kInvalidArgument, "caching translator needs a backend");
  if (cache_path_.empty()) return;
  std::ifstream in(cache_path_, std::ios::binary);
  if (!in) return;
  const auto id = inner_->id();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("translator") || !j.contains("text") ||
        !j.contains("source_lang") || !j.contains("target_lang") || !j.contains("translation")) {
      log_warning("translation cache " + cache_path_.string() + " line " +
                  std::to_string(line_no) + " is malformed; skipped");
      continue;
    }
    if (!j["translator"].is_string() || j["translator"].get<std::string>() != id) continue;
    try {
      cache_[key(j["text"].get<std::string>(), j["source_lang"].get<std::string>(),
                 j["target_lang"].get<std::string>())] = j["translation"].get<std::string>();
    } catch (const nlohmann::json::exception&) {
      log_warning("translation cache " + cache_path_.string() + " line " +
                  std::to_string(line_no) + " has non-string fields; skipped");
    }
  }
}

std::string CachingTranslator::key(const std::string& text, const std::string& source_lang,
                                   const std::string& target_lang) {
  return source_lang + '\x1f' + target_lang + '\x1f' + text;
}

std::string CachingTranslator::translate(const std::string& text, const std::string& source_lang,
                                         const std::string& target_lang) {
  const auto k = key(text, source_lang, target_lang);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(k); it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  auto result = inner_->translate(text, source_lang, target_lang);
  std::lock_guard lock(mutex_);
  ++misses_;
  if (cache_.emplace(k, result).second && !cache_path_.empty()) {
    std::ofstream out(cache_path_, std::ios::binary | std::ios::app);
    if (!out) fail(ErrorCode::kIo, "cannot append to translation cache " + cache_path_.string());
    const nlohmann::json j = {{"translator", inner_->id()}, {"source_lang", source_lang},
                              {"target_lang", target_lang}, {"text", text},
                              {"translation", result}};
    out << j.dump() << '\n';
  }
  return result;
}

std::size_t CachingTranslator::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t CachingTranslator::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

std::size_t CachingTranslator::size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::shared_ptr<TranslatorClient> make_translator(std::string_view spec,
                                                  const std::filesystem::path& cache_path) {
  std::shared_ptr<TranslatorClient> base;
  if (spec.empty() || spec == "identity") {
    base = std::make_shared<IdentityTranslator>();
  } else if (spec.substr(0, 5) == "dict:") {
    base = DictionaryTranslator::load(std::filesystem::path(std::string(spec.substr(5))));
  } else if (spec.substr(0, 7) == "http://") {
    base = std::make_shared<HttpTranslator>(HttpTranslatorOptions{std::string(spec)});
  } else {
    fail(ErrorCode::kInvalidArgument,
         "unknown translator '" + std::string(spec) + "'; use identity, dict:<path> or http://...");
  }
  if (cache_path.empty() && spec.substr(0, 7) != "http://") return base;
  return std::make_shared<CachingTranslator>(std::move(base), cache_path);
}

}  // namespace spaug
