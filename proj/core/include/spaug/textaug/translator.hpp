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

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace spaug {

/// Translation backend. Implementations must be safe to call concurrently.
class TranslatorClient {
 public:
  virtual ~TranslatorClient() = default;

  /// Throws TransportError (carrying `text`) when the backend is unavailable.
  virtual std::string translate(const std::string& text, const std::string& source_lang,
                                const std::string& target_lang) = 0;
  /// Stable identity recorded in provenance and cache keys.
  virtual std::string id() const = 0;
};

/// Returns its input unchanged.
class IdentityTranslator final : public TranslatorClient {
 public:
  std::string translate(const std::string& text, const std::string&,
                        const std::string&) override {
    return text;
  }
  std::string id() const override { return "identity"; }
};

/// Phrase-table stub for offline runs. Phrases are matched case-insensitively
/// on word boundaries, longest first; unmatched text passes through.
///
/// File rows: `source_lang TAB target_lang TAB phrase TAB translation`.
class DictionaryTranslator final : public TranslatorClient {
 public:
  explicit DictionaryTranslator(std::string name = "dictionary") : name_(std::move(name)) {}

  static std::unique_ptr<DictionaryTranslator> load(const std::filesystem::path& path);

  void add(const std::string& source_lang, const std::string& target_lang,
           std::string_view phrase, std::string_view translation);

  std::string translate(const std::string& text, const std::string& source_lang,
                        const std::string& target_lang) override;
  std::string id() const override { return name_; }

 private:
  std::string name_;
  // (source, target) -> lowercase phrase -> translation
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> tables_;
};

struct HttpTranslatorOptions {
  std::string url;  // e.g. http://127.0.0.1:5000/translate
  std::chrono::milliseconds timeout{10000};
  int max_in_flight = 4;
};

/// Posts {text, source_lang, target_lang} as JSON and reads {text} back.
class HttpTranslator final : public TranslatorClient {
 public:
  explicit HttpTranslator(HttpTranslatorOptions options);
  ~HttpTranslator() override;

  std::string translate(const std::string& text, const std::string& source_lang,
                        const std::string& target_lang) override;
  std::string id() const override { return "http:" + options_.url; }

 private:
  struct Impl;
  HttpTranslatorOptions options_;
  std::unique_ptr<Impl> impl_;
};

/// Memoizes another translator. With a cache path, entries are loaded on
/// construction and appended as JSON lines when new translations arrive.
class CachingTranslator final : public TranslatorClient {
 public:
  explicit CachingTranslator(std::shared_ptr<TranslatorClient> inner,
                             std::filesystem::path cache_path = {});

  std::string translate(const std::string& text, const std::string& source_lang,
                        const std::string& target_lang) override;
  std::string id() const override { return inner_->id(); }

  std::size_t hits() const;
  std::size_t misses() const;
  std::size_t size() const;

 private:
  static std::string key(const std::string& text, const std::string& source_lang,
                         const std::string& target_lang);

  std::shared_ptr<TranslatorClient> inner_;
  std::filesystem::path cache_path_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::string> cache_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// Builds a translator from a spec string:
///   "identity", "dict:<path>" or an http:// URL.
std::shared_ptr<TranslatorClient> make_translator(std::string_view spec,
                                                  const std::filesystem::path& cache_path = {});

}  // namespace spaug
