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

#include <iostream>
#include <thread>

#include "commands.hpp"
#include "spaug/common/error.hpp"
#include "spaug/version.hpp"

namespace spaug::cli {

void emit(const RunConfig& config, const nlohmann::json& json, const std::string& text) {
  if (config.output_format() == OutputFormat::kText) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::cout << json.dump(2) << '\n';
  }
}

namespace {

// Exit codes: 0 success, 1 I/O, 2 usage or validation, 3 external service.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return 1;
    case ErrorCode::kTransport: return 3;
    default: return 2;
  }
}

}  // namespace
}  // namespace spaug::cli

int main(int argc, char** argv) {
  using namespace spaug::cli;
  CLI::App app{"Semantic-preserving augmentation and retrieval robustness toolkit", "spaug"};
  app.set_version_flag("--version", std::string("spaug ") + spaug::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--seed", config.seed_flag,
                 "Global seed (u64). Without it a random seed is drawn and recorded.");
  app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--lexicon", config.lexicon_path, "Lexicon TSV replacing the built-in one")
      ->check(CLI::ExistingFile);
  app.add_option("--thesaurus", config.thesaurus_path, "Thesaurus TSV replacing the built-in one")
      ->check(CLI::ExistingFile);
  app.add_option("--severity-table", config.severity_table_path,
                 "Severity table replacing the built-in one")
      ->check(CLI::ExistingFile);
  app.add_option("--translator", config.translator,
                 "stub (identity), dict:<path>, http://host:port/path, or real "
                 "(endpoint from SPAUG_TRANSLATOR_URL)");
  app.add_option("--translation-cache", config.translation_cache, "JSONL translation cache");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("-v,--verbose", config.verbose, "Log informational messages");

  Action action;
  add_image_commands(app, config, action);
  add_text_commands(app, config, action);
  add_policy_commands(app, config, action);
  add_dataset_commands(app, config, action);
  add_eval_command(app, config, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    config.finalize();
    return action ? action() : 2;
  } catch (const spaug::TransportError& e) {
    std::cerr << "spaug: " << e.what()
              << "\nThe translation service did not answer. Check that it is running and that "
                 "SPAUG_TRANSLATOR_URL points to it, then retry; --translator stub runs offline.\n";
    return 3;
  } catch (const spaug::Error& e) {
    std::cerr << "spaug: " << spaug::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "spaug: io: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "spaug: " << e.what() << '\n';
    return 2;
  }
}
