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

#include <functional>

#include <CLI11.hpp>

#include "run_config.hpp"

namespace spaug::cli {

// A subcommand stores the work to run after parsing succeeds; the return
// value is the process exit code.
using Action = std::function<int()>;

void add_image_commands(CLI::App& app, RunConfig& config, Action& action);
void add_text_commands(CLI::App& app, RunConfig& config, Action& action);
void add_policy_commands(CLI::App& app, RunConfig& config, Action& action);
void add_dataset_commands(CLI::App& app, RunConfig& config, Action& action);
void add_eval_command(CLI::App& app, RunConfig& config, Action& action);

/// Prints a JSON value or its text rendering according to --format.
void emit(const RunConfig& config, const nlohmann::json& json, const std::string& text);

}  // namespace spaug::cli
