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

#include <array>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spaug/imgcorrupt/corruption_kind.hpp"

namespace spaug {

/// Named scalar parameters of one atomic corruption operator.
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(std::initializer_list<std::pair<std::string, double>> values);

  void set(std::string_view name, double value);
  bool has(std::string_view name) const noexcept;
  /// Throws invalid-spec when the parameter is missing.
  double get(std::string_view name) const;
  int get_int(std::string_view name) const;

  const std::vector<std::pair<std::string, double>>& entries() const noexcept {
    return values_;
  }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  std::vector<std::pair<std::string, double>> values_;
};

/// Declared shape of one operator parameter.
struct ParamSpec {
  std::string_view name;
  double min;
  double max;
  /// +1: larger value degrades more; -1: smaller value degrades more;
  /// 0: shape parameter, not ordered by severity.
  int direction;
  bool integer;
};

/// Parameter schema of an atomic kind. Empty for mixed kinds.
std::span<const ParamSpec> param_schema(CorruptionKind kind);

/// Checks presence, integrality and range of every schema parameter.
/// Throws invalid-spec naming the offending parameter.
void validate_params(CorruptionKind kind, const ParamSet& params);

/// Per (atomic kind, severity 1..5) operator parameters.
///
/// Text format, one row per line; '#' starts a comment:
///
///     <kind> <severity> <name>=<value> [<name>=<value> ...]
///
/// A table is only constructed when all 22 atomic kinds have all five
/// severities, every value passes validate_params, and each ordered parameter
/// is monotone (non-decreasing along its degradation direction).
class SeverityTable {
 public:
  static constexpr int kMinSeverity = 1;
  static constexpr int kMaxSeverity = 5;

  /// The table shipped in core/data/severity_table.txt, compiled in.
  static const SeverityTable& defaults();
  static std::string_view default_text();

  static SeverityTable parse(std::string_view text);
  static SeverityTable load(const std::filesystem::path& path);

  /// Throws invalid-spec for mixed kinds or severities outside 1..5.
  const ParamSet& params(CorruptionKind kind, int severity) const;

  std::string to_text() const;

 private:
  SeverityTable() = default;

  std::array<std::array<ParamSet, kMaxSeverity>, kAtomicKindCount> rows_;
};

}  // namespace spaug
