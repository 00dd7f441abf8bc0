// Copyright 2026 The icofridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICOFRIDGE_CLI_REPORT_HPP
#define ICOFRIDGE_CLI_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace icofridge::cli {

/// An empty cell (std::monostate) marks a value that does not exist, such as
/// the state of a branch that never occurs.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

/**
 * Output of one command: resolved configuration, scalar results and a table.
 */
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool ok = true;

  /// Throws std::logic_error when the row width differs from columns.size().
  void add_row(std::vector<Cell> row);
  void add_summary(std::string key, Cell value) { summary.emplace_back(std::move(key), std::move(value)); }
};

enum class Format { kCsv, kJson };

std::optional<Format> parse_format(std::string_view name);

/// CSV with `#` metadata lines; infinities are written as inf / -inf and
/// empty cells as nothing.
void write_csv(std::ostream& out, const Report& r);

/// JSON object with "command", "config", "summary", "columns", "rows", "ok".
/// Infinities become the strings "inf" / "-inf" and empty cells null.
void write_json(std::ostream& out, const Report& r);

void write_report(std::ostream& out, const Report& r, Format format);

}  // namespace icofridge::cli

#endif  // ICOFRIDGE_CLI_REPORT_HPP
