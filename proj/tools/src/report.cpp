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

#include "icofridge/cli/report.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "icofridge/scenario_config.hpp"
#include "json.hpp"

namespace icofridge::cli {

namespace {

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const {
      if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
      return x;
    }
    nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("Report::add_row: expected " + std::to_string(columns.size()) + " cells, got " +
                           std::to_string(row.size()));
  }
  rows.push_back(std::move(row));
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

void write_csv(std::ostream& out, const Report& r) {
  out << "# icofridge " << r.command << '\n';
  for (const auto& [key, value] : r.config) out << "# config " << key << " = " << value << '\n';
  for (const auto& [key, value] : r.summary) out << "# result " << key << " = " << cell_text(value) << '\n';
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_field(r.columns[i]);
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
    out << '\n';
  }
}

void write_json(std::ostream& out, const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.config) j["config"][key] = value;
  j["summary"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.summary) j["summary"][key] = cell_json(value);
  j["columns"] = r.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    auto jr = nlohmann::ordered_json::array();
    for (const auto& c : row) jr.push_back(cell_json(c));
    j["rows"].push_back(std::move(jr));
  }
  j["ok"] = r.ok;
  out << j.dump(2) << '\n';
}

void write_report(std::ostream& out, const Report& r, Format format) {
  if (format == Format::kCsv) {
    write_csv(out, r);
  } else {
    write_json(out, r);
  }
}

}  // namespace icofridge::cli
