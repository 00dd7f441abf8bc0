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

#include "icofridge/scenario_config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace icofridge {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf.data(), end);
}

double parse_real(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || std::isnan(value)) {
    throw ConfigError("not a real number: '" + std::string(text) + "'");
  }
  return value;
}

ScenarioConfig ScenarioConfig::parse(std::istream& in) {
  ScenarioConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string value(trim(view.substr(eq + 1)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    if (cfg.entries_.count(key)) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    cfg.entries_[key] = value;
  }
  return cfg;
}

ScenarioConfig ScenarioConfig::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse(in);
}

void ScenarioConfig::set(const std::string& key, const std::string& value) { entries_[key] = value; }

bool ScenarioConfig::has(const std::string& key) const { return entries_.count(key) > 0; }

const std::string* ScenarioConfig::raw(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string ScenarioConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto* v = raw(key);
  return resolved_[key] = v ? *v : fallback;
}

double ScenarioConfig::get_real(const std::string& key, double fallback) const {
  double value = fallback;
  if (const auto* v = raw(key)) {
    try {
      value = parse_real(*v);
    } catch (const ConfigError& e) {
      throw ConfigError("key '" + key + "': " + e.what());
    }
  }
  resolved_[key] = format_real(value);
  return value;
}

std::int64_t ScenarioConfig::get_int(const std::string& key, std::int64_t fallback) const {
  std::int64_t value = fallback;
  if (const auto* v = raw(key)) {
    const auto [end, ec] = std::from_chars(v->data(), v->data() + v->size(), value);
    if (v->empty() || ec != std::errc() || end != v->data() + v->size()) {
      throw ConfigError("key '" + key + "': not an integer: '" + *v + "'");
    }
  }
  resolved_[key] = std::to_string(value);
  return value;
}

std::uint64_t ScenarioConfig::get_count(const std::string& key, std::uint64_t fallback) const {
  std::uint64_t value = fallback;
  if (const auto* v = raw(key)) {
    const auto [end, ec] = std::from_chars(v->data(), v->data() + v->size(), value);
    if (v->empty() || ec != std::errc() || end != v->data() + v->size()) {
      throw ConfigError("key '" + key + "': not a nonnegative integer: '" + *v + "'");
    }
  }
  resolved_[key] = std::to_string(value);
  return value;
}

bool ScenarioConfig::get_bool(const std::string& key, bool fallback) const {
  bool value = fallback;
  if (const auto* v = raw(key)) {
    if (*v == "true" || *v == "1" || *v == "yes") {
      value = true;
    } else if (*v == "false" || *v == "0" || *v == "no") {
      value = false;
    } else {
      throw ConfigError("key '" + key + "': not a boolean: '" + *v + "'");
    }
  }
  resolved_[key] = value ? "true" : "false";
  return value;
}

std::vector<double> ScenarioConfig::get_real_list(const std::string& key) const {
  std::vector<double> values;
  const auto* v = raw(key);
  if (!v) throw ConfigError("missing key '" + key + "'");
  std::string echo;
  for (auto part : split_list(*v, ',')) {
    try {
      values.push_back(parse_real(part));
    } catch (const ConfigError& e) {
      throw ConfigError("key '" + key + "': " + e.what());
    }
    if (!echo.empty()) echo += ", ";
    echo += format_real(values.back());
  }
  resolved_[key] = echo;
  return values;
}

std::vector<std::string> ScenarioConfig::unused_keys() const {
  std::vector<std::string> unused;
  for (const auto& [key, value] : entries_) {
    if (!resolved_.count(key)) unused.push_back(key);
  }
  return unused;
}

NoiseSpec noise_spec_from_config(const ScenarioConfig& cfg) {
  NoiseSpec spec;
  spec.after_1q = {cfg.get_real("gate.p1q_x", 0.0), cfg.get_real("gate.p1q_y", 0.0),
                   cfg.get_real("gate.p1q_z", 0.0)};
  spec.after_2q = {cfg.get_real("gate.p2q_x", 0.0), cfg.get_real("gate.p2q_y", 0.0),
                   cfg.get_real("gate.p2q_z", 0.0)};
  const ReadoutError readout{cfg.get_real("readout.p01", 0.0), cfg.get_real("readout.p10", 0.0)};
  if (readout.p01 != 0.0 || readout.p10 != 0.0) spec.readout = {readout};
  try {
    spec.validate(4);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

NoiseModel noise_model_from_config(const ScenarioConfig& cfg, std::string_view model) {
  NoiseModel noise;
  if (trim(model) == "none") return noise;
  for (auto part : split_list(model, '+')) {
    if (part == "simple") {
      noise.simple = SimpleNoiseParams{cfg.get_real("simple.p_suc", 0.8),
                                       cfg.get_real("simple.fail_excited_pop", 0.3)};
    } else if (part == "with_init") {
      noise.init = InitNoiseParams{cfg.get_real("init.p_suc", 0.9), cfg.get_real("init.beta_fail", 1.0)};
    } else if (part == "gate_level") {
      noise.gate_level = noise_spec_from_config(cfg);
    } else {
      throw ConfigError("unknown noise model component '" + std::string(part) +
                        "' (expected none, simple, with_init, gate_level)");
    }
  }
  try {
    noise.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return noise;
}

FridgeConfig fridge_config_from_config(const ScenarioConfig& cfg) {
  FridgeConfig f;
  f.beta_cold = cfg.get_real("beta_cold", 1.0);
  f.beta_hot = cfg.get_real("beta_hot", 0.1);
  f.seed = cfg.get_count("seed", 0);
  f.noise = noise_model_from_config(cfg, cfg.get_string("noise", "none"));
  try {
    f.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return f;
}

}  // namespace icofridge
