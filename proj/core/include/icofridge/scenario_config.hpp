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

#ifndef ICOFRIDGE_SCENARIO_CONFIG_HPP
#define ICOFRIDGE_SCENARIO_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icofridge/fridge.hpp"

namespace icofridge {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form; infinities print as inf / -inf.
std::string format_real(double x);

/// Accepts anything std::from_chars does plus a leading '+', so "inf",
/// "+inf" and "-inf" are valid. Throws ConfigError otherwise.
double parse_real(std::string_view text);

/**
 * Scenario file: `key = value` lines, `#` starts a comment, blank lines are
 * ignored. Keys are free-form dotted names; lists are comma separated.
 *
 * Every typed getter records the value it resolved (including defaults) so
 * the full effective configuration can be echoed into output headers.
 */
class ScenarioConfig {
 public:
  ScenarioConfig() = default;

  static ScenarioConfig parse(std::istream& in);
  static ScenarioConfig parse(const std::string& text);
  static ScenarioConfig load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_real(const std::string& key, double fallback) const;
  std::uint64_t get_count(const std::string& key, std::uint64_t fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_real_list(const std::string& key) const;

  /// Keys present in the file that no getter has read.
  std::vector<std::string> unused_keys() const;
  /// Resolved key/value pairs in key order.
  const std::map<std::string, std::string>& resolved() const { return resolved_; }

 private:
  const std::string* raw(const std::string& key) const;

  std::map<std::string, std::string> entries_;
  mutable std::map<std::string, std::string> resolved_;
};

/// Pauli and readout parameters from the gate.* and readout.* keys.
NoiseSpec noise_spec_from_config(const ScenarioConfig& cfg);

/**
 * Builds the noise model named by `model` ("none", or any of simple,
 * with_init, gate_level joined with '+') from the simple.*, init.*, gate.*
 * and readout.* keys.
 */
NoiseModel noise_model_from_config(const ScenarioConfig& cfg, std::string_view model);

/// beta_cold, beta_hot, seed and the model named by the `noise` key.
FridgeConfig fridge_config_from_config(const ScenarioConfig& cfg);

}  // namespace icofridge

#endif  // ICOFRIDGE_SCENARIO_CONFIG_HPP
