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

#include "icofridge/circuit_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace icofridge {

CircuitParseError::CircuitParseError(int line, const std::string& what)
    : std::runtime_error("circuit line " + std::to_string(line) + ": " + what), line_(line) {}

Circuit parse_circuit(std::istream& in) {
  std::optional<Circuit> circuit;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string head;
    if (!(words >> head)) continue;

    if (head == "qubits") {
      if (circuit) throw CircuitParseError(line_no, "duplicate 'qubits' header");
      int n = 0;
      std::string extra;
      if (!(words >> n) || (words >> extra)) throw CircuitParseError(line_no, "expected 'qubits N'");
      try {
        circuit.emplace(n);
      } catch (const std::invalid_argument& e) {
        throw CircuitParseError(line_no, e.what());
      }
      continue;
    }

    if (!circuit) throw CircuitParseError(line_no, "gate before 'qubits N' header");
    const auto kind = parse_gate_kind(head);
    if (!kind) throw CircuitParseError(line_no, "unknown gate '" + head + "'");
    std::vector<int> qubits;
    std::string token;
    while (words >> token) {
      try {
        std::size_t used = 0;
        const int q = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        qubits.push_back(q);
      } catch (const std::exception&) {
        throw CircuitParseError(line_no, "bad qubit index '" + token + "'");
      }
    }
    try {
      circuit->add(*kind, std::move(qubits));
    } catch (const std::invalid_argument& e) {
      throw CircuitParseError(line_no, e.what());
    }
  }
  if (!circuit) throw CircuitParseError(line_no, "missing 'qubits N' header");
  return *std::move(circuit);
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

Circuit read_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path.string());
  return parse_circuit(in);
}

void write_circuit(std::ostream& out, const Circuit& c) {
  out << "qubits " << c.n_qubits() << '\n';
  for (const auto& g : c.gates()) {
    out << gate_name(g.kind);
    for (int q : g.qubits) out << ' ' << q;
    out << '\n';
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  write_circuit(out, c);
  return out.str();
}

}  // namespace icofridge
