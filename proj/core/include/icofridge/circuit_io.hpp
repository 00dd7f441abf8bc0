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

#ifndef ICOFRIDGE_CIRCUIT_IO_HPP
#define ICOFRIDGE_CIRCUIT_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "icofridge/circuit.hpp"

namespace icofridge {

/// Raised for malformed circuit text; the message carries the line number.
class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented circuit format:
//
//   # comment
//   qubits 4
//   CSWAP 0 1 2
//   SWAP 1 3
//
// The `qubits N` header must precede every gate line. Gate names are those of
// gate_name(); operands are listed control(s) first.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);
Circuit read_circuit_file(const std::filesystem::path& path);

std::string to_text(const Circuit& c);
void write_circuit(std::ostream& out, const Circuit& c);

}  // namespace icofridge

#endif  // ICOFRIDGE_CIRCUIT_IO_HPP
