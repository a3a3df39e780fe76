// Copyright 2026 The pathsum Authors
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

#include "pathsum/circuit.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "pathsum/errors.hpp"
#include "pathsum/oracle.hpp"

namespace pathsum {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::size_t parse_index(const Token& t, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  }
  return value;
}

const std::map<std::string, std::pair<GateKind, std::size_t>>& fixed_gates() {
  static const std::map<std::string, std::pair<GateKind, std::size_t>> table = {
      {"I", {GateKind::I, 1}},   {"X", {GateKind::X, 1}},   {"Z", {GateKind::Z, 1}},
      {"S", {GateKind::S, 1}},   {"T", {GateKind::T, 1}},   {"H", {GateKind::H, 1}},
      {"CX", {GateKind::CX, 2}}, {"CCX", {GateKind::CCX, 3}}, {"CH", {GateKind::CH, 2}},
  };
  return table;
}

PathSum gate_sum(Context& ctx, const Ring& ring, const GateOp& op) {
  if (op.name == "ZSPIDER") return gate(ctx, ring, GateKind::ZSpider, &*op.param, op.n, op.m);
  if (op.name == "HBOX") return gate(ctx, ring, GateKind::HBox, &*op.param, op.n, op.m);
  return gate(ctx, ring, fixed_gates().at(op.name).first);
}

}  // namespace

Circuit parse_circuit(std::string_view text, const Ring& ring) {
  Circuit circuit;
  std::optional<std::size_t> declared;
  std::size_t widest = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];

    if (head.text == "qubits") {
      if (tokens.size() != 2) throw ParseError(line_no, head.column, "qubits takes one argument");
      if (declared) throw ParseError(line_no, head.column, "qubits declared twice");
      if (!circuit.gates.empty()) throw ParseError(line_no, head.column, "qubits must precede the gates");
      declared = parse_index(tokens[1], line_no);
      continue;
    }

    GateOp op;
    op.name = head.text;
    op.line = line_no;
    std::size_t first_qubit = 1;
    if (auto it = fixed_gates().find(head.text); it != fixed_gates().end()) {
      if (tokens.size() != 1 + it->second.second) {
        throw ParseError(line_no, head.column,
                         head.text + " expects " + std::to_string(it->second.second) + " qubit(s), got " +
                             std::to_string(tokens.size() - 1));
      }
    } else if (head.text == "ZSPIDER" || head.text == "HBOX") {
      if (tokens.size() < 4) throw ParseError(line_no, head.column, head.text + " expects a parameter, n and m");
      try {
        op.param = ring.parse_element(tokens[1].text);
      } catch (const Error& e) {
        throw ParseError(line_no, tokens[1].column, "bad parameter '" + tokens[1].text + "': " + e.what());
      }
      op.n = parse_index(tokens[2], line_no);
      op.m = parse_index(tokens[3], line_no);
      if (op.n != op.m || op.n == 0) {
        throw ParseError(line_no, tokens[2].column, head.text + " in a circuit needs n = m >= 1");
      }
      if (tokens.size() != 4 + op.n) {
        throw ParseError(line_no, head.column,
                         head.text + " expects " + std::to_string(op.n) + " qubit(s), got " +
                             std::to_string(tokens.size() - 4));
      }
      first_qubit = 4;
    } else {
      throw ParseError(line_no, head.column, "unknown gate '" + head.text + "'");
    }

    std::set<std::size_t> seen;
    for (std::size_t i = first_qubit; i < tokens.size(); ++i) {
      std::size_t q = parse_index(tokens[i], line_no);
      if (!seen.insert(q).second) throw ParseError(line_no, tokens[i].column, "repeated qubit index " + tokens[i].text);
      if (declared && q >= *declared) {
        throw ParseError(line_no, tokens[i].column,
                         "qubit index " + tokens[i].text + " out of range for " + std::to_string(*declared) +
                             " qubit(s)");
      }
      widest = std::max(widest, q + 1);
      op.qubits.push_back(q);
    }

    try {
      Context scratch;
      (void)gate_sum(scratch, ring, op);
    } catch (const Error& e) {
      throw ParseError(line_no, head.column, std::string(e.what()) + " in ring " + ring.name());
    }
    circuit.gates.push_back(std::move(op));
  }
  circuit.n_qubits = declared ? *declared : widest;
  return circuit;
}

PathSum circuit_to_pathsum(Context& ctx, const Circuit& circuit, const Ring& ring) {
  PathSum state = identity(ctx, ring, circuit.n_qubits);
  for (const auto& op : circuit.gates) state = apply_on_wires(ctx, state, gate_sum(ctx, ring, op), op.qubits);
  return state;
}

DenseMatrix circuit_matrix(const Circuit& circuit, const Ring& ring) {
  auto m = DenseMatrix::identity(ring, std::size_t{1} << circuit.n_qubits);
  for (const auto& op : circuit.gates) {
    Context ctx;
    m = dense_matrix(circuit_to_pathsum(ctx, Circuit{circuit.n_qubits, {op}}, ring)) * m;
  }
  return m;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out;
  out.n_qubits = circuit.n_qubits;
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    if (it->name == "ZSPIDER" || it->name == "HBOX") throw Unsupported(it->name + " has no inverse");
    std::size_t copies = it->name == "S" ? 3 : it->name == "T" ? 7 : 1;
    for (std::size_t i = 0; i < copies; ++i) out.gates.push_back(*it);
  }
  return out;
}

std::string to_string(const Circuit& circuit) {
  std::ostringstream os;
  os << "qubits " << circuit.n_qubits << "\n";
  for (const auto& op : circuit.gates) {
    os << op.name;
    if (op.param) os << " " << op.param->to_string() << " " << op.n << " " << op.m;
    for (auto q : op.qubits) os << " " << q;
    os << "\n";
  }
  return os.str();
}

}  // namespace pathsum
