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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathsum/acceptance.hpp"
#include "pathsum/circuit.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/normalize.hpp"
#include "pathsum/serialize.hpp"
#include "pathsum/theories.hpp"

namespace {

using namespace pathsum;
using nlohmann::json;

constexpr int kEqual = 0;
constexpr int kNotEqual = 1;
constexpr int kError = 2;

struct RunConfig {
  std::string ring = "dyadic-cyc8";
  std::string theory = "ring";
  std::string strategy = "cliff+th";
  std::size_t max_bits = 20;
  bool json = false;
};

struct Setup {
  Ring ring;
  Theory theory;
  Strategy strategy;
  std::size_t max_bits;
};

Setup resolve(const RunConfig& config) {
  Setup s{Ring::parse(config.ring), Theory::Ring, parse_strategy(config.strategy), config.max_bits};
  if (config.theory == "field") {
    s.theory = Theory::Field;
    if (!s.ring.is_field() || !s.ring.has_half()) {
      throw Unsupported("field theory needs a field of characteristic other than 2, got " + s.ring.name());
    }
  } else if (config.theory != "ring") {
    throw Unsupported("unknown theory '" + config.theory + "'");
  }
  return s;
}

Circuit load(const std::string& path, const Ring& ring) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot read file");
  std::stringstream text;
  text << in.rdbuf();
  try {
    return parse_circuit(text.str(), ring);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

std::string theory_name(Theory t) { return t == Theory::Field ? "field" : "ring"; }

json header(const Setup& s) {
  return json{{"ring", s.ring.name()},
              {"theory", theory_name(s.theory)},
              {"strategy", std::string(strategy_name(s.strategy))},
              {"max_bits", s.max_bits}};
}

int run_normalize(const Setup& s, const std::string& path, bool as_json) {
  auto circuit = load(path, s.ring);
  Context ctx;
  auto psi = circuit_to_pathsum(ctx, circuit, s.ring);
  std::vector<RewriteStep> trace;
  if (s.strategy != Strategy::None) psi = reduce_rewrite_first(ctx, psi, s.strategy, &trace);
  auto form = normalize(ctx, to_state(psi), s.theory, NormalizeConfig{s.max_bits}, &trace);
  if (as_json) {
    auto out = header(s);
    out["qubits"] = circuit.n_qubits;
    out["normal_form"] = to_json(form);
    out["trace"] = to_json(trace, ctx.namer());
    std::cout << out.dump(2) << "\n";
    return kEqual;
  }
  std::cout << "normal form over " << s.ring.name() << ", " << form.wires << " wires (inputs then outputs)\n";
  for (std::size_t i = 0; i < form.entries.size(); ++i) {
    if (!form.entries[i].is_zero()) std::cout << "  |" << bit_string(i, form.wires) << ">  " << form.entries[i].to_string() << "\n";
  }
  return kEqual;
}

int run_verify(const Setup& s, const std::string& lhs_path, const std::string& rhs_path, bool as_json) {
  auto lhs = load(lhs_path, s.ring);
  auto rhs = load(rhs_path, s.ring);
  if (lhs.n_qubits != rhs.n_qubits) {
    throw ArityMismatch("circuits act on " + std::to_string(lhs.n_qubits) + " and " + std::to_string(rhs.n_qubits) +
                        " qubits");
  }
  Context ctx;
  auto result = equivalent(ctx, circuit_to_pathsum(ctx, lhs, s.ring), circuit_to_pathsum(ctx, rhs, s.ring),
                           EquivalenceConfig{s.theory, s.strategy, s.max_bits});
  std::size_t wires = 2 * lhs.n_qubits;
  if (as_json) {
    auto out = header(s);
    out["equal"] = result.equal;
    out["by_rewriting"] = result.by_rewriting;
    if (result.first_difference) {
      out["first_difference"] = {{"index", *result.first_difference},
                                 {"bits", bit_string(*result.first_difference, wires)},
                                 {"lhs", result.lhs_entry->to_string()},
                                 {"rhs", result.rhs_entry->to_string()}};
    }
    out["trace"] = to_json(result.trace, ctx.namer());
    std::cout << out.dump(2) << "\n";
  } else if (result.equal) {
    std::cout << "equal (" << (result.by_rewriting ? "by rewriting" : "by normal form") << ")\n";
  } else {
    std::size_t i = *result.first_difference;
    std::cout << "not equal: first difference at index " << i << " |" << bit_string(i, wires) << ">: "
              << result.lhs_entry->to_string() << " vs " << result.rhs_entry->to_string() << "\n";
  }
  return result.equal ? kEqual : kNotEqual;
}

int run_matrix(const Setup& s, const std::string& path, bool as_json) {
  auto m = circuit_matrix(load(path, s.ring), s.ring);
  if (as_json) {
    auto out = json{{"ring", s.ring.name()}, {"matrix", to_json(m)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(m) << "\n";
  }
  return kEqual;
}

int run_selftest(bool as_json) {
  std::ostringstream lines;
  auto results = run_acceptance(as_json ? lines : std::cout);
  results.push_back(verify_cross_check());
  if (!as_json) std::cout << format_result(results.back()) << "\n";
  bool ok = true;
  json report = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    report.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (as_json) std::cout << json{{"passed", ok}, {"criteria", report}}.dump(2) << "\n";
  return ok ? kEqual : kNotEqual;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic normal forms and equivalence checking for unbalanced sums-over-paths"};
  app.require_subcommand(1);
  RunConfig config;
  if (const char* env = std::getenv("PATHSUM_MAX_BITS")) {
    try {
      config.max_bits = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: PATHSUM_MAX_BITS is not a number: " << env << "\n";
      return kError;
    }
  }
  app.add_option("--ring", config.ring, "int, rational, dyadic-cyc8, cyc8-field or fp:<p>")->capture_default_str();
  app.add_option("--theory", config.theory, "ring or field")->capture_default_str();
  app.add_option("--strategy", config.strategy, "none, cliff, th or cliff+th")->capture_default_str();
  app.add_option("--max-bits", config.max_bits, "cap on table and enumeration bits")->capture_default_str();
  app.add_flag("--json", config.json, "machine-readable output");

  std::string file;
  std::string other;
  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form of a circuit");
  normalize_cmd->add_option("circuit", file)->required();
  auto* verify_cmd = app.add_subcommand("verify", "decide equivalence of two circuits");
  verify_cmd->add_option("lhs", file)->required();
  verify_cmd->add_option("rhs", other)->required();
  auto* matrix_cmd = app.add_subcommand("matrix", "dump the oracle matrix of a circuit");
  matrix_cmd->add_option("circuit", file)->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  for (auto* sub : {normalize_cmd, verify_cmd, matrix_cmd, selftest_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (selftest_cmd->parsed()) return run_selftest(config.json);
    auto setup = resolve(config);
    if (normalize_cmd->parsed()) return run_normalize(setup, file, config.json);
    if (verify_cmd->parsed()) return run_verify(setup, file, other, config.json);
    return run_matrix(setup, file, config.json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
