// Copyright 2026 The zxcc authors
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

#include <CLI11.hpp>
#include <iostream>

#include "zxcc/colour_code.hpp"
#include "zxcc/error.hpp"
#include "zxcc/evaluate.hpp"
#include "zxcc/json_io.hpp"
#include "zxcc/ruleset.hpp"
#include "zxcc/simproc.hpp"
#include "zxcc/soundness.hpp"

namespace {

using namespace zxcc;

nlohmann::ordered_json matrix_json(const Matrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::ordered_json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const ExactScalar& s = m.at(r, c);
      row.push_back({{"a", s.a()}, {"b", s.b()}, {"c", s.c()}, {"d", s.d()}, {"k", s.k()}});
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

void print_matrix(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::cout << (c ? "  " : "") << m.at(r, c).str();
    }
    std::cout << "\n";
  }
}

void print_matrix_float(const MatrixF& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = m.at(r, c);
      std::cout << (c ? "  " : "") << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    }
    std::cout << "\n";
  }
}

bool diagram_is_quarter(const Diagram& d) {
  for (const auto& [v, data] : d.vertices()) {
    if ((data.type == VertexType::Z || data.type == VertexType::X) &&
        !data.phase.is_quarter_multiple()) {
      return false;
    }
  }
  return true;
}

int cmd_eval(const std::string& file, bool as_json, bool as_float, std::size_t max_entries) {
  Diagram d = load_diagram(file);
  EvalOptions opts;
  opts.max_entries = max_entries;
  if (as_float || !diagram_is_quarter(d)) {
    if (!as_float) {
      std::cerr << "note: phases are not all pi/4 multiples; using the float backend\n";
    }
    print_matrix_float(evaluate_float(d, opts));
    return 0;
  }
  Matrix m = evaluate(d, opts);
  if (as_json) {
    std::cout << matrix_json(m).dump(2) << "\n";
  } else {
    print_matrix(m);
  }
  return 0;
}

int cmd_check_prop(const std::string& file_a, const std::string& file_b) {
  Matrix a = evaluate(load_diagram(file_a));
  Matrix b = evaluate(load_diagram(file_b));
  ProportionalResult res = proportional_equal(a, b);
  if (!res.proportional) {
    std::cout << "not proportional\n";
    return 1;
  }
  std::cout << "proportional; witness = "
            << (res.witness ? res.witness->str() : "(cross-multiplication)") << "\n";
  return 0;
}

int cmd_simp(const std::string& proc, const std::string& in, const std::string& out,
             const std::string& trace_path, std::size_t max_steps) {
  Diagram d = load_diagram(in);
  RunOptions opts;
  opts.max_steps = max_steps;
  auto [result, trace] = run(builtin_simproc(proc), d, opts);
  save_diagram(result, out);
  if (!trace_path.empty()) save_json_file(trace.to_json(), trace_path);
  std::cout << trace.steps.size() << " steps\n";
  return 0;
}

int cmd_replay(const std::string& trace_path, const std::string& initial, bool do_certify,
               const std::string& out) {
  ProofTrace t = ProofTrace::from_json(load_json_file(trace_path));
  Diagram d = load_diagram(initial);
  Diagram final_d = replay(t, d);
  if (do_certify) {
    CertifyReport rep = certify(t, d);
    if (!rep.pass) {
      std::cout << "certification failed: " << rep.detail << "\n";
      return 1;
    }
    std::cout << "certified " << rep.steps.size() << " steps\n";
  } else {
    std::cout << "replayed " << t.steps.size() << " steps\n";
  }
  if (!out.empty()) save_diagram(final_d, out);
  return 0;
}

int cmd_rules_check(int arity) {
  bool all = true;
  for (const RewriteRule& r : builtin_rules()) {
    SoundnessReport rep = check_soundness(r, arity);
    std::cout << r.name << ": " << (rep.pass() ? "sound" : "UNSOUND") << " ("
              << rep.instances_checked << " instances)\n";
    if (!rep.pass()) {
      all = false;
      for (const auto& ce : rep.counterexamples) {
        std::cout << "  counterexample: counts=[";
        for (std::size_t i = 0; i < ce.counts.size(); ++i) {
          std::cout << (i ? "," : "") << ce.counts[i];
        }
        std::cout << "] assignment={";
        bool first = true;
        for (const auto& [v, p] : ce.assignment) {
          std::cout << (first ? "" : ",") << v << "=" << p.str();
          first = false;
        }
        std::cout << "}\n";
      }
    }
  }
  return all ? 0 : 1;
}

int cmd_code_emit(const std::string& what, const std::string& out) {
  if (what == "enc-circuit-trace") {
    save_json_file(code::derive_encoder_circuit().second.to_json(), out);
    return 0;
  }
  if (what == "cnot-trace") {
    save_json_file(code::derive_cnot_proof().second.to_json(), out);
    return 0;
  }
  Diagram d;
  if (what == "enc") d = code::build_enc();
  else if (what == "dec") d = code::build_dec();
  else if (what == "cnot-l") d = code::cnot_logical(2, 3);
  else if (what == "cnot-p") d = code::derive_cnot_physical(2, 3);
  else if (what == "ccz-l") d = code::ccz_logical();
  else if (what == "ccz-p") d = code::ccz_physical();
  else if (what == "enc-circuit") d = code::encoder_circuit();
  else throw FormatError("unknown fixture: " + what);
  save_diagram(d, out);
  return 0;
}

int cmd_code_verify(bool all, const std::string& prop, bool as_json) {
  std::vector<std::string> only;
  if (!all && !prop.empty()) only.push_back(prop);
  std::vector<code::Report> reports = code::run_all(only);
  bool ok = true;
  std::string out;  // buffered: no partial output on failure in JSON mode
  for (const code::Report& r : reports) {
    if (as_json) {
      nlohmann::ordered_json j;
      j["obligation"] = r.name;
      j["status"] = r.skipped ? "skipped" : (r.pass ? "pass" : "fail");
      if (!r.witness.empty()) j["witness"] = r.witness;
      out += j.dump() + "\n";
    } else {
      out += r.name + ": " + (r.skipped ? "SKIP" : (r.pass ? "pass" : "FAIL")) + "\n";
      for (const std::string& line : r.details) out += "  " + line + "\n";
    }
    if (!r.pass || r.skipped) ok = false;
  }
  std::cout << out;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxcc: exact ZX-diagram evaluation, certified rewriting and "
               "[[8,3,2]] colour-code verification"};
  app.require_subcommand(1);

  std::string in_file, in_file_b, out_file, trace_file, proc_name, emit_what, prop_name;
  bool flag_json = false, flag_matrix = false, flag_float = false, flag_certify = false;
  bool flag_all = false;
  std::size_t max_entries = std::size_t(1) << 22;
  std::size_t max_steps = 10000;
  int arity = 4;

  CLI::App* eval_cmd = app.add_subcommand("eval", "print the interpretation of a diagram");
  eval_cmd->add_option("file", in_file)->required();
  eval_cmd->add_flag("--matrix", flag_matrix, "text matrix output (default)");
  eval_cmd->add_flag("--json", flag_json, "machine-readable matrix");
  eval_cmd->add_flag("--float", flag_float, "double-precision output");
  eval_cmd->add_option("--max-entries", max_entries, "intermediate tensor cap");

  CLI::App* check_cmd = app.add_subcommand("check-prop", "decide proportional equality");
  check_cmd->add_option("a", in_file)->required();
  check_cmd->add_option("b", in_file_b)->required();

  CLI::App* simp_cmd = app.add_subcommand("simp", "run a named simproc");
  simp_cmd->add_option("--proc", proc_name)->required();
  simp_cmd->add_option("input", in_file)->required();
  simp_cmd->add_option("-o,--output", out_file)->required();
  simp_cmd->add_option("--trace", trace_file);
  simp_cmd->add_option("--max-steps", max_steps);

  CLI::App* replay_cmd = app.add_subcommand("replay", "replay (and certify) a proof trace");
  replay_cmd->add_option("trace", trace_file)->required();
  replay_cmd->add_option("--initial", in_file)->required();
  replay_cmd->add_flag("--certify", flag_certify);
  replay_cmd->add_option("-o,--output", out_file);

  CLI::App* certify_cmd = app.add_subcommand("certify", "certify a proof trace semantically");
  certify_cmd->add_option("trace", trace_file)->required();
  certify_cmd->add_option("--initial", in_file)->required();

  CLI::App* rules_cmd = app.add_subcommand("rules-check", "soundness-check the shipped rules");
  rules_cmd->add_option("--arity", arity);

  CLI::App* code_cmd = app.add_subcommand("code", "colour-code fixtures and verification");
  code_cmd->require_subcommand(1);
  CLI::App* emit_cmd = code_cmd->add_subcommand("emit", "write a fixture diagram or proof trace");
  emit_cmd
      ->add_option("what", emit_what,
                   "enc|dec|cnot-l|cnot-p|ccz-l|ccz-p|enc-circuit|enc-circuit-trace|cnot-trace")
      ->required();
  emit_cmd->add_option("-o,--output", out_file)->required();
  CLI::App* verify_cmd = code_cmd->add_subcommand("verify", "run verification obligations");
  verify_cmd->add_flag("--all", flag_all);
  verify_cmd->add_option("--prop", prop_name);
  verify_cmd->add_flag("--json", flag_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval_cmd) return cmd_eval(in_file, flag_json, flag_float, max_entries);
    if (*check_cmd) return cmd_check_prop(in_file, in_file_b);
    if (*simp_cmd) return cmd_simp(proc_name, in_file, out_file, trace_file, max_steps);
    if (*replay_cmd) return cmd_replay(trace_file, in_file, flag_certify, out_file);
    if (*certify_cmd) {
      ProofTrace t = ProofTrace::from_json(load_json_file(trace_file));
      Diagram d = load_diagram(in_file);
      CertifyReport rep = certify(t, d);
      if (rep.pass) {
        std::cout << "certified " << rep.steps.size() << " steps\n";
        return 0;
      }
      std::cout << "certification failed: " << rep.detail << "\n";
      return 1;
    }
    if (*rules_cmd) return cmd_rules_check(arity);
    if (*code_cmd) {
      if (*emit_cmd) return cmd_code_emit(emit_what, out_file);
      return cmd_code_verify(flag_all || prop_name.empty(), prop_name, flag_json);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const ArityError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ZXError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
