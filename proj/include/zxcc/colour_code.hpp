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

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zxcc/diagram.hpp"
#include "zxcc/simproc.hpp"

namespace zxcc::code {

inline constexpr int kPhysical = 8;
inline constexpr int kLogical = 3;

/**
 * Transversal Pauli supports of the [[8,3,2]] code, 1-based physical wires.
 * Logical tensor factor j is logical wire j (leftmost letter = wire 1).
 */
const std::map<int, std::set<int>>& x_support();
const std::map<int, std::set<int>>& z_support();
/** The physical wire a logical input rides on in the encoder circuit. */
int rail_wire(int logical);

// Fixtures -------------------------------------------------------------------

/** The encoder: 8-legged GHZ spider plus one X-copy gadget per logical. */
Diagram build_enc();
/** The decoder, adjoint(build_enc()). */
Diagram build_dec();

/** n-wire layer with a pi spider of the given colour on each listed wire. */
Diagram pauli_layer(int n_wires, VertexType color, const std::set<int>& wires);
/** n-wire layer of Z-phase gates (identity on wires with phase 0). */
Diagram phase_layer(int n_wires, const std::vector<Phase>& phases);
/** Single CNOT on n wires, green control / red target. */
Diagram cnot_gate(int n_wires, int control, int target);

Diagram cnot_logical(int control, int target);
/** CCZ on 3 wires via the 7-phase-gate phase-polynomial circuit. */
Diagram ccz_logical();
/** The transversal layer [T, T!, T!, T, T!, T, T, T!] on 8 wires. */
Diagram ccz_physical();

/** Gate list (control, target) of the derived physical CNOT circuit. */
std::vector<std::pair<int, int>> derive_cnot_gates(int control, int target);
Diagram derive_cnot_physical(int control, int target);

/**
 * Certified rewrite derivation of Dec;CNOT_P;Enc down to CNOT_L(2,3):
 * reduce_phase_free automation with scripted expansion steps (unspidering
 * of duplicated parity checks plus inverted-bialgebra pivots).
 */
std::pair<Diagram, ProofTrace> derive_cnot_proof();

/** Circuit form of the encoder: 5 ancilla preps + CNOT gadgets, 3 -> 8. */
Diagram encoder_circuit();
/** The 8 -> 8 unitary part of the encoder circuit (inputs replace preps). */
Diagram encoder_circuit_gates();
/** Certified derivation from build_enc() to circuit form. */
std::pair<Diagram, ProofTrace> derive_encoder_circuit();

struct Codeword {
  std::string logical;  // basis label as printed in the reference table
  std::string first, second;
};
/** The eight codewords of the computational basis. */
const std::vector<Codeword>& codeword_table();

// Verification ----------------------------------------------------------------

struct Report {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::vector<std::string> details;
  std::string witness;
};

Report verify_rules();
/** Soundness aggregation over an arbitrary axiom set (for corrupted sets). */
Report verify_rules_for(const std::vector<RewriteRule>& rules);
Report verify_enc_dec();
Report verify_codewords();
Report verify_pauli(const std::string& which);  // x1..x3, z1..z3
Report verify_cnot();
Report verify_ccz();
Report verify_enc_circuit();
Report verify_distance2();

/** All obligation names in run order. */
const std::vector<std::string>& obligation_names();
Report run_obligation(const std::string& name);
/**
 * Runs every obligation (or the listed subset). When rule soundness fails,
 * downstream obligations are reported as skipped. A non-null rules_override
 * replaces the shipped axiom set in the soundness obligation.
 */
std::vector<Report> run_all(const std::vector<std::string>& only = {},
                            const std::vector<RewriteRule>* rules_override = nullptr);

}  // namespace zxcc::code
