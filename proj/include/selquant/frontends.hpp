// Copyright 2026 The selquant Authors
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

#ifndef SELQUANT_FRONTENDS_HPP
#define SELQUANT_FRONTENDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "selquant/process.hpp"

namespace selquant {

/// A gate as a collection of 2^k x 2^k matrices with sum A^dagger A = I.
struct GateSpec {
    std::string name;
    int arity = 0;
    std::vector<ComplexMatrix> kraus;
};

/// Checks shapes and exact completeness.
GateSpec make_gate(std::string name, std::vector<ComplexMatrix> kraus);

/// "H", "X", "Z", "S", "CNOT" or "MEASURE". H needs sqrt(1/2) in the field
/// (RootNotInField otherwise). S = diag(1, i) uses the imaginary unit of
/// the complex entries. CNOT's first target is the control.
GateSpec gate_preset(const std::string &name, const NumberField &field);

struct CircuitGate {
    GateSpec gate;
    /// 1-based qubit indices; qubit 1 is the most significant bit.
    std::vector<int> targets;
};

struct CircuitSpec {
    NumberField field = NumberField::rationals();
    int width = 1;
    std::vector<CircuitGate> gates;
    /// 1-based output qubit.
    int output = 1;
};

/// Throws BadTargets or InvalidArgument.
void validate_circuit(const CircuitSpec &circuit);

/// Each Kraus matrix of `gate` acting on `targets` (1-based) of an n-qubit
/// register, identity on the rest.
std::vector<ComplexMatrix> expand_gate(const GateSpec &gate, const std::vector<int> &targets, int n);

/// Probability of reading 1 on the output qubit after running the circuit
/// on |0...0>.
FieldElement circuit_accept_probability(const CircuitSpec &circuit);

struct CompiledProcess {
    SelectiveQuantumOperation op;
    DensityMatrix rho;
    /// Extra qubits holding the gate index (circuits only).
    int index_qubits = 0;
};

/// Data qubits followed by ceil(log2 r) index qubits. Applying the
/// operation runs gate #idx and advances idx, emitting 0; the last gate also
/// measures the output qubit and emits 1 (read 1) or 2 (read 0) while
/// resetting idx to 0. Unused index values act as identity with output 0.
/// An empty circuit runs a single identity gate.
CompiledProcess circuit_to_process(const CircuitSpec &circuit);

/// Column-stochastic chain, A(i, j) = Pr[j -> i], 0-based states.
struct MarkovSpec {
    /// Field-less entries are read in this field.
    NumberField field = NumberField::rationals();
    FieldMatrix matrix;
    int start = 0;
    int accept = 0;
    std::optional<int> reject;
};

struct MarkovEncodingOptions {
    /// For rational entries whose square root is missing, split the move
    /// into up to four branches with rational amplitudes whose squares sum
    /// to the entry.
    bool allow_fallback = true;
};

/// Kraus matrices sqrt(A(i, j)) |i><j|, output 1 on entering `accept`, 2 on
/// entering `reject`, else 0. Throws RootNotInField when an amplitude is
/// unavailable.
CompiledProcess markov_to_process(const MarkovSpec &chain, const MarkovEncodingOptions &options = {});

/// Up to four integers whose squares sum to n >= 0.
std::vector<Integer> four_squares(const Integer &n);

}  // namespace selquant

#endif
