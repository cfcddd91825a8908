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

#ifndef SELQUANT_IO_HPP
#define SELQUANT_IO_HPP

#include <json.hpp>
#include <string>

#include "selquant/decide.hpp"
#include "selquant/frontends.hpp"

// JSON file formats. Numbers are exact strings ("3/4") or JSON integers. A
// real field element is a number or {"coeffs": [c0, c1, ...]} meaning
// c0 + c1 a + ...; a complex entry is a real element or [re, im].
namespace selquant::io {

using json = nlohmann::json;

/// Reads and parses a JSON file; ParseError on failure.
json load_file(const std::string &path);

Rational parse_rational(const json &j);
/// A preset name or {"minpoly": [...], "isolating": [lo, hi]}; null means Q.
NumberField parse_field(const json &j);
json field_to_json(const NumberField &field);

FieldElement parse_real(const json &j, const NumberField &field);
ComplexFieldElement parse_complex(const json &j, const NumberField &field);
json to_json(const FieldElement &x);
json to_json(const ComplexFieldElement &x);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
ComplexMatrix parse_complex_matrix(const json &j, const NumberField &field);
FieldMatrix parse_real_matrix(const json &j, const NumberField &field);
json to_json(const ComplexMatrix &m);
json to_json(const FieldMatrix &m);

/// {"field", "dim", "outputs", "kraus": [{"i", "j", "matrix"}], "rho",
/// "beta"}. "i" is the output label (0 continues), "j" the 1-based branch.
/// Shapes are checked here; completeness and the density conditions are not.
struct ProcessFile {
    NumberField field = NumberField::rationals();
    SelectiveQuantumOperation op;
    ComplexMatrix rho;
    FieldElement beta;
};

ProcessFile parse_process(const json &j);
json process_to_json(const ProcessFile &p);

/// {"field", "width", "gates": [{"name" | "kraus", "targets"}], "output"},
/// qubits 1-based.
CircuitSpec parse_circuit(const json &j);
json circuit_to_json(const CircuitSpec &c);

/// {"field", "matrix", "start", "accept", "reject"}, states 1-based.
MarkovSpec parse_chain(const json &j);
json chain_to_json(const MarkovSpec &c);

json to_json(const BoundConstants &c);
json to_json(const DecisionResult &r);

}  // namespace selquant::io

#endif
