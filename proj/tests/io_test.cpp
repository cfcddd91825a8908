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

#include "selquant/io.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "selquant/instances.hpp"

using namespace selquant;
using io::json;

namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

bool same_op(const SelectiveQuantumOperation &a, const SelectiveQuantumOperation &b) {
    if (a.dim() != b.dim() || a.outputs() != b.outputs() || a.entries().size() != b.entries().size()) return false;
    for (const auto &[k, m] : a.entries()) {
        auto it = b.entries().find(k);
        if (it == b.entries().end() || !equal(m, it->second)) return false;
    }
    return true;
}

}  // namespace

TEST(Io, Rationals) {
    EXPECT_EQ(io::parse_rational(json("6/8")), Rational(3, 4));
    EXPECT_EQ(io::parse_rational(json(-5)), Rational(-5));
    EXPECT_EQ(io::parse_rational(json("-7")), Rational(-7));
    for (const char *bad : {"1/0", "x", "1/", "", "1.5", "3/4/5"})
        EXPECT_EQ(kind_of([&] { io::parse_rational(json(bad)); }), ErrorKind::ParseError) << bad;
    EXPECT_EQ(kind_of([] { io::parse_rational(json(0.5)); }), ErrorKind::ParseError);
}

TEST(Io, Fields) {
    EXPECT_EQ(io::parse_field(json("sqrt2")), NumberField::sqrt2());
    EXPECT_EQ(io::parse_field(json()), NumberField::rationals());
    json custom = {{"minpoly", {"-3", "0", "1"}}, {"isolating", {"1", "2"}}};
    NumberField f = io::parse_field(custom);
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(io::field_to_json(f), custom);
    EXPECT_EQ(io::field_to_json(NumberField::golden()), json("golden"));
    json two_roots = {{"minpoly", {"-3", "0", "1"}}, {"isolating", {"-2", "2"}}};
    EXPECT_EQ(kind_of([&] { io::parse_field(two_roots); }), ErrorKind::NotIsolating);
    EXPECT_EQ(kind_of([] { io::parse_field(json("quartic")); }), ErrorKind::ParseError);
}

TEST(Io, ScalarsAndMatrices) {
    NumberField k = NumberField::sqrt2();
    FieldElement h = io::parse_real(json{{"coeffs", {"0", "1/2"}}}, k);
    EXPECT_EQ(h * h, k.constant(Rational(1, 2)));
    EXPECT_EQ(io::to_json(h), (json{{"coeffs", {"0", "1/2"}}}));
    ComplexFieldElement z = io::parse_complex(json::array({"1/2", "-1"}), k);
    EXPECT_EQ(z.im(), k.constant(Rational(-1)));
    EXPECT_EQ(io::to_json(z), json::array({"1/2", "-1"}));
    json m = json::parse(R"({"rows": 2, "cols": 2, "entries": [["1", ["0", "1"]], ["0", "1/3"]]})");
    ComplexMatrix cm = io::parse_complex_matrix(m, k);
    EXPECT_EQ(io::to_json(cm), m);
    json ragged = json::parse(R"({"rows": 2, "cols": 2, "entries": [["1", "0"], ["0"]]})");
    EXPECT_EQ(kind_of([&] { io::parse_complex_matrix(ragged, k); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([&] { io::parse_real(json{{"coeffs", {"1", "2", "3"}}}, k); }), ErrorKind::ParseError);
}

TEST(Io, ProcessRoundTrip) {
    SuiteParams sp;
    sp.seed = 8;
    sp.count = 6;
    sp.complex_entries = true;
    for (const auto &inst : random_suite(NumberField::sqrt2(), sp)) {
        io::ProcessFile p{NumberField::sqrt2(), inst.op, inst.rho.matrix(), inst.beta};
        json j = io::process_to_json(p);
        io::ProcessFile back = io::parse_process(json::parse(j.dump()));
        EXPECT_TRUE(same_op(p.op, back.op));
        EXPECT_TRUE(equal(p.rho, back.rho));
        EXPECT_EQ(p.beta, back.beta);
        EXPECT_EQ(io::process_to_json(back), j);
    }
}

TEST(Io, ProcessErrors) {
    json base = io::process_to_json({NumberField::sqrt2(), hadamard_measure(),
                                     basis_state(NumberField::sqrt2(), 2, 0).matrix(), FieldElement(0)});
    json bad = base;
    bad["kraus"][0]["j"] = 0;
    EXPECT_EQ(kind_of([&] { io::parse_process(bad); }), ErrorKind::ParseError);
    bad = base;
    bad.erase("rho");
    EXPECT_EQ(kind_of([&] { io::parse_process(bad); }), ErrorKind::ParseError);
    bad = base;
    bad["kraus"].push_back(base["kraus"][0]);
    EXPECT_EQ(kind_of([&] { io::parse_process(bad); }), ErrorKind::ParseError);
    bad = base;
    bad["rho"] = json::parse(R"({"rows": 1, "cols": 1, "entries": [["1"]]})");
    EXPECT_EQ(kind_of([&] { io::parse_process(bad); }), ErrorKind::DimensionMismatch);
}

TEST(Io, CircuitAndChainRoundTrip) {
    json c = json::parse(R"({"field": "sqrt2", "width": 2, "output": 2,
        "gates": [{"name": "H", "targets": [1]}, {"name": "CNOT", "targets": [1, 2]}]})");
    CircuitSpec spec = io::parse_circuit(c);
    EXPECT_EQ(io::circuit_to_json(spec), c);
    EXPECT_EQ(circuit_accept_probability(spec), NumberField::sqrt2().constant(Rational(1, 2)));
    json custom = c;
    custom["gates"][0] = json::parse(R"({"name": "flip", "targets": [2],
        "kraus": [{"rows": 2, "cols": 2, "entries": [["0", "1"], ["1", "0"]]}]})");
    CircuitSpec cs = io::parse_circuit(custom);
    EXPECT_EQ(io::circuit_to_json(cs), custom);
    json badt = c;
    badt["gates"][1]["targets"] = json::array({1, 3});
    EXPECT_EQ(kind_of([&] { io::parse_circuit(badt); }), ErrorKind::BadTargets);

    json chain = json::parse(R"({"field": "rational", "start": 1, "accept": 2, "reject": 3,
        "matrix": {"rows": 3, "cols": 3, "entries": [["0", "0", "0"], ["1/2", "1", "0"], ["1/2", "0", "1"]]}})");
    MarkovSpec ms = io::parse_chain(chain);
    EXPECT_EQ(ms.start, 0);
    EXPECT_EQ(ms.accept, 1);
    EXPECT_EQ(*ms.reject, 2);
    EXPECT_EQ(io::chain_to_json(ms), chain);
}
