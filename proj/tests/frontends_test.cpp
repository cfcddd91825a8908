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

#include "selquant/frontends.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "selquant/decide.hpp"
#include "support/oracles.hpp"

using namespace selquant;

namespace {

NumberField k2() {
    return NumberField::sqrt2();
}

FieldElement q(long a, long b = 1) {
    return k2().constant(Rational(a, b));
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

CircuitSpec circuit(int width, int output, std::vector<std::pair<std::string, std::vector<int>>> gates) {
    CircuitSpec c;
    c.field = k2();
    c.width = width;
    c.output = output;
    for (auto &[name, targets] : gates) c.gates.push_back({gate_preset(name, c.field), targets});
    return c;
}

FieldElement process_acceptance(const CompiledProcess &cp) {
    DecisionInstance inst = process_instance(cp.op, cp.rho, FieldElement(0));
    return series_limit_exact(inst);
}

bool complete(const std::vector<ComplexMatrix> &ks) {
    ComplexMatrix s = zeros<ComplexFieldElement>(ks[0].rows(), ks[0].cols());
    for (const auto &a : ks) s = add(s, mul(dagger(a), a));
    return equal(s, identity<ComplexFieldElement>(ks[0].rows()));
}

}  // namespace

TEST(ExpandGate, Examples) {
    GateSpec h = gate_preset("H", k2());
    ComplexMatrix i2 = identity<ComplexFieldElement>(2);
    EXPECT_TRUE(equal(expand_gate(h, {1}, 2)[0], kron(h.kraus[0], i2)));
    EXPECT_TRUE(equal(expand_gate(h, {2}, 2)[0], kron(i2, h.kraus[0])));
    // CNOT with control 2, target 1, checked on basis states |b1 b2>.
    ComplexMatrix rev = expand_gate(gate_preset("CNOT", k2()), {2, 1}, 2)[0];
    for (int b1 = 0; b1 < 2; ++b1) {
        for (int b2 = 0; b2 < 2; ++b2) {
            int in = 2 * b1 + b2;
            int out = 2 * (b1 ^ b2) + b2;
            for (int r = 0; r < 4; ++r) EXPECT_EQ(rev(r, in), ComplexFieldElement(r == out ? 1 : 0));
        }
    }
    // Swapping the qubit order conjugates by SWAP.
    ComplexMatrix swap = zeros<ComplexFieldElement>(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = ComplexFieldElement(1);
    ComplexMatrix fwd = expand_gate(gate_preset("CNOT", k2()), {1, 2}, 2)[0];
    EXPECT_TRUE(equal(rev, mul(mul(swap, fwd), swap)));
    EXPECT_EQ(kind_of([&] { expand_gate(h, {3}, 2); }), ErrorKind::BadTargets);
    EXPECT_EQ(kind_of([&] { expand_gate(gate_preset("CNOT", k2()), {1, 1}, 2); }), ErrorKind::BadTargets);
    EXPECT_EQ(kind_of([&] { expand_gate(h, {1, 2}, 2); }), ErrorKind::BadTargets);
}

TEST(ExpandGate, PreservesCompleteness) {
    for (const char *name : {"H", "X", "Z", "S", "MEASURE", "I"}) {
        GateSpec g = gate_preset(name, k2());
        for (int n = 1; n <= 3; ++n)
            for (int t = 1; t <= n; ++t) EXPECT_TRUE(complete(expand_gate(g, {t}, n))) << name;
    }
    GateSpec cnot = gate_preset("CNOT", k2());
    EXPECT_TRUE(complete(expand_gate(cnot, {3, 1}, 3)));
    EXPECT_TRUE(complete(expand_gate(cnot, {2, 3}, 3)));
}

TEST(Gates, PresetsAndErrors) {
    EXPECT_EQ(kind_of([] { gate_preset("H", NumberField::rationals()); }), ErrorKind::RootNotInField);
    EXPECT_EQ(kind_of([] { gate_preset("T", NumberField::sqrt2()); }), ErrorKind::InvalidArgument);
    ComplexMatrix bad = identity<ComplexFieldElement>(2);
    bad(0, 0) = ComplexFieldElement(2);
    EXPECT_EQ(kind_of([&] { make_gate("bad", {bad}); }), ErrorKind::CompletenessViolation);
    EXPECT_EQ(kind_of([] { make_gate("odd", {identity<ComplexFieldElement>(3)}); }), ErrorKind::DimensionMismatch);
    EXPECT_NO_THROW(gate_preset("x", NumberField::rationals()));
}

TEST(Circuit, AcceptProbabilityExamples) {
    EXPECT_EQ(circuit_accept_probability(circuit(1, 1, {{"H", {1}}})), q(1, 2));
    EXPECT_TRUE(circuit_accept_probability(circuit(1, 1, {})).is_zero());
    EXPECT_TRUE(circuit_accept_probability(circuit(1, 1, {{"H", {1}}, {"H", {1}}})).is_zero());
    EXPECT_EQ(circuit_accept_probability(circuit(2, 2, {{"H", {1}}, {"CNOT", {1, 2}}})), q(1, 2));
    EXPECT_EQ(circuit_accept_probability(circuit(1, 1, {{"X", {1}}})), q(1));
    // H S H leaves 1/2 on |1>, while H H S leaves |0>.
    EXPECT_EQ(circuit_accept_probability(circuit(1, 1, {{"H", {1}}, {"S", {1}}, {"H", {1}}})), q(1, 2));
    EXPECT_TRUE(circuit_accept_probability(circuit(1, 1, {{"H", {1}}, {"H", {1}}, {"S", {1}}})).is_zero());
    EXPECT_EQ(kind_of([] { circuit_accept_probability(circuit(1, 2, {})); }), ErrorKind::BadTargets);
    EXPECT_EQ(kind_of([] { circuit_accept_probability(circuit(2, 1, {{"CNOT", {1}}})); }), ErrorKind::BadTargets);
}

TEST(Circuit, ToProcessExamples) {
    auto single = circuit(1, 1, {{"H", {1}}});
    auto cp = circuit_to_process(single);
    EXPECT_EQ(cp.index_qubits, 0);
    EXPECT_EQ(cp.op.dim(), 2);
    validate_operation(cp.op);
    EXPECT_EQ(decide_process(cp.op, cp.rho, q(1, 4)).verdict, Verdict::Accept);
    EXPECT_EQ(decide_process(cp.op, cp.rho, q(1, 2)).verdict, Verdict::Reject);
    EXPECT_TRUE(process_acceptance(circuit_to_process(circuit(1, 1, {}))).is_zero());
    auto bell = circuit_to_process(circuit(2, 2, {{"H", {1}}, {"CNOT", {1, 2}}}));
    EXPECT_EQ(bell.index_qubits, 1);
    EXPECT_EQ(bell.op.dim(), 8);
    validate_operation(bell.op);
    EXPECT_EQ(process_acceptance(bell), q(1, 2));
    // Three gates leave index value 3 unused.
    auto padded = circuit_to_process(circuit(2, 1, {{"H", {1}}, {"X", {2}}, {"MEASURE", {1}}}));
    EXPECT_EQ(padded.index_qubits, 2);
    validate_operation(padded.op);
    EXPECT_EQ(process_acceptance(padded), q(1, 2));
}

TEST(Circuit, RandomRoundTrip) {
    std::mt19937_64 rng(99);
    const std::vector<std::string> one{"H", "X", "Z", "MEASURE", "S"};
    for (int trial = 0; trial < 12; ++trial) {
        const int width = 1 + static_cast<int>(rng() % 3);
        const int count = static_cast<int>(rng() % 5);
        CircuitSpec c;
        c.field = k2();
        c.width = width;
        c.output = 1 + static_cast<int>(rng() % width);
        for (int g = 0; g < count; ++g) {
            if (width >= 2 && rng() % 3 == 0) {
                int a = 1 + static_cast<int>(rng() % width);
                int b = 1 + static_cast<int>(rng() % (width - 1));
                if (b >= a) ++b;
                c.gates.push_back({gate_preset("CNOT", c.field), {a, b}});
            } else {
                c.gates.push_back({gate_preset(one[rng() % one.size()], c.field), {1 + static_cast<int>(rng() % width)}});
            }
        }
        auto cp = circuit_to_process(c);
        validate_operation(cp.op);
        EXPECT_EQ(process_acceptance(cp), circuit_accept_probability(c)) << "trial " << trial;
    }
}

TEST(Markov, ToProcessExamples) {
    MarkovSpec three;
    three.field = k2();
    three.matrix = zeros<FieldElement>(3, 3);
    three.matrix(1, 0) = q(1, 2);
    three.matrix(2, 0) = q(1, 2);
    three.matrix(1, 1) = q(1);
    three.matrix(2, 2) = q(1);
    three.start = 0;
    three.accept = 1;
    three.reject = 2;
    auto cp = markov_to_process(three);
    validate_operation(cp.op);
    EXPECT_EQ(process_acceptance(cp), q(1, 2));
    EXPECT_EQ(process_acceptance(cp), markov_absorption(three.matrix, 0, 1));
    // Amplitudes sqrt(2)/2 live in the field.
    EXPECT_EQ(cp.op.kraus(1, 0)(1, 0).re(), k2().element({Rational(0), Rational(1, 2)}));

    MarkovSpec direct;
    direct.matrix = zeros<FieldElement>(2, 2);
    direct.matrix(1, 0) = FieldElement(1);
    direct.matrix(1, 1) = FieldElement(1);
    direct.accept = 1;
    EXPECT_EQ(process_acceptance(markov_to_process(direct)), FieldElement(1));

    // Over Q, 1/2 has no square root: four-square split or RootNotInField.
    three.field = NumberField::rationals();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) three.matrix(i, j) = FieldElement(three.matrix(i, j).rational_value());
    auto split = markov_to_process(three);
    validate_operation(split.op);
    EXPECT_EQ(process_acceptance(split), FieldElement(Rational(1, 2)));
    MarkovEncodingOptions strict;
    strict.allow_fallback = false;
    EXPECT_EQ(kind_of([&] { markov_to_process(three, strict); }), ErrorKind::RootNotInField);
}

TEST(Markov, FourSquares) {
    for (long n : {0L, 1L, 2L, 3L, 7L, 15L, 23L, 28L, 31L, 96L, 1000003L, 123456789L}) {
        auto t = four_squares(Integer(n));
        EXPECT_LE(t.size(), 4u);
        Integer s(0);
        for (const auto &x : t) s += x * x;
        EXPECT_EQ(s, n);
    }
}

TEST(Markov, RandomRoundTrip) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + trial % 3;
        FieldMatrix a = zeros<FieldElement>(n, n);
        a(n - 1, n - 1) = FieldElement(1);
        a(n - 2, n - 2) = FieldElement(1);
        for (int j = 0; j + 2 < n; ++j) {
            std::vector<long> w(n);
            long total = 0;
            for (auto &x : w) total += (x = static_cast<long>(rng() % 4));
            w[n - 1] += 1;
            total += 1;
            for (int i = 0; i < n; ++i) {
                Rational v(w[i], total);
                v.canonicalize();
                a(i, j) = FieldElement(v);
            }
        }
        MarkovSpec spec;
        spec.matrix = a;
        spec.start = 0;
        spec.accept = n - 1;
        spec.reject = n - 2;
        auto cp = markov_to_process(spec);
        validate_operation(cp.op);
        FieldElement v = markov_absorption(a, 0, n - 1);
        EXPECT_EQ(process_acceptance(cp), v);
        EXPECT_EQ(v, oracle::absorption_linear_solve(a, 0, n - 1));
    }
}
