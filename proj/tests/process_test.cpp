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

#include "selquant/process.hpp"

#include <gtest/gtest.h>

#include "selquant/instances.hpp"

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

SelectiveQuantumOperation single(const ComplexMatrix &a) {
    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> k;
    k[{0, 0}] = a;
    return SelectiveQuantumOperation(static_cast<int>(a.rows()), 2, std::move(k));
}

// All sequences over {0..m-1} of the given length.
std::vector<std::vector<int>> sequences(int m, int len) {
    std::vector<std::vector<int>> out{{}};
    for (int l = 0; l < len; ++l) {
        std::vector<std::vector<int>> next;
        for (const auto &s : out)
            for (int r = 0; r < m; ++r) {
                auto t = s;
                t.push_back(r);
                next.push_back(t);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST(Validate, Examples) {
    EXPECT_NO_THROW(validate_operation(hadamard_measure()));
    ComplexMatrix half = scaled(identity<ComplexFieldElement>(2), ComplexFieldElement(q(1, 2)));
    EXPECT_EQ(kind_of([&] { validate_operation(single(half)); }), ErrorKind::CompletenessViolation);
    EXPECT_NO_THROW(validate_operation(single(hadamard_matrix())));
}

TEST(DensityMatrix, Checks) {
    ComplexMatrix good = basis_state(k2(), 2, 0).matrix();
    EXPECT_NO_THROW(DensityMatrix::create(good));
    ComplexMatrix two = scaled(good, ComplexFieldElement(q(2)));
    EXPECT_EQ(kind_of([&] { DensityMatrix::create(two); }), ErrorKind::TraceViolation);
    ComplexMatrix neg = zeros<ComplexFieldElement>(2, 2);
    neg(0, 0) = q(2);
    neg(1, 1) = q(-1);
    EXPECT_EQ(kind_of([&] { DensityMatrix::create(neg); }), ErrorKind::PsdViolation);
    ComplexMatrix herm = zeros<ComplexFieldElement>(2, 2);
    herm(0, 0) = q(1, 2);
    herm(1, 1) = q(1, 2);
    herm(0, 1) = ComplexFieldElement(q(0), q(1));
    herm(1, 0) = ComplexFieldElement(q(0), q(1));
    EXPECT_EQ(kind_of([&] { DensityMatrix::create(herm); }), ErrorKind::NotHermitian);
    // [[1/2, 1], [1, 1/2]] is Hermitian with trace 1 but eigenvalue -1/2.
    ComplexMatrix off = zeros<ComplexFieldElement>(2, 2);
    off(0, 0) = q(1, 2);
    off(1, 1) = q(1, 2);
    off(0, 1) = q(1);
    off(1, 0) = q(1);
    EXPECT_EQ(kind_of([&] { DensityMatrix::create(off); }), ErrorKind::PsdViolation);
    // Pure state |+><+| with complex phase: (|0> + i|1>)/sqrt 2.
    ComplexMatrix plus_i = zeros<ComplexFieldElement>(2, 2);
    plus_i(0, 0) = q(1, 2);
    plus_i(1, 1) = q(1, 2);
    plus_i(0, 1) = ComplexFieldElement(q(0), q(-1, 2));
    plus_i(1, 0) = ComplexFieldElement(q(0), q(1, 2));
    EXPECT_NO_THROW(DensityMatrix::create(plus_i));
}

TEST(BranchProbability, Examples) {
    auto op = hadamard_measure();
    auto rho = basis_state(k2(), 2, 0);
    EXPECT_EQ(branch_probability(op, rho, 0), q(1, 2));
    EXPECT_EQ(branch_probability(op, rho, 1), q(1, 2));
    auto id = single(identity<ComplexFieldElement>(2));
    EXPECT_EQ(branch_probability(id, rho, 0), q(1));
    EXPECT_EQ(branch_probability(id, rho, 1), q(0));
}

TEST(ApplyBranch, Examples) {
    auto op = hadamard_measure();
    auto rho = basis_state(k2(), 2, 0);
    EXPECT_TRUE(equal(apply_normalized(op, rho, 0).matrix(), rho.matrix()));
    auto h = single(hadamard_matrix());
    auto e = apply_normalized(h, rho, 0);
    EXPECT_EQ(trace(e.matrix()), ComplexFieldElement(q(1)));
    EXPECT_TRUE(equal(e.matrix(), mul(mul(hadamard_matrix(), rho.matrix()), dagger(hadamard_matrix()))));
    EXPECT_EQ(kind_of([&] { apply_normalized(h, rho, 1); }), ErrorKind::UndefinedBranch);
}

TEST(PrefixProbability, Examples) {
    auto op = hadamard_measure();
    auto rho = basis_state(k2(), 2, 0);
    EXPECT_EQ(prefix_probability(op, rho, {0, 1}), q(1, 4));
    EXPECT_EQ(prefix_probability(op, rho, {}), q(1));
    EXPECT_EQ(prefix_probability(op, rho, {1, 1}), q(1, 4));
}

TEST(Realify, RealOperation) {
    auto op = hadamard_measure();
    auto rho = basis_state(k2(), 2, 0);
    auto r = realify(op, rho);
    EXPECT_EQ(r.op.dim(), 4);
    EXPECT_TRUE(r.op.is_real());
    EXPECT_EQ(r.rho.matrix()(0, 0), ComplexFieldElement(q(1, 2)));
    EXPECT_EQ(r.rho.matrix()(1, 1), ComplexFieldElement(q(1, 2)));
    for (const auto &s : sequences(2, 3)) EXPECT_EQ(prefix_probability(op, rho, s), prefix_probability(r.op, r.rho, s));
}

TEST(Realify, PhaseBlock) {
    ComplexMatrix iI = zeros<ComplexFieldElement>(2, 2);
    iI(0, 0) = ComplexFieldElement(q(0), q(1));
    iI(1, 1) = ComplexFieldElement(q(0), q(1));
    auto op = single(iI);
    auto r = realify(op, basis_state(k2(), 2, 1));
    ComplexMatrix a = r.op.kraus(0, 0);
    EXPECT_EQ(a(0, 1), ComplexFieldElement(q(1)));
    EXPECT_EQ(a(1, 0), ComplexFieldElement(q(-1)));
    EXPECT_TRUE(a(0, 0).is_zero());
    EXPECT_NO_THROW(validate_operation(r.op));
    EXPECT_EQ(prefix_probability(r.op, r.rho, {0, 0}), q(1));
}

TEST(Realify, HadamardMeasureWithPhaseGate) {
    ComplexMatrix s = zeros<ComplexFieldElement>(2, 2);
    s(0, 0) = q(1);
    s(1, 1) = ComplexFieldElement(q(0), q(1));
    auto base = hadamard_measure();
    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> k;
    for (const auto &[key, a] : base.entries()) k[key] = mul(mul(a, s), hadamard_matrix());
    SelectiveQuantumOperation op(2, 2, k);
    validate_operation(op);
    auto rho = basis_state(k2(), 2, 0);
    auto r = realify(op, rho);
    validate_operation(r.op);
    for (int len = 0; len <= 3; ++len)
        for (const auto &seq : sequences(2, len))
            EXPECT_EQ(prefix_probability(op, rho, seq), prefix_probability(r.op, r.rho, seq));
}

TEST(DecisionMatrix, HadamardMeasure) {
    auto r = realify(hadamard_measure(), basis_state(k2(), 2, 0));
    auto dm = build_decision_matrix(r.op, r.rho, q(1, 2));
    ASSERT_EQ(dm.m.rows(), 18);
    EXPECT_EQ(mat_pow_entry(dm.m, 2, 17, 0), q(1, 2));
    EXPECT_EQ(mat_pow_entry(dm.m, 3, 17, 0), q(1, 4));
    for (int c = 0; c < 18; ++c) EXPECT_TRUE(dm.m(0, c).is_zero());
    for (int r2 = 0; r2 < 18; ++r2) EXPECT_TRUE(dm.m(r2, 17).is_zero());
    auto dm0 = build_decision_matrix(r.op, r.rho, q(0));
    EXPECT_TRUE(dm0.m(17, 0).is_zero());
    FieldElement partial(0);
    for (int t = 0; t <= 10; ++t) {
        partial += mat_pow_entry(dm.m, t, 17, 0);
        if (t >= 1) EXPECT_EQ(partial, FieldElement(t >= 2 ? Rational(1 - pow2(-(t - 1))) : Rational(0)) - q(1, 2));
    }
}

TEST(DecisionMatrix, RejectsComplexAndBadBeta) {
    ComplexMatrix iI = zeros<ComplexFieldElement>(2, 2);
    iI(0, 0) = ComplexFieldElement(q(0), q(1));
    iI(1, 1) = ComplexFieldElement(q(0), q(1));
    EXPECT_EQ(kind_of([&] { build_decision_matrix(single(iI), basis_state(k2(), 2, 0), q(0)); }), ErrorKind::NotReal);
    EXPECT_EQ(kind_of([&] { build_decision_matrix(hadamard_measure(), basis_state(k2(), 2, 0), q(3, 2)); }),
              ErrorKind::InvalidArgument);
}

TEST(HaltingTruncated, Examples) {
    auto op = hadamard_measure();
    auto rho = basis_state(k2(), 2, 0);
    EXPECT_EQ(halting_probability_truncated(op, rho, 0), q(1, 2));
    EXPECT_EQ(halting_probability_truncated(op, rho, 1), q(3, 4));
    auto id = single(identity<ComplexFieldElement>(2));
    for (int t = 0; t < 5; ++t) EXPECT_TRUE(halting_probability_truncated(id, rho, t).is_zero());
}

TEST(RandomSuite, Properties) {
    SuiteParams sp;
    sp.seed = 42;
    sp.count = 8;
    sp.complex_entries = true;
    for (const auto &inst : random_suite(k2(), sp)) {
        validate_operation(inst.op);
        DensityMatrix::create(inst.rho.matrix());
        FieldElement total(0);
        for (int i = 0; i < inst.op.outputs(); ++i) {
            ComplexMatrix f = apply_unnormalized(inst.op, inst.rho.matrix(), i);
            FieldElement p = branch_probability(inst.op, inst.rho, i);
            EXPECT_EQ(real_trace(f), p);
            EXPECT_TRUE(is_psd(f));
            total += p;
        }
        EXPECT_EQ(total, FieldElement(1));
        auto r = realify(inst.op, inst.rho);
        for (int len = 0; len <= 3; ++len)
            for (const auto &seq : sequences(inst.op.outputs(), len))
                EXPECT_EQ(prefix_probability(inst.op, inst.rho, seq), prefix_probability(r.op, r.rho, seq));
        auto dm = build_decision_matrix(r.op, r.rho, inst.beta);
        std::vector<int> prefix;
        for (int t = 0; t <= 4; ++t) {
            auto with_one = prefix;
            with_one.push_back(1);
            EXPECT_EQ(mat_pow_entry(dm.m, t + 2, dm.m.rows() - 1, 0), prefix_probability(inst.op, inst.rho, with_one));
            prefix.push_back(0);
        }
        FieldElement prev(0);
        for (int t = 0; t <= 6; ++t) {
            FieldElement h = halting_probability_truncated(inst.op, inst.rho, t);
            EXPECT_GE(fe_sign(h - prev), 0);
            EXPECT_LE(fe_sign(h - FieldElement(1)), 0);
            prev = h;
        }
    }
}

TEST(Sampler, HadamardMeasureFrequency) {
    auto op = hadamard_measure();
    auto rho = basis_state(k2(), 2, 0);
    TrajectorySampler sampler(op, rho);
    std::mt19937_64 rng(7);
    int ones = 0;
    const int trials = 20000;
    for (int k = 0; k < trials; ++k) ones += sampler.sample(rng, 1)[0] == 1;
    EXPECT_NEAR(static_cast<double>(ones) / trials, 0.5, 0.02);
    EXPECT_EQ(sample_trajectory(op, rho, 99, 20), sample_trajectory(op, rho, 99, 20));
    auto id = single(identity<ComplexFieldElement>(2));
    for (int r : sample_trajectory(id, rho, 3, 10)) EXPECT_EQ(r, 0);
}
