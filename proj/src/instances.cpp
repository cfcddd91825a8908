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

#include "selquant/instances.hpp"

namespace selquant {

namespace {

struct Rotation {
    FieldElement c;
    FieldElement s;
};

std::vector<Rotation> rotation_table(const NumberField &field) {
    std::vector<Rotation> table;
    const std::pair<int, int> triples[] = {{3, 4}, {4, 3}, {5, 12}, {8, 15}};
    for (auto [a, b] : triples) {
        Rational den(a * a + b * b);
        mpz_sqrt(den.get_num_mpz_t(), den.get_num_mpz_t());
        table.push_back({field.constant(Rational(a) / den), field.constant(Rational(b) / den)});
    }
    if (field.degree() == 2 && field.minpoly() == IntPolynomial{-2, 0, 1}) {
        FieldElement h = field.generator() * field.constant(Rational(1, 2));
        table.push_back({h, h});
        table.push_back({h, h});
    }
    return table;
}

std::vector<ComplexFieldElement> phase_table(const NumberField &field) {
    std::vector<ComplexFieldElement> table;
    table.emplace_back(field.constant(Rational(3, 5)), field.constant(Rational(4, 5)));
    table.emplace_back(field.constant(Rational(0)), field.constant(Rational(1)));
    if (field.degree() == 2 && field.minpoly() == IntPolynomial{-2, 0, 1}) {
        FieldElement h = field.generator() * field.constant(Rational(1, 2));
        table.emplace_back(h, h);
    }
    return table;
}

// Left-multiplies rows r and s of v by [[c, -s], [s, c]].
void rotate_rows(ComplexMatrix &v, Eigen::Index r, Eigen::Index s, const Rotation &rot) {
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        ComplexFieldElement a = v(r, k), b = v(s, k);
        if (a.is_zero() && b.is_zero()) continue;
        v(r, k) = ComplexFieldElement(rot.c) * a - ComplexFieldElement(rot.s) * b;
        v(s, k) = ComplexFieldElement(rot.s) * a + ComplexFieldElement(rot.c) * b;
    }
}

ComplexMatrix random_isometry(std::mt19937_64 &rng, const NumberField &field, Eigen::Index rows, Eigen::Index cols,
                              bool complex_entries, int rotations) {
    ComplexMatrix v = zeros<ComplexFieldElement>(rows, cols);
    for (Eigen::Index k = 0; k < cols; ++k) v(k, k) = ComplexFieldElement(field.one());
    if (rows < 2) return v;
    auto rots = rotation_table(field);
    auto phases = phase_table(field);
    std::uniform_int_distribution<Eigen::Index> row(0, rows - 1);
    std::uniform_int_distribution<std::size_t> pick_rot(0, rots.size() - 1), pick_phase(0, phases.size() - 1);
    std::bernoulli_distribution coin(0.5);
    if (rotations <= 0) rotations = static_cast<int>(rows + cols);
    for (int t = 0; t < rotations; ++t) {
        // Alternate between mixing an input row into the rest and random pairs,
        // so every column spreads over several rows.
        Eigen::Index r = t < cols ? t % cols : row(rng);
        Eigen::Index s = row(rng);
        while (s == r) s = row(rng);
        rotate_rows(v, r, s, rots[pick_rot(rng)]);
        if (complex_entries && coin(rng)) {
            const auto &ph = phases[pick_phase(rng)];
            for (Eigen::Index k = 0; k < cols; ++k)
                if (!v(s, k).is_zero()) v(s, k) = ph * v(s, k);
        }
    }
    return v;
}

}  // namespace

ComplexMatrix hadamard_matrix() {
    auto f = NumberField::sqrt2();
    FieldElement h = f.generator() * f.constant(Rational(1, 2));
    ComplexMatrix m(2, 2);
    m(0, 0) = h;
    m(0, 1) = h;
    m(1, 0) = h;
    m(1, 1) = -h;
    return m;
}

SelectiveQuantumOperation hadamard_measure() {
    auto f = NumberField::sqrt2();
    ComplexMatrix h = hadamard_matrix();
    ComplexMatrix p0 = zeros<ComplexFieldElement>(2, 2), p1 = zeros<ComplexFieldElement>(2, 2);
    p0(0, 0) = ComplexFieldElement(f.one());
    p1(1, 1) = ComplexFieldElement(f.one());
    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> k;
    k[{0, 0}] = mul(p0, h);
    k[{1, 0}] = mul(p1, h);
    return SelectiveQuantumOperation(2, 2, std::move(k));
}

DensityMatrix basis_state(const NumberField &field, int dim, int k) {
    ComplexMatrix m = zeros<ComplexFieldElement>(dim, dim);
    m(k, k) = ComplexFieldElement(field.one());
    return DensityMatrix::trusted(std::move(m));
}

SelectiveQuantumOperation random_operation(std::mt19937_64 &rng, const NumberField &field,
                                           const RandomOperationParams &params) {
    const int n = params.dim;
    const int blocks = params.outputs * params.branches;
    ComplexMatrix v = random_isometry(rng, field, static_cast<Eigen::Index>(blocks) * n, n, params.complex_entries,
                                      params.rotations);
    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> kraus;
    for (int i = 0; i < params.outputs; ++i) {
        for (int j = 0; j < params.branches; ++j) {
            int b = i * params.branches + j;
            kraus[{i, j}] = v.block(static_cast<Eigen::Index>(b) * n, 0, n, n);
        }
    }
    return SelectiveQuantumOperation(n, params.outputs, std::move(kraus));
}

ComplexMatrix random_unitary(std::mt19937_64 &rng, const NumberField &field, int n, bool complex_entries,
                             int rotations) {
    return random_isometry(rng, field, n, n, complex_entries, rotations);
}

DensityMatrix random_density(std::mt19937_64 &rng, const NumberField &field, int dim, bool complex_entries) {
    ComplexMatrix u = random_unitary(rng, field, dim, complex_entries, dim + 1);
    std::uniform_int_distribution<int> w(0, 4);
    std::vector<int> weights(dim);
    int total = 0;
    while (total == 0) {
        total = 0;
        for (auto &x : weights) total += (x = w(rng));
    }
    ComplexMatrix rho = zeros<ComplexFieldElement>(dim, dim);
    for (int k = 0; k < dim; ++k) {
        if (weights[k] == 0) continue;
        ComplexMatrix col = u.col(k);
        ComplexMatrix proj = mul(col, dagger(col));
        rho = add(rho, scaled(proj, ComplexFieldElement(field.constant(Rational(weights[k], total)))));
    }
    return DensityMatrix::trusted(std::move(rho));
}

FieldElement random_beta(std::mt19937_64 &rng, const NumberField &field) {
    std::vector<FieldElement> choices{field.zero(), field.constant(Rational(1, 4)), field.constant(Rational(1, 2)),
                                      field.one()};
    if (field.degree() == 2 && field.minpoly() == IntPolynomial{-2, 0, 1}) {
        choices.push_back(field.generator() * field.constant(Rational(1, 4)));
    }
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    return choices[pick(rng)];
}

std::vector<ProcessInstance> random_suite(const NumberField &field, const SuiteParams &params) {
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<std::size_t> dim(0, params.dims.size() - 1);
    std::uniform_int_distribution<int> outputs(2, std::max(2, params.max_outputs));
    std::uniform_int_distribution<int> branches(1, std::max(1, params.max_branches));
    std::vector<ProcessInstance> suite;
    for (int k = 0; k < params.count; ++k) {
        RandomOperationParams p;
        p.dim = params.dims[dim(rng)];
        p.outputs = outputs(rng);
        p.branches = branches(rng);
        p.complex_entries = params.complex_entries;
        auto op = random_operation(rng, field, p);
        auto rho = random_density(rng, field, p.dim, params.complex_entries);
        auto beta = random_beta(rng, field);
        suite.push_back({"random-" + std::to_string(k), std::move(op), std::move(rho), std::move(beta)});
    }
    return suite;
}

}  // namespace selquant
