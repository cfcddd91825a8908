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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "selquant/decide.hpp"
#include "selquant/error.hpp"
#include "selquant/frontends.hpp"
#include "selquant/instances.hpp"
#include "selquant/linalg.hpp"
#include "selquant/newton.hpp"
#include "selquant/numberfield.hpp"
#include "selquant/process.hpp"
#include "support/oracles.hpp"

using namespace selquant;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

FieldElement q(long num, long den = 1) {
    return FieldElement(Rational(num, den));
}

Rational abs_q(const Rational &x) {
    return sgn(x) < 0 ? Rational(-x) : x;
}

// 1: Newton approximants against bisection intervals.
void newton_convergence(Outcome &o) {
    auto start = Clock::now();
    struct Case {
        NumberField field;
        long a0, a1;
    };
    std::vector<Case> cases{{NumberField::sqrt2(), 3, 2}, {NumberField::golden(), 3, 2}, {NumberField::cbrt2(), 5, 4}};
    int checks = 0;
    for (const auto &c : cases) {
        NewtonScheme scheme = certify_seed(c.field, Integer(c.a0), Integer(c.a1));
        for (long n : {1L, 2L, 4L, 8L, 16L, 32L, 64L}) {
            Rational v = approximant(scheme, n).value();
            RationalInterval root = c.field.refine_root(pow2(-(n + 2)));
            Rational err = std::max(abs_q(v - root.lo), abs_q(v - root.hi));
            o.require(err < pow2(-n), c.field.describe() + " n=" + std::to_string(n));
            ++checks;
        }
    }
    double t = seconds_since(start);
    o.require(t < 10.0, "runtime");
    o.detail << checks << " approximants checked in " << t << " s";
}

std::vector<ProcessInstance> suite(const NumberField &field, std::uint64_t seed, int count, std::vector<int> dims,
                                   bool complex_entries) {
    SuiteParams sp;
    sp.seed = seed;
    sp.count = count;
    sp.dims = std::move(dims);
    sp.max_outputs = 3;
    sp.max_branches = 2;
    sp.complex_entries = complex_entries;
    return random_suite(field, sp);
}

// 2: entries of decision-matrix powers against prefix probabilities.
void power_identity(Outcome &o) {
    auto insts = suite(NumberField::sqrt2(), 2026, 20, {2, 3}, false);
    int checks = 0;
    for (const auto &inst : insts) {
        DecisionMatrix dm = build_decision_matrix(inst.op, inst.rho, inst.beta);
        const Eigen::Index last = dm.m.rows() - 1;
        FieldMatrix power = mul(dm.m, dm.m);
        std::vector<int> prefix;
        for (int t = 0; t <= 8; ++t) {
            std::vector<int> word = prefix;
            word.push_back(1);
            o.require(power(last, 0) == prefix_probability(inst.op, inst.rho, word),
                      inst.name + " t=" + std::to_string(t));
            ++checks;
            power = mul(power, dm.m);
            prefix.push_back(0);
        }
    }
    o.require(insts.size() >= 20, "suite size");
    o.detail << insts.size() << " operations, " << checks << " exact identities";
}

void words(int alphabet, int length, std::vector<int> &cur, const std::function<void(const std::vector<int> &)> &fn) {
    fn(cur);
    if (static_cast<int>(cur.size()) == length) return;
    for (int a = 0; a < alphabet; ++a) {
        cur.push_back(a);
        words(alphabet, length, cur, fn);
        cur.pop_back();
    }
}

// 3: realification preserves every short prefix probability.
void realification(Outcome &o) {
    auto insts = suite(NumberField::sqrt2(), 3030, 20, {2, 3}, true);
    int checks = 0, complex_ops = 0;
    for (const auto &inst : insts) {
        if (!inst.op.is_real() || !inst.rho.is_real()) ++complex_ops;
        RealifiedProcess r = realify(inst.op, inst.rho);
        o.require(r.op.is_real() && r.rho.is_real(), inst.name + " not real after realify");
        std::vector<int> cur;
        words(inst.op.outputs(), 4, cur, [&](const std::vector<int> &w) {
            o.require(prefix_probability(inst.op, inst.rho, w) == prefix_probability(r.op, r.rho, w), inst.name);
            ++checks;
        });
    }
    o.require(complex_ops > 0, "suite has no complex entries");
    o.detail << insts.size() << " operations (" << complex_ops << " complex), " << checks << " prefixes";
}

FieldMatrix ruin_chain() {
    FieldMatrix a = zeros<FieldElement>(5, 5);
    a(0, 0) = q(1);
    a(4, 4) = q(1);
    for (int j = 1; j <= 3; ++j) {
        a(j - 1, j) = q(1, 2);
        a(j + 1, j) = q(1, 2);
    }
    return a;
}

// 4: closed-form instances.
void closed_forms(Outcome &o) {
    NumberField k2 = NumberField::sqrt2();
    SelectiveQuantumOperation op = hadamard_measure();
    DensityMatrix rho = basis_state(k2, 2, 0);

    FieldElement limit = series_limit_exact(process_instance(op, rho, q(0)));
    o.require(limit == q(1), "halting probability is not 1");
    for (auto [beta, accept] : std::vector<std::pair<FieldElement, bool>>{
             {q(0), true}, {q(1, 4), true}, {q(1, 2), true}, {q(3, 4), true}, {q(1), false}}) {
        DecisionResult r = decide_exact(process_instance(op, rho, beta));
        o.require((r.verdict == Verdict::Accept) == accept, "verdict for beta=" + beta.to_string());
    }

    // The truncation sums t = 0..T, so twenty steps end at T = 19.
    FieldElement one = q(1);
    o.require(halting_probability_truncated(op, rho, 19) == one - FieldElement(pow2(-20)), "20-step sum");
    o.require(halting_probability_truncated(op, rho, 20) == one - FieldElement(pow2(-21)), "sum through T=20");

    FieldMatrix a = ruin_chain();
    const int start = 2, target = 4;
    FieldElement by_det = markov_absorption(a, start, target);
    FieldElement by_solve = oracle::absorption_linear_solve(a, start, target);
    o.require(by_det == q(1, 2), "determinant route");
    o.require(by_solve == q(1, 2), "linear-solve route");

    FieldMatrix x = zeros<FieldElement>(5, 1);
    x(start, 0) = q(1);
    for (int t = 0; t < 200; ++t) x = mul(a, x);
    FieldElement tail = x(1, 0) + x(2, 0) + x(3, 0);
    FieldElement gap = q(1, 2) - x(target, 0);
    o.require(fe_sign(gap) >= 0 && fe_sign(tail - gap) >= 0, "truncation sandwich");
    o.require(fe_sign(tail - FieldElement(pow2(-30))) <= 0, "tail bound");
    o.detail << "limit 1, verdicts ok, ruin 1/2 by three routes, tail 2^" << floor_log2(tail.rational_value());
}

// 5: exact and approximate verdicts agree, with the internal inequality.
void route_agreement(Outcome &o) {
    auto start = Clock::now();
    NumberField k2 = NumberField::sqrt2();
    NumberField rat = NumberField::rationals();
    std::vector<ProcessInstance> all;
    for (auto &&part : {suite(k2, 501, 12, {2, 3}, false), suite(rat, 502, 12, {2, 3}, false),
                        suite(k2, 503, 8, {2}, true), suite(rat, 504, 6, {2}, true)}) {
        all.insert(all.end(), part.begin(), part.end());
    }
    for (auto beta : {q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}) {
        all.push_back({"hadamard beta=" + beta.to_string(), hadamard_measure(), basis_state(k2, 2, 0), beta});
    }
    SelectiveQuantumOperation silent(2, 2, {{{0, 0}, identity<ComplexFieldElement>(2)}});
    for (auto beta : {q(0), q(1, 2)}) {
        all.push_back({"silent beta=" + beta.to_string(), silent, basis_state(rat, 2, 1), beta});
    }

    int accepts = 0, rejects = 0;
    for (const auto &inst : all) {
        DecisionInstance di = process_instance(inst.op, inst.rho, inst.beta);
        DecisionResult exact = decide_exact(di);
        NumberField f = instance_field(di);
        BoundConstants c = derive_constants(di, f);
        DecisionResult approx = decide_approx(di, f, default_scheme(f), c);
        o.require(exact.verdict == approx.verdict, inst.name + " verdicts differ");
        (exact.verdict == Verdict::Accept ? accepts : rejects) += 1;
        FieldElement diff = FieldElement(approx.approx->ratio()) - *exact.witness;
        FieldElement half_sep(c.separation / 2);
        o.require(fe_sign(diff - half_sep) < 0 && fe_sign(diff + half_sep) > 0, inst.name + " internal inequality");
    }
    double t = seconds_since(start);
    o.require(all.size() >= 40, "suite size");
    o.require(accepts > 0 && rejects > 0, "both verdicts");
    o.require(t < 300.0, "runtime");
    o.detail << all.size() << " instances (" << accepts << " accept, " << rejects << " reject) in " << t << " s";
}

CircuitSpec circuit(int width, int output, std::vector<std::pair<std::string, std::vector<int>>> gates) {
    CircuitSpec c;
    c.field = NumberField::sqrt2();
    c.width = width;
    c.output = output;
    for (auto &[name, targets] : gates) c.gates.push_back({gate_preset(name, c.field), targets});
    return c;
}

// 6: circuits compiled to processes.
void circuit_round_trip(Outcome &o) {
    std::vector<std::pair<std::string, CircuitSpec>> circuits{
        {"bell", circuit(2, 2, {{"H", {1}}, {"CNOT", {1, 2}}})},
        {"single H", circuit(1, 1, {{"H", {1}}})},
        {"X", circuit(1, 1, {{"X", {1}}})},
        {"HZH", circuit(1, 1, {{"H", {1}}, {"Z", {1}}, {"H", {1}}})},
        {"HH", circuit(1, 1, {{"H", {1}}, {"H", {1}}})},
        {"ghz", circuit(3, 3, {{"H", {1}}, {"CNOT", {1, 2}}, {"CNOT", {2, 3}}, {"X", {3}}})},
        {"measure", circuit(2, 2, {{"H", {1}}, {"MEASURE", {1}}, {"CNOT", {1, 2}}, {"H", {2}}})},
        {"mixed", circuit(3, 1, {{"H", {2}}, {"CNOT", {2, 1}}, {"Z", {1}}, {"MEASURE", {3}}})},
    };
    for (const auto &[name, c] : circuits) {
        FieldElement direct = circuit_accept_probability(c);
        CompiledProcess p = circuit_to_process(c);
        FieldElement via = series_limit_exact(process_instance(p.op, p.rho, q(0)));
        o.require(direct == via, name);
        if (name == "bell") o.require(direct == q(1, 2), "bell acceptance");
        // With the cutpoint at the acceptance value itself the verdict is Reject.
        DecisionResult at = decide_exact(process_instance(p.op, p.rho, direct));
        o.require(at.verdict == Verdict::Reject, name + " at threshold");
    }
    o.detail << circuits.size() << " circuits, bell acceptance 1/2";
}

// 7: floating-point spectral radius of the output-0 superoperator.
void spectral_radius(Outcome &o) {
    std::vector<ProcessInstance> all;
    for (auto &&part : {suite(NumberField::sqrt2(), 2026, 20, {2, 3}, false),
                        suite(NumberField::sqrt2(), 3030, 20, {2, 3}, true),
                        suite(NumberField::rationals(), 707, 20, {2, 3}, true)}) {
        all.insert(all.end(), part.begin(), part.end());
    }
    double worst = 0;
    for (const auto &inst : all) {
        const int n = inst.op.dim();
        ComplexMatrix s = zeros<ComplexFieldElement>(n * n, n * n);
        for (const auto &a : inst.op.kraus_for(0)) s = add(s, kron(a, conjugate(a)));
        double r = spectral_radius_estimate(to_complex_double(s));
        worst = std::max(worst, r);
        o.require(r <= 1 + 1e-9, inst.name);
    }
    o.detail << all.size() << " operations, largest radius " << worst;
}

IntPolynomial random_poly(std::mt19937_64 &rng, int degree, long bound) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<Integer> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(coeff(rng));
    if (sgn(c.back()) == 0) c.back() = 1;
    return IntPolynomial(std::move(c));
}

// 8: Mahler bound and the quotient perturbation bound.
void bounds_soundness(Outcome &o) {
    std::mt19937_64 rng(88);
    int mahler_checks = 0;
    for (const char *name : {"sqrt2", "golden", "cbrt2", "rational"}) {
        NumberField field = NumberField::preset(name);
        const IntPolynomial &f = field.minpoly();
        int done = 0;
        while (done < 50) {
            IntPolynomial g = random_poly(rng, 1 + static_cast<int>(rng() % 5), 20);
            if (ratpoly::divmod(g.to_rational(), f.to_rational()).second.empty()) continue;
            Rational bound = mahler_bound(f, g, field.alpha_abs_upper());
            Rational width = pow2(-8);
            bool certified = false;
            for (int k = 0; k < 64 && !certified; ++k, width /= 1 << 16) {
                RationalInterval enc = ratpoly::eval(g.to_rational(), field.refine_root(width));
                if (enc.contains_zero()) continue;
                Rational lower = sgn(enc.lo) > 0 ? enc.lo : Rational(-enc.hi);
                certified = lower >= bound;
            }
            o.require(certified, std::string(name) + " g=" + g.to_string());
            ++done;
            ++mahler_checks;
        }
    }

    int perturbation_checks = 0;
    while (perturbation_checks < 100) {
        const int d = 1 + static_cast<int>(rng() % 4);
        IntPolynomial u = random_poly(rng, static_cast<int>(rng() % (d + 1)), 9);
        IntPolynomial v = random_poly(rng, d, 9);
        Rational v0 = v.eval(Rational(0));
        if (sgn(v0) == 0) continue;
        Rational delta = abs_q(v0) * Rational(1 + static_cast<long>(rng() % 16), 16);
        delta.canonicalize();
        PerturbationBound pb = rational_perturbation_bound(u, v, delta);
        Rational frac(static_cast<long>(rng() % 65) - 32, 32);
        frac.canonicalize();
        Rational z = pb.epsilon * frac;
        Rational vz = v.eval(z);
        o.require(abs_q(vz) >= delta / 2, "|v(z)| lower bound");
        Rational err = abs_q(u.eval(Rational(0)) / v0 - u.eval(z) / vz);
        o.require(err <= pb.epsilon * pb.errcoef, "quotient error");
        ++perturbation_checks;
    }
    o.detail << mahler_checks << " Mahler checks, " << perturbation_checks << " perturbation samples";
}

// 9: Monte-Carlo frequency of the first output.
void monte_carlo(Outcome &o) {
    TrajectorySampler sampler(hadamard_measure(), basis_state(NumberField::sqrt2(), 2, 0));
    std::mt19937_64 rng(20260101);
    const int trials = 100000;
    int ones = 0;
    for (int k = 0; k < trials; ++k) {
        std::vector<int> out = sampler.sample(rng, 1);
        if (!out.empty() && out[0] == 1) ++ones;
    }
    double freq = static_cast<double>(ones) / trials;
    o.require(std::abs(freq - 0.5) < 0.01, "frequency");
    o.detail << "empirical Pr[R_1 = 1] = " << freq << " over " << trials << " trajectories";
}

}  // namespace

int main() {
    std::vector<std::function<void(Outcome &)>> criteria{newton_convergence, power_identity,     realification,
                                                         closed_forms,       route_agreement,    circuit_round_trip,
                                                         spectral_radius,    bounds_soundness,   monte_carlo};
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k](o);
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::cout << "Criterion " << (k + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail.str()
                  << std::endl;
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
