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

#include "selquant/decide.hpp"

#include <sstream>

namespace selquant {

std::string to_string(Verdict v) {
    return v == Verdict::Accept ? "Accept" : "Reject";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Approx: return "approx";
        case Method::Markov: return "markov";
    }
    return "unknown";
}

namespace {

PolyMatrix one_minus_z_m(const FieldMatrix &m) {
    const Eigen::Index p = m.rows();
    PolyMatrix out(p, p);
    const PolyOverField z = PolyOverField::z();
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            PolyOverField e = m(i, j).is_zero() ? PolyOverField() : PolyOverField(-m(i, j)) * z;
            if (i == j) e += PolyOverField(1);
            out(i, j) = std::move(e);
        }
    }
    return out;
}

// (-1)^(1+p)
int cofactor_sign(int p) {
    return p % 2 == 1 ? 1 : -1;
}

Integer l1(const IntPolynomial &f) {
    Integer s(0);
    for (const auto &c : f.coeffs()) s += abs(c);
    return s;
}

Integer lcm(const Integer &a, const Integer &b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

struct ClearedMatrix {
    Integer h{1};
    int degree = 0;
    std::vector<std::vector<IntPolynomial>> e;
};

ClearedMatrix clear_denominators(const FieldMatrix &m) {
    ClearedMatrix c;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (const auto &q : m(i, j).coeffs()) c.h = lcm(c.h, q.get_den());
    c.e.assign(m.rows(), std::vector<IntPolynomial>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::vector<Integer> coeffs;
            for (const auto &q : m(i, j).coeffs()) {
                Rational s = q * Rational(c.h);
                coeffs.push_back(s.get_num());
            }
            c.e[i][j] = IntPolynomial(std::move(coeffs));
            c.degree = std::max(c.degree, c.e[i][j].degree());
        }
    }
    return c;
}

// min(product of row sums, product of column sums) of a nonnegative matrix.
Integer product_envelope(const std::vector<std::vector<Integer>> &w) {
    if (w.empty()) return Integer(1);
    Integer rows(1), cols(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Integer s(0);
        for (const auto &x : w[i]) s += x;
        rows *= s;
    }
    for (std::size_t j = 0; j < w[0].size(); ++j) {
        Integer s(0);
        for (std::size_t i = 0; i < w.size(); ++i) s += w[i][j];
        cols *= s;
    }
    return rows < cols ? rows : cols;
}

Rational max_rational(const Rational &a, const Rational &b) {
    return a > b ? a : b;
}

Rational min_rational(const Rational &a, const Rational &b) {
    return a < b ? a : b;
}

}  // namespace

LimitDetails series_limit_details(const DecisionInstance &inst) {
    const int p = inst.p();
    if (inst.m.rows() != inst.m.cols()) {
        throw Error(ErrorKind::NotSquare, "decision matrix is not square");
    }
    if (p < 2) {
        throw Error(ErrorKind::InvalidArgument, "series limit needs p >= 2");
    }
    PolyMatrix a = one_minus_z_m(inst.m);
    LimitDetails out;
    out.det_poly = det(a);
    if (out.det_poly.is_zero()) {
        throw Error(ErrorKind::SingularAtOne, "det(I - zM) vanishes identically");
    }
    out.minor_poly = det(minor(a, 0, p - 1));
    out.det_degree = out.det_poly.degree();
    out.minor_degree = out.minor_poly.degree();
    PolyOverField v = out.det_poly.shift_one_minus();
    PolyOverField u = out.minor_poly.shift_one_minus();
    int k = 0;
    while (v.coeff(k).is_zero()) ++k;
    for (int i = 0; i < k; ++i) {
        if (!u.coeff(i).is_zero()) {
            std::ostringstream os;
            os << "numerator vanishes to order " << i << " at z = 1, below the denominator's order " << k;
            throw Error(ErrorKind::NoLimit, os.str());
        }
    }
    out.order = k;
    out.value = u.coeff(k) / v.coeff(k);
    if (cofactor_sign(p) < 0) out.value = -out.value;
    return out;
}

FieldElement series_limit_exact(const DecisionInstance &inst) {
    return series_limit_details(inst).value;
}

BoundConstants derive_constants(const DecisionInstance &inst, const NumberField &field) {
    const int p = inst.p();
    if (p < 2) {
        throw Error(ErrorKind::InvalidArgument, "constants need p >= 2");
    }
    ClearedMatrix cm = clear_denominators(inst.m);
    BoundConstants c;
    c.h = cm.h;
    c.entry_degree = cm.degree;
    c.p = p;
    c.degree_y = p * cm.degree;

    // Entry (r, s) of hI - (1 - x)E(y) = (h delta_rs - E_rs) + x E_rs.
    std::vector<std::vector<Integer>> w(p, std::vector<Integer>(p));
    for (int r = 0; r < p; ++r) {
        for (int s = 0; s < p; ++s) {
            std::vector<Integer> shifted = cm.e[r][s].coeffs();
            for (auto &x : shifted) x = -x;
            if (r == s) {
                if (shifted.empty()) shifted.emplace_back(0);
                shifted[0] += cm.h;
            }
            w[r][s] = l1(IntPolynomial(std::move(shifted))) + l1(cm.e[r][s]);
        }
    }
    c.height_v = product_envelope(w);
    std::vector<std::vector<Integer>> wm(p - 1, std::vector<Integer>(p - 1));
    for (int r = 1; r < p; ++r)
        for (int s = 0; s + 1 < p; ++s) wm[r - 1][s] = w[r][s];
    c.height_u = cm.h * product_envelope(wm);

    c.alpha_upper = field.alpha_abs_upper();
    const IntPolynomial &f = field.minpoly();
    c.delta_b = mahler_bound_envelope(f, c.degree_y, c.height_v, c.alpha_upper);
    c.delta_a = mahler_bound_envelope(f, c.degree_y, c.height_u, c.alpha_upper);
    Rational grow = pow(max_rational(Rational(1), c.alpha_upper), static_cast<unsigned long>(c.degree_y));
    c.bound_v = Rational(c.height_v) * grow;
    c.bound_u = Rational(c.height_u) * grow;

    Rational sep = c.delta_a / c.bound_v;
    c.c1 = std::max(1L, ceil_log2(2 / sep));
    c.separation = pow2(1 - c.c1);
    const Rational tau = pow2(-c.c1);

    auto z_bound = rational_perturbation_bound(std::max(1, p), c.bound_u, c.bound_v, c.delta_b);
    c.eps_z = z_bound.epsilon;
    c.coef_z = z_bound.errcoef;
    Rational target_z = sgn(c.coef_z) > 0 ? min_rational(c.eps_z, tau / (4 * c.coef_z)) : c.eps_z;
    c.mu = precision_for(target_z);

    c.delta_t = pow2(-c.mu * p) * c.delta_b / 2;
    Rational spread = pow(1 + c.alpha_upper, static_cast<unsigned long>(c.degree_y));
    auto t_bound = rational_perturbation_bound(std::max(1, c.degree_y), Rational(c.height_u) * spread,
                                               Rational(c.height_v) * spread, c.delta_t);
    c.eps_t = t_bound.epsilon;
    c.coef_t = t_bound.errcoef;
    Rational target_t = sgn(c.coef_t) > 0 ? min_rational(c.eps_t, tau / (4 * c.coef_t)) : c.eps_t;
    c.nu = precision_for(target_t);
    return c;
}

Rational ApproxDetails::ratio() const {
    if (sgn(v) == 0) {
        throw Error(ErrorKind::DivisionByZero, "V is zero");
    }
    Rational r(u, v);
    r.canonicalize();
    return r;
}

ApproxDetails decide_approx_details(const DecisionInstance &inst, const NewtonScheme &scheme,
                                    const BoundConstants &constants, const ApproxOptions &options) {
    const int p = inst.p();
    ApproxDetails out;
    out.mu = constants.mu;
    out.nu = constants.nu;
    if (options.mu_override) {
        if (*options.mu_override < 1) throw Error(ErrorKind::InvalidArgument, "mu override must be >= 1");
        out.mu = *options.mu_override;
        out.certified = false;
    }
    if (options.nu_override) {
        if (*options.nu_override < 1) throw Error(ErrorKind::InvalidArgument, "nu override must be >= 1");
        out.nu = *options.nu_override;
        out.certified = false;
    }
    ClearedMatrix cm = clear_denominators(inst.m);
    if (cm.h != constants.h || cm.degree != constants.entry_degree || p != constants.p) {
        throw Error(ErrorKind::InvalidArgument, "constants were derived for a different instance");
    }
    const int e = cm.degree;
    if (options.dyadic_alpha) {
        // |f/g - alpha| < 2^-(nu+1) and rounding adds at most 2^-(nu+3).
        Approximant raw = approximant(scheme, out.nu + 1);
        const long bits = out.nu + 2;
        Integer scaled = raw.num << bits;
        Integer g = raw.den;
        if (sgn(g) < 0) {
            g = -g;
            scaled = -scaled;
        }
        Integer rounded;
        mpz_fdiv_q(rounded.get_mpz_t(), Integer(2 * scaled + g).get_mpz_t(), Integer(2 * g).get_mpz_t());
        out.alpha = Approximant{rounded, Integer(1) << bits, out.nu, raw.depth};
    } else {
        out.alpha = approximant(scheme, out.nu);
    }
    const Integer &fa = out.alpha.num;
    const Integer &ga = out.alpha.den;
    std::vector<Integer> fpow(e + 1), gpow(e + 1);
    fpow[0] = 1;
    gpow[0] = 1;
    for (int j = 1; j <= e; ++j) {
        fpow[j] = fpow[j - 1] * fa;
        gpow[j] = gpow[j - 1] * ga;
    }
    const Integer two_mu = pow2(out.mu).get_num();
    const Integer hge = cm.h * gpow[e];
    const Integer diag = hge * two_mu;
    const Integer scale = two_mu - 1;
    IntMatrix b(p, p);
    for (int r = 0; r < p; ++r) {
        for (int s = 0; s < p; ++s) {
            // A[r, s] = g^e E_rs(f/g) = sum_j E_rs,j f^j g^(e-j).
            Integer a(0);
            const auto &coeffs = cm.e[r][s].coeffs();
            for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
                if (sgn(coeffs[j]) != 0) a += coeffs[j] * fpow[j] * gpow[e - j];
            }
            b(r, s) = -(scale * a);
            if (r == s) b(r, s) += diag;
        }
    }
    out.v = det(b);
    if (sgn(out.v) == 0) {
        throw Error(ErrorKind::InternalBoundViolation, "V = det(B) vanished; the derived constants are unsound");
    }
    out.u = diag * det(Matrix<Integer>(minor(b, 0, p - 1)));
    if (cofactor_sign(p) < 0) out.u = -out.u;
    const Integer two_c1 = pow2(constants.c1).get_num();
    out.f = two_c1 * out.u * out.v - out.v * out.v;
    out.verdict = sgn(out.f) > 0 ? Verdict::Accept : Verdict::Reject;
    return out;
}

DecisionResult decide_exact(const DecisionInstance &inst) {
    DecisionResult r;
    r.method = Method::Exact;
    r.limit = series_limit_details(inst);
    r.witness = r.limit->value;
    r.verdict = fe_sign(r.limit->value) > 0 ? Verdict::Accept : Verdict::Reject;
    return r;
}

DecisionResult decide_approx(const DecisionInstance &inst, const NumberField &field, const NewtonScheme &scheme,
                             const BoundConstants &constants, const ApproxOptions &options) {
    (void)field;
    DecisionResult r;
    r.method = Method::Approx;
    r.constants = constants;
    r.approx = decide_approx_details(inst, scheme, constants, options);
    r.verdict = r.approx->verdict;
    r.certified = r.approx->certified;
    return r;
}

NumberField instance_field(const DecisionInstance &inst) {
    for (Eigen::Index i = 0; i < inst.m.rows(); ++i)
        for (Eigen::Index j = 0; j < inst.m.cols(); ++j)
            if (inst.m(i, j).field_data()) return NumberField(inst.m(i, j).field_data());
    return NumberField::rationals();
}

namespace {

FieldMatrix real_part_of(const ComplexMatrix &m) {
    FieldMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_real()) throw Error(ErrorKind::NotReal, "complex entry in a real computation");
            out(i, j) = m(i, j).re();
        }
    }
    return out;
}

// Incremental echelon basis that also tracks how each reduced vector is
// combined from the original inputs.
class KrylovBasis {
  public:
    /// Returns coefficients gamma with w = sum_i gamma_i w_i if w depends on
    /// the vectors added so far; otherwise stores w and returns nothing.
    std::optional<std::vector<FieldElement>> add(const Vector<FieldElement> &w) {
        const std::size_t idx = count_++;
        Vector<FieldElement> v = w;
        std::vector<FieldElement> combo(idx + 1, FieldElement(0));
        combo[idx] = FieldElement(1);
        for (const auto &b : basis_) {
            if (v(b.pivot).is_zero()) continue;
            FieldElement f = v(b.pivot) / b.vec(b.pivot);
            for (Eigen::Index k = b.pivot; k < v.size(); ++k)
                if (!b.vec(k).is_zero()) v(k) -= f * b.vec(k);
            for (std::size_t j = 0; j < b.combo.size(); ++j)
                if (!b.combo[j].is_zero()) combo[j] -= f * b.combo[j];
        }
        Eigen::Index pivot = 0;
        while (pivot < v.size() && v(pivot).is_zero()) ++pivot;
        if (pivot == v.size()) {
            std::vector<FieldElement> gamma(idx);
            for (std::size_t j = 0; j < idx; ++j) gamma[j] = -combo[j];
            return gamma;
        }
        basis_.push_back({std::move(v), pivot, std::move(combo)});
        return std::nullopt;
    }

  private:
    struct Entry {
        Vector<FieldElement> vec;
        Eigen::Index pivot;
        std::vector<FieldElement> combo;
    };
    std::vector<Entry> basis_;
    std::size_t count_ = 0;
};

}  // namespace

DecisionInstance compressed_instance(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                     const FieldElement &beta) {
    if (!op.is_real() || !rho.is_real()) {
        throw Error(ErrorKind::NotReal, "compression needs a real operation and state");
    }
    check_beta(beta);
    const int n = op.dim();
    std::vector<FieldMatrix> a0;
    FieldMatrix q = zeros<FieldElement>(n, n);
    for (const auto &[key, a] : op.entries()) {
        FieldMatrix ar = real_part_of(a);
        if (key.first == 0) a0.push_back(ar);
        else if (key.first == 1) q = add(q, mul(transpose(ar), ar));
    }
    FieldMatrix qt = transpose(q);
    std::vector<FieldElement> c;
    std::vector<FieldElement> gamma;
    KrylovBasis basis;
    FieldMatrix x = real_part_of(rho.matrix());
    for (int i = 0; i <= n * n; ++i) {
        auto dep = basis.add(vec(x));
        if (dep) {
            gamma = std::move(*dep);
            break;
        }
        // tr(F_1(X)) = tr(Q X) = sum_ij Q_ji X_ij.
        FieldElement t(0);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                if (!qt(r, s).is_zero() && !x(r, s).is_zero()) t += qt(r, s) * x(r, s);
        c.push_back(t);
        FieldMatrix next = zeros<FieldElement>(n, n);
        for (const auto &a : a0) next = add(next, mul(mul(a, x), transpose(a)));
        x = std::move(next);
    }
    const int r = static_cast<int>(c.size());
    FieldMatrix m = zeros<FieldElement>(r + 2, r + 2);
    m(1, 0) = FieldElement(1);
    m(r + 1, 0) = -beta;
    for (int i = 0; i + 1 < r; ++i) m(2 + i, 1 + i) = FieldElement(1);
    for (int i = 0; i < r; ++i) {
        m(1 + i, r) = gamma[i];
        m(r + 1, 1 + i) = c[i];
    }
    std::ostringstream os;
    os << "Krylov-compressed decision matrix, dimension " << r << " of " << n * n;
    return {std::move(m), os.str()};
}

DecisionInstance process_instance(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                  const FieldElement &beta, Reduction reduction) {
    SelectiveQuantumOperation rop = op;
    DensityMatrix rrho = rho;
    if (!op.is_real() || !rho.is_real()) {
        auto r = realify(op, rho);
        rop = std::move(r.op);
        rrho = std::move(r.rho);
    }
    const int full = rop.dim() * rop.dim() + 2;
    if (reduction != Reduction::Full) {
        DecisionInstance c = compressed_instance(rop, rrho, beta);
        if (reduction == Reduction::Compressed || c.p() < full) return c;
    }
    auto dm = build_decision_matrix(rop, rrho, beta);
    return {std::move(dm.m), "decision matrix, dimension " + std::to_string(full)};
}

DecisionResult decide_process(const SelectiveQuantumOperation &op, const DensityMatrix &rho, const FieldElement &beta,
                              Method method, Reduction reduction, const ApproxOptions &options) {
    DecisionInstance inst = process_instance(op, rho, beta, reduction);
    switch (method) {
        case Method::Exact: return decide_exact(inst);
        case Method::Approx: {
            NumberField field = instance_field(inst);
            NewtonScheme scheme = default_scheme(field);
            BoundConstants constants = derive_constants(inst, field);
            return decide_approx(inst, field, scheme, constants, options);
        }
        case Method::Markov: break;
    }
    throw Error(ErrorKind::InvalidArgument, "the markov method applies to chains, not processes");
}

void check_stochastic(const FieldMatrix &a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw Error(ErrorKind::NotSquare, "transition matrix must be square and nonempty");
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        FieldElement s(0);
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (fe_sign(a(i, j)) < 0) {
                std::ostringstream os;
                os << "negative transition probability at (" << i + 1 << ", " << j + 1 << ")";
                throw Error(ErrorKind::NotStochastic, os.str());
            }
            s += a(i, j);
        }
        if (s != FieldElement(1)) {
            throw Error(ErrorKind::NotStochastic,
                        "column " + std::to_string(j + 1) + " sums to " + s.to_string() + ", not 1");
        }
    }
}

FieldElement markov_absorption(const FieldMatrix &a, int start, int target) {
    check_stochastic(a);
    const int n = static_cast<int>(a.rows());
    if (start < 0 || start >= n || target < 0 || target >= n) {
        throw Error(ErrorKind::IndexOutOfRange, "state index out of range");
    }
    std::vector<bool> absorbing(n);
    for (int j = 0; j < n; ++j) absorbing[j] = a(j, j) == FieldElement(1);
    if (!absorbing[target]) {
        throw Error(ErrorKind::NonAbsorbingChain, "target state " + std::to_string(target + 1) + " is not absorbing");
    }
    // Every state must reach an absorbing state along positive transitions.
    std::vector<bool> reaches(absorbing);
    for (bool changed = true; changed;) {
        changed = false;
        for (int j = 0; j < n; ++j) {
            if (reaches[j]) continue;
            for (int i = 0; i < n; ++i) {
                if (reaches[i] && !a(i, j).is_zero()) {
                    reaches[j] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    for (int j = 0; j < n; ++j) {
        if (!reaches[j]) {
            throw Error(ErrorKind::NonAbsorbingChain,
                        "state " + std::to_string(j + 1) + " never reaches an absorbing state");
        }
    }
    if (absorbing[start]) return FieldElement(start == target ? 1 : 0);
    FieldMatrix i_minus_b = identity<FieldElement>(n);
    for (int j = 0; j < n; ++j) {
        if (absorbing[j]) continue;
        for (int i = 0; i < n; ++i)
            if (!a(i, j).is_zero()) i_minus_b(i, j) -= a(i, j);
    }
    // Sum_t B^t[target, start] = (I - B)^{-1}[target, start].
    FieldElement num = det(minor(i_minus_b, start, target));
    FieldElement den = det(i_minus_b);
    FieldElement value = num / den;
    return (start + target) % 2 == 0 ? value : -value;
}

}  // namespace selquant
