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

#include "selquant/newton.hpp"

#include <algorithm>
#include <sstream>

#include "selquant/error.hpp"

namespace selquant {

void BivariatePoly::add_term(int i, int j, const Integer &c) {
    if (sgn(c) == 0) return;
    for (auto &t : terms_) {
        if (t.x_exp == i && t.y_exp == j) {
            t.coeff += c;
            normalize();
            return;
        }
    }
    terms_.push_back({i, j, c});
    normalize();
}

void BivariatePoly::normalize() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term &t) { return sgn(t.coeff) == 0; }),
                 terms_.end());
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) {
        return a.x_exp != b.x_exp ? a.x_exp > b.x_exp : a.y_exp > b.y_exp;
    });
}

Integer BivariatePoly::coeff(int i, int j) const {
    for (const auto &t : terms_) {
        if (t.x_exp == i && t.y_exp == j) return t.coeff;
    }
    return Integer(0);
}

Integer BivariatePoly::eval(const Integer &x, const Integer &y) const {
    Integer total(0);
    Integer px, py;
    for (const auto &t : terms_) {
        mpz_pow_ui(px.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(t.x_exp));
        mpz_pow_ui(py.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(t.y_exp));
        total += t.coeff * px * py;
    }
    return total;
}

BivariatePoly operator+(const BivariatePoly &a, const BivariatePoly &b) {
    BivariatePoly r = a;
    for (const auto &t : b.terms_) r.add_term(t.x_exp, t.y_exp, t.coeff);
    return r;
}

BivariatePoly operator-(const BivariatePoly &a, const BivariatePoly &b) {
    BivariatePoly r = a;
    for (const auto &t : b.terms_) r.add_term(t.x_exp, t.y_exp, -t.coeff);
    return r;
}

BivariatePoly BivariatePoly::shifted(int i, int j) const {
    BivariatePoly r = *this;
    for (auto &t : r.terms_) {
        t.x_exp += i;
        t.y_exp += j;
    }
    return r;
}

bool operator==(const BivariatePoly &a, const BivariatePoly &b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        const auto &s = a.terms_[k];
        const auto &t = b.terms_[k];
        if (s.x_exp != t.x_exp || s.y_exp != t.y_exp || s.coeff != t.coeff) return false;
    }
    return true;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        if (!first) os << (sgn(t.coeff) < 0 ? " - " : " + ");
        else if (sgn(t.coeff) < 0) os << "-";
        Integer m = abs(t.coeff);
        bool bare = t.x_exp == 0 && t.y_exp == 0;
        if (m != 1 || bare) os << m;
        if (t.x_exp > 0) os << (m != 1 ? "*" : "") << "x" << (t.x_exp > 1 ? "^" + std::to_string(t.x_exp) : "");
        if (t.y_exp > 0) {
            os << ((m != 1 || t.x_exp > 0) ? "*" : "") << "y" << (t.y_exp > 1 ? "^" + std::to_string(t.y_exp) : "");
        }
        first = false;
    }
    return os.str();
}

NewtonPolys build_newton_polys(const IntPolynomial &p) {
    const int d = p.degree();
    if (d < 1) {
        throw Error(ErrorKind::InvalidArgument, "Newton polynomials need deg p >= 1");
    }
    NewtonPolys out;
    BivariatePoly hom, hom_deriv;
    for (int j = 0; j <= d; ++j) {
        const Integer &pj = p.coeffs()[j];
        out.u0.add_term(j, d - j, Integer(j - 1) * pj);
        hom.add_term(j, d - j, pj);
        if (j >= 1) {
            out.u1.add_term(j - 1, d - j + 1, Integer(j) * pj);
            hom_deriv.add_term(j - 1, d - j, Integer(j) * pj);
        }
    }
    // With P(x,y) = y^d p(x/y) and P'(x,y) = y^(d-1) p'(x/y):
    // u0 = x P' - P and u1 = y P', which clears y^d from
    // x/y - p(x/y)/p'(x/y).
    if (!(out.u0 == hom_deriv.shifted(1, 0) - hom) || !(out.u1 == hom_deriv.shifted(0, 1))) {
        throw Error(ErrorKind::InvalidArgument, "Newton polynomial identity failed");
    }
    return out;
}

Rational Approximant::value() const {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Approximant reduce(Approximant a) {
    if (sgn(a.den) == 0) {
        throw Error(ErrorKind::DivisionByZero, "approximant with zero denominator");
    }
    Integer g = gcd(a.num, a.den);
    if (g != 1) {
        mpz_divexact(a.num.get_mpz_t(), a.num.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(a.den.get_mpz_t(), a.den.get_mpz_t(), g.get_mpz_t());
    }
    if (sgn(a.den) < 0) {
        a.num = -a.num;
        a.den = -a.den;
    }
    return a;
}

NewtonScheme certify_seed(const NumberField &field, const Integer &a0, const Integer &a1) {
    if (sgn(a1) == 0) {
        throw Error(ErrorKind::InvalidArgument, "seed denominator is zero");
    }
    Rational x0(a0, a1);
    x0.canonicalize();
    ratpoly::Poly p = field.minpoly().to_rational();
    ratpoly::Poly dp = ratpoly::derivative(p);
    ratpoly::Poly ddp = ratpoly::derivative(dp);
    bool derivative_ok_somewhere = false;
    RationalInterval root = field.isolating();
    for (int halvings = 1; halvings <= 64; ++halvings) {
        Rational xi = pow2(-halvings);
        root = field.refine_root(root, xi / 4);
        RationalInterval basin(root.lo - xi, root.hi + xi);
        RationalInterval d1 = ratpoly::eval(dp, basin);
        if (d1.contains_zero()) continue;
        derivative_ok_somewhere = true;
        RationalInterval d2 = ratpoly::eval(ddp, basin);
        Rational min_d1 = sgn(d1.lo) > 0 ? d1.lo : Rational(-d1.hi);
        Rational k = d2.magnitude() / (2 * min_d1);
        if (k < 1) k = 1;
        if (xi * k > Rational(1, 2)) continue;
        Rational far = std::max(abs(x0 - root.lo), abs(x0 - root.hi));
        if (far < xi) {
            return NewtonScheme{field, build_newton_polys(field.minpoly()), a0, a1, xi, k};
        }
        // Smaller radii only tighten the requirement on the seed.
        if (abs(x0 - root.midpoint()) >= xi) break;
    }
    if (!derivative_ok_somewhere) {
        throw Error(ErrorKind::DerivativeVanishes, "p' cannot be bounded away from zero near the root");
    }
    std::ostringstream os;
    os << "seed " << x0 << " is not inside a certified Newton basin";
    throw Error(ErrorKind::SeedOutsideBasin, os.str());
}

NewtonScheme default_scheme(const NumberField &field) {
    RationalInterval root = field.isolating();
    for (long bits = 2; bits <= 256; bits *= 2) {
        root = field.refine_root(root, pow2(-bits));
        Rational mid = root.midpoint();
        try {
            return certify_seed(field, mid.get_num(), mid.get_den());
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::SeedOutsideBasin) throw;
        }
    }
    throw Error(ErrorKind::SeedOutsideBasin, "no certified seed found for " + field.describe());
}

Approximant recurrence(const BivariatePoly &u0, const BivariatePoly &u1, const Integer &a0, const Integer &a1, long n,
                       ApproximantOptions options) {
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "approximant precision must be >= 0");
    }
    // n, ceil(n/2), ceil(n/4), ... down to 1.
    std::vector<long> chain;
    for (long m = n; m >= 2; m = (m + 1) / 2) chain.push_back(m);
    Approximant cur{a0, a1, std::min<long>(n, 1), 0};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        Integer f = u0.eval(cur.num, cur.den);
        Integer g = u1.eval(cur.num, cur.den);
        cur.num = std::move(f);
        cur.den = std::move(g);
        cur.precision = *it;
        cur.depth += 1;
        if (options.reduce_levels) cur = reduce(std::move(cur));
    }
    cur.precision = n;
    return cur;
}

Approximant approximant(const NewtonScheme &scheme, long n, ApproximantOptions options) {
    Approximant a = recurrence(scheme.polys.u0, scheme.polys.u1, scheme.a0, scheme.a1, n, options);
    if (sgn(a.den) == 0) {
        throw Error(ErrorKind::DerivativeVanishes, "Newton iterate hit a zero denominator");
    }
    return a;
}

}  // namespace selquant
