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

#ifndef SELQUANT_POLYNOMIAL_HPP
#define SELQUANT_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "selquant/rational.hpp"

namespace selquant {

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational lo_, Rational hi_);

    Rational width() const {
        return hi - lo;
    }
    Rational midpoint() const {
        return (lo + hi) / 2;
    }
    bool contains(const Rational &x) const {
        return lo <= x && x <= hi;
    }
    bool contains_zero() const {
        return sgn(lo) <= 0 && sgn(hi) >= 0;
    }
    /// max(|lo|, |hi|)
    Rational magnitude() const;
};

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b);
RationalInterval operator*(const RationalInterval &a, const RationalInterval &b);

/// Dense univariate polynomial with integer coefficients, index = power.
/// The coefficient vector is trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// -1 for the zero polynomial.
    int degree() const {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const {
        return coeffs_.empty();
    }
    const std::vector<Integer> &coeffs() const {
        return coeffs_;
    }
    Integer coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Integer(0);
    }
    const Integer &leading() const {
        return coeffs_.back();
    }
    /// max_j |coeffs[j]|
    Integer height() const;

    IntPolynomial derivative() const;
    Rational eval(const Rational &x) const;
    std::vector<Rational> to_rational() const;

    friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) {
        return a.coeffs_ == b.coeffs_;
    }
    std::string to_string(const char *var = "x") const;

  private:
    std::vector<Integer> coeffs_;
};

/// Dense rational polynomials as plain coefficient vectors (index = power,
/// trimmed). These back the exact field arithmetic.
namespace ratpoly {

using Poly = std::vector<Rational>;

void trim(Poly &p);
int degree(const Poly &p);
Poly add(const Poly &a, const Poly &b);
Poly sub(const Poly &a, const Poly &b);
Poly mul(const Poly &a, const Poly &b);
Poly scale(const Poly &a, const Rational &c);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
Poly derivative(const Poly &p);
/// Monic gcd.
Poly gcd(Poly a, Poly b);
/// Returns (g, s) with s*a == g (mod m), g = monic gcd(a, m).
std::pair<Poly, Poly> inverse_mod(const Poly &a, const Poly &m);
Rational eval(const Poly &p, const Rational &x);
/// Horner evaluation in interval arithmetic; encloses {p(x) : x in range}.
RationalInterval eval(const Poly &p, const RationalInterval &range);
/// Sturm chain p, p', -rem(...), ... for a squarefree p.
std::vector<Poly> sturm_chain(const Poly &p);
/// Number of distinct real roots of chain[0] in the closed interval [lo, hi].
int count_roots(const std::vector<Poly> &chain, const Rational &lo, const Rational &hi);

}  // namespace ratpoly

}  // namespace selquant

#endif
