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

#ifndef SELQUANT_NEWTON_HPP
#define SELQUANT_NEWTON_HPP

#include <vector>

#include "selquant/numberfield.hpp"

namespace selquant {

/// Integer polynomial in two variables, stored as a list of terms.
class BivariatePoly {
  public:
    struct Term {
        int x_exp;
        int y_exp;
        Integer coeff;
    };

    BivariatePoly() = default;
    /// Adds c * x^i * y^j, merging with an existing monomial.
    void add_term(int i, int j, const Integer &c);

    const std::vector<Term> &terms() const {
        return terms_;
    }
    Integer coeff(int i, int j) const;
    Integer eval(const Integer &x, const Integer &y) const;

    friend BivariatePoly operator+(const BivariatePoly &a, const BivariatePoly &b);
    friend BivariatePoly operator-(const BivariatePoly &a, const BivariatePoly &b);
    /// Multiplies by x^i y^j.
    BivariatePoly shifted(int i, int j) const;
    friend bool operator==(const BivariatePoly &a, const BivariatePoly &b);

    std::string to_string() const;

  private:
    void normalize();
    std::vector<Term> terms_;
};

struct NewtonPolys {
    BivariatePoly u0;
    BivariatePoly u1;
};

/// Homogenized Newton map for p of degree d:
///   u0 = sum_j (j-1) p_j x^j y^(d-j),  u1 = sum_j j p_j x^(j-1) y^(d-j+1),
/// so that u0(x,y)/u1(x,y) = x/y - p(x/y)/p'(x/y). The identity is checked
/// symbolically before returning.
NewtonPolys build_newton_polys(const IntPolynomial &p);

/// (num, den) with |num/den - alpha| < 2^-precision.
struct Approximant {
    Integer num;
    Integer den;
    long precision = 0;
    /// Number of recurrence levels applied to reach this value.
    int depth = 0;

    Rational value() const;
};

/// Divides out gcd(num, den) and makes den positive.
Approximant reduce(Approximant a);

struct NewtonScheme {
    NumberField field;
    NewtonPolys polys;
    Integer a0;
    Integer a1;
    /// Basin radius: |a0/a1 - alpha| < xi <= 1/2.
    Rational xi;
    /// Contraction constant on (alpha - xi, alpha + xi); K >= 1, xi*K <= 1/2.
    Rational contraction_k;
};

/// Certifies that a0/a1 lies in a quadratic-convergence basin of alpha.
/// Halves xi from 1/2 and bounds p' and p'' on [alpha - xi, alpha + xi] by
/// interval evaluation. Throws SeedOutsideBasin, or DerivativeVanishes when
/// no tried radius keeps p' away from zero.
NewtonScheme certify_seed(const NumberField &field, const Integer &a0, const Integer &a1);

/// Certified scheme from a midpoint of a refined isolating interval.
NewtonScheme default_scheme(const NumberField &field);

struct ApproximantOptions {
    /// Keep gcd-reduced integers between levels (ratio-preserving).
    bool reduce_levels = true;
};

/// The doubling recurrence
///   f(n, c) = u_c(f(ceil(n/2), 0), f(ceil(n/2), 1)),  f(1, c) = a_c,
/// for arbitrary integer polynomials u0, u1. n = 0 gives the base pair.
Approximant recurrence(const BivariatePoly &u0, const BivariatePoly &u1, const Integer &a0, const Integer &a1, long n,
                       ApproximantOptions options = {});

/// Approximant of alpha within 2^-n, using ceil(log2 n) Newton levels.
Approximant approximant(const NewtonScheme &scheme, long n, ApproximantOptions options = {});

}  // namespace selquant

#endif
