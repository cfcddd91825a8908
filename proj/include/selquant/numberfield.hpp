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

#ifndef SELQUANT_NUMBERFIELD_HPP
#define SELQUANT_NUMBERFIELD_HPP

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selquant/polynomial.hpp"

namespace selquant {

class FieldElement;

namespace detail {
struct FieldData;
}

struct FieldOptions {
    /// Search for nontrivial factors of the minimal polynomial. Off by
    /// default; without it a reducible polynomial whose extra factors vanish
    /// somewhere else is accepted, and zero tests rely on the caller.
    bool check_irreducible = false;
};

/// The real field Q[alpha], alpha the unique root of `minpoly` inside the
/// isolating interval. A cheap, immutable handle; copies share state.
class NumberField {
  public:
    /// Validates square-freeness and unique-root isolation.
    static NumberField create(IntPolynomial minpoly, RationalInterval isolating, FieldOptions options = {});

    /// x^2 - 2 on [1, 2].
    static NumberField sqrt2();
    /// x^2 - x - 1 on [1, 2].
    static NumberField golden();
    /// x^3 - 2 on [1, 3/2].
    static NumberField cbrt2();
    /// x on [-1, 1]: the rationals as a degree-1 field.
    static NumberField rationals();
    /// Looks up one of "sqrt2", "golden", "cbrt2", "rational".
    static NumberField preset(const std::string &name);

    const IntPolynomial &minpoly() const;
    const RationalInterval &isolating() const;
    int degree() const;
    /// True when the isolating interval has collapsed onto a rational root.
    bool rational_root() const;

    /// An interval around alpha of width <= `width`, nested in the isolating
    /// interval. Pure bisection on the sign of the minimal polynomial.
    RationalInterval refine_root(const Rational &width) const;
    /// Continues bisection from an interval already known to hold alpha.
    RationalInterval refine_root(RationalInterval start, const Rational &width) const;
    /// Rational upper bound on |alpha| taken from the isolating interval.
    Rational alpha_abs_upper() const;
    double alpha_approx() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;
    FieldElement constant(const Rational &c) const;
    FieldElement element(std::vector<Rational> coeffs) const;

    bool operator==(const NumberField &other) const;
    bool operator!=(const NumberField &other) const {
        return !(*this == other);
    }

    std::string describe() const;

    const std::shared_ptr<const detail::FieldData> &data() const {
        return data_;
    }
    explicit NumberField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {
    }

  private:
    std::shared_ptr<const detail::FieldData> data_;
};

/// Element sum_j c_j alpha^j of a number field.
///
/// A default-constructed or integer-constructed element carries no field and
/// acts as a rational constant; it adopts the field of whatever it is
/// combined with. This keeps the type usable as an Eigen scalar, where
/// Scalar(0) and Scalar(1) appear in Zero() and Identity().
class FieldElement {
  public:
    FieldElement() : coeffs_(1) {
    }
    FieldElement(int c) : coeffs_{Rational(c)} {  // NOLINT(google-explicit-constructor)
    }
    FieldElement(long c) : coeffs_{Rational(c)} {  // NOLINT(google-explicit-constructor)
    }
    explicit FieldElement(const Rational &c) : coeffs_{c} {
        coeffs_.front().canonicalize();
    }
    FieldElement(std::shared_ptr<const detail::FieldData> field, std::vector<Rational> coeffs);

    /// Null when the element is a plain rational constant.
    const std::shared_ptr<const detail::FieldData> &field_data() const {
        return field_;
    }
    std::optional<NumberField> field() const;
    /// Length equals the field degree, or 1 for a field-less constant.
    const std::vector<Rational> &coeffs() const {
        return coeffs_;
    }
    /// Coefficient of alpha^j (zero beyond the stored length).
    Rational coeff(int j) const;

    bool is_zero() const;
    /// True when only the constant coefficient may be nonzero.
    bool is_rational() const;
    /// Constant coefficient; meaningful when is_rational().
    const Rational &rational_value() const {
        return coeffs_.front();
    }

    FieldElement inverse() const;
    double to_double() const;
    /// Exact value of sum_j c_j x^j at a rational x.
    Rational eval_at(const Rational &x) const;
    /// Enclosure of the element's value given an interval that holds alpha.
    RationalInterval enclose(const RationalInterval &alpha_range) const;

    FieldElement &operator+=(const FieldElement &b);
    FieldElement &operator-=(const FieldElement &b);
    FieldElement &operator*=(const FieldElement &b);
    FieldElement &operator/=(const FieldElement &b);

    friend FieldElement operator+(FieldElement a, const FieldElement &b) {
        return a += b;
    }
    friend FieldElement operator-(FieldElement a, const FieldElement &b) {
        return a -= b;
    }
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator/(FieldElement a, const FieldElement &b) {
        return a /= b;
    }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement &a, const FieldElement &b);
    friend bool operator!=(const FieldElement &a, const FieldElement &b) {
        return !(a == b);
    }

    std::string to_string() const;

  private:
    std::shared_ptr<const detail::FieldData> field_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const FieldElement &a) {
    return a.is_zero();
}

/// Exact sign of the real number the element represents. Zero exactly when
/// every coefficient vanishes; otherwise alpha's interval is refined until
/// the element's interval enclosure excludes zero.
int fe_sign(const FieldElement &a);

/// Square root inside the element's field, if one exists there. Candidates
/// are reconstructed from floating-point conjugates and verified exactly.
std::optional<FieldElement> field_sqrt(const FieldElement &a);

/// Element of Q[alpha][i]: re + i*im with re, im real field elements.
class ComplexFieldElement {
  public:
    ComplexFieldElement() = default;
    ComplexFieldElement(int c) : re_(c) {  // NOLINT(google-explicit-constructor)
    }
    ComplexFieldElement(FieldElement re) : re_(std::move(re)) {  // NOLINT(google-explicit-constructor)
    }
    ComplexFieldElement(FieldElement re, FieldElement im) : re_(std::move(re)), im_(std::move(im)) {
    }

    const FieldElement &re() const {
        return re_;
    }
    const FieldElement &im() const {
        return im_;
    }
    bool is_zero() const {
        return re_.is_zero() && im_.is_zero();
    }
    bool is_real() const {
        return im_.is_zero();
    }
    ComplexFieldElement conj() const {
        return ComplexFieldElement(re_, -im_);
    }
    /// re^2 + im^2
    FieldElement norm2() const;
    ComplexFieldElement inverse() const;
    std::complex<double> to_complex() const {
        return {re_.to_double(), im_.to_double()};
    }

    ComplexFieldElement &operator+=(const ComplexFieldElement &b);
    ComplexFieldElement &operator-=(const ComplexFieldElement &b);
    ComplexFieldElement &operator*=(const ComplexFieldElement &b);
    ComplexFieldElement &operator/=(const ComplexFieldElement &b);

    friend ComplexFieldElement operator+(ComplexFieldElement a, const ComplexFieldElement &b) {
        return a += b;
    }
    friend ComplexFieldElement operator-(ComplexFieldElement a, const ComplexFieldElement &b) {
        return a -= b;
    }
    friend ComplexFieldElement operator*(const ComplexFieldElement &a, const ComplexFieldElement &b);
    friend ComplexFieldElement operator/(ComplexFieldElement a, const ComplexFieldElement &b) {
        return a /= b;
    }
    ComplexFieldElement operator-() const {
        return ComplexFieldElement(-re_, -im_);
    }
    friend bool operator==(const ComplexFieldElement &a, const ComplexFieldElement &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexFieldElement &a, const ComplexFieldElement &b) {
        return !(a == b);
    }

    std::string to_string() const;

  private:
    FieldElement re_;
    FieldElement im_;
};

inline bool is_zero(const ComplexFieldElement &a) {
    return a.is_zero();
}
inline ComplexFieldElement conj(const ComplexFieldElement &a) {
    return a.conj();
}
inline FieldElement conj(const FieldElement &a) {
    return a;
}

/// Mahler's lower bound on |g(alpha)| for integer polynomials f, g with
/// f(alpha) = 0 != g(alpha):
///
///   1 / ((d_f + d_g - 1)! * |f|^d_g * |g|^(d_f - 1) * (U^(d_f-1) + ... + U + 1))
///
/// where |.| is the max-coefficient height and U >= |alpha|. The value only
/// shrinks as U, the heights or d_g grow, so upper envelopes may be passed
/// through `mahler_bound_envelope`.
Rational mahler_bound(const IntPolynomial &f, const IntPolynomial &g, const Rational &alpha_abs_upper);
Rational mahler_bound_envelope(const IntPolynomial &f, int g_degree, const Integer &g_height,
                               const Rational &alpha_abs_upper);

/// Perturbation bound for a quotient of polynomials u/v of degree <= d
/// with |v(0)| >= delta: for |z| <= epsilon we have |v(z)| >= delta/2 and
/// |u(0)/v(0) - u(z)/v(z)| <= epsilon * errcoef.
struct PerturbationBound {
    Rational epsilon;
    Rational errcoef;
};

PerturbationBound rational_perturbation_bound(const IntPolynomial &u, const IntPolynomial &v, const Rational &delta);
/// Same bound from degree and height envelopes (heights may be real bounds).
PerturbationBound rational_perturbation_bound(int degree, const Rational &height_u, const Rational &height_v,
                                              const Rational &delta);

}  // namespace selquant

namespace Eigen {

template <>
struct NumTraits<selquant::FieldElement> : GenericNumTraits<selquant::FieldElement> {
    typedef selquant::FieldElement Real;
    typedef selquant::FieldElement NonInteger;
    typedef selquant::FieldElement Nested;
    typedef selquant::FieldElement Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 128,
        MulCost = 512
    };
    static inline int digits10() {
        return 0;
    }
};

template <>
struct NumTraits<selquant::ComplexFieldElement> : GenericNumTraits<selquant::ComplexFieldElement> {
    typedef selquant::ComplexFieldElement Real;
    typedef selquant::ComplexFieldElement NonInteger;
    typedef selquant::ComplexFieldElement Nested;
    typedef selquant::ComplexFieldElement Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 256,
        MulCost = 2048
    };
    static inline int digits10() {
        return 0;
    }
};

}  // namespace Eigen

#endif
