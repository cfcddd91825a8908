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

#ifndef SELQUANT_LINALG_HPP
#define SELQUANT_LINALG_HPP

#include <Eigen/Core>
#include <type_traits>
#include <vector>

#include "selquant/error.hpp"
#include "selquant/numberfield.hpp"

namespace selquant {

/// Univariate polynomial in z with number-field coefficients.
class PolyOverField {
  public:
    PolyOverField() = default;
    PolyOverField(int c);  // NOLINT(google-explicit-constructor)
    PolyOverField(FieldElement c);  // NOLINT(google-explicit-constructor)
    explicit PolyOverField(std::vector<FieldElement> coeffs);

    /// z as a polynomial, optionally tagged with a field.
    static PolyOverField z();

    /// -1 for the zero polynomial.
    int degree() const {
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const {
        return c_.empty();
    }
    const std::vector<FieldElement> &coeffs() const {
        return c_;
    }
    FieldElement coeff(int k) const;
    FieldElement eval(const FieldElement &z) const;
    /// Coefficients of p(1 - x) in powers of x.
    PolyOverField shift_one_minus() const;

    PolyOverField &operator+=(const PolyOverField &b);
    PolyOverField &operator-=(const PolyOverField &b);
    PolyOverField &operator*=(const PolyOverField &b);
    /// Exact division; throws InvalidArgument if b does not divide.
    PolyOverField &operator/=(const PolyOverField &b);
    friend PolyOverField operator+(PolyOverField a, const PolyOverField &b) {
        return a += b;
    }
    friend PolyOverField operator-(PolyOverField a, const PolyOverField &b) {
        return a -= b;
    }
    friend PolyOverField operator*(const PolyOverField &a, const PolyOverField &b);
    friend PolyOverField operator/(PolyOverField a, const PolyOverField &b) {
        return a /= b;
    }
    PolyOverField operator-() const;
    friend bool operator==(const PolyOverField &a, const PolyOverField &b);
    friend bool operator!=(const PolyOverField &a, const PolyOverField &b) {
        return !(a == b);
    }

    std::string to_string() const;

  private:
    void trim();
    std::vector<FieldElement> c_;
};

inline bool is_zero(const PolyOverField &p) {
    return p.is_zero();
}
inline const Rational &conj(const Rational &q) {
    return q;
}

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;
using FieldMatrix = Matrix<FieldElement>;
using ComplexMatrix = Matrix<ComplexFieldElement>;
using PolyMatrix = Matrix<PolyOverField>;

template <typename S>
Matrix<S> zeros(Eigen::Index r, Eigen::Index c) {
    return Matrix<S>::Constant(r, c, S(0));
}

template <typename S>
Matrix<S> identity(Eigen::Index n) {
    Matrix<S> m = zeros<S>(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

/// (A (x) B)[i0*rb + i1, j0*cb + j1] = A[i0, j0] * B[i1, j1].
template <typename S>
Matrix<S> kron(const Matrix<S> &a, const Matrix<S> &b) {
    const Eigen::Index rb = b.rows(), cb = b.cols();
    Matrix<S> out = zeros<S>(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index i0 = 0; i0 < a.rows(); ++i0) {
        for (Eigen::Index j0 = 0; j0 < a.cols(); ++j0) {
            if (is_zero(a(i0, j0))) continue;
            for (Eigen::Index i1 = 0; i1 < rb; ++i1) {
                for (Eigen::Index j1 = 0; j1 < cb; ++j1) {
                    if (is_zero(b(i1, j1))) continue;
                    out(i0 * rb + i1, j0 * cb + j1) = a(i0, j0) * b(i1, j1);
                }
            }
        }
    }
    return out;
}

/// Row-major stacking: vec(A)[i*n + j] = A[i, j].
template <typename S>
Vector<S> vec(const Matrix<S> &a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, "vec needs a square matrix");
    }
    const Eigen::Index n = a.rows();
    Vector<S> v(n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            v(i * n + j) = a(i, j);
        }
    }
    return v;
}

/// Inverse of vec for a vector of length n^2.
template <typename S>
Matrix<S> unvec(const Vector<S> &v, Eigen::Index n) {
    if (v.size() != n * n) {
        throw Error(ErrorKind::DimensionMismatch, "unvec length is not n^2");
    }
    Matrix<S> a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = v(i * n + j);
        }
    }
    return a;
}

/// Removes row i and column j (0-based).
template <typename S>
Matrix<S> minor(const Matrix<S> &a, Eigen::Index i, Eigen::Index j) {
    if (a.rows() < 2 || a.cols() < 2) {
        throw Error(ErrorKind::IndexOutOfRange, "minor of a matrix with fewer than 2 rows or columns");
    }
    if (i < 0 || i >= a.rows() || j < 0 || j >= a.cols()) {
        throw Error(ErrorKind::IndexOutOfRange, "minor index out of range");
    }
    Matrix<S> out(a.rows() - 1, a.cols() - 1);
    for (Eigen::Index r = 0, rr = 0; r < a.rows(); ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < a.cols(); ++c) {
            if (c == j) continue;
            out(rr, cc++) = a(r, c);
        }
        ++rr;
    }
    return out;
}

template <typename S>
Matrix<S> transpose(const Matrix<S> &a) {
    Matrix<S> t(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// Conjugate transpose.
template <typename S>
Matrix<S> dagger(const Matrix<S> &a) {
    Matrix<S> t(a.cols(), a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) t(j, i) = conj(a(i, j));
    return t;
}

/// Entrywise complex conjugate.
template <typename S>
Matrix<S> conjugate(const Matrix<S> &a) {
    Matrix<S> t(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) t(i, j) = conj(a(i, j));
    return t;
}

template <typename S>
S trace(const Matrix<S> &a) {
    S t(0);
    for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

/// Product that skips structurally zero entries of the left factor.
template <typename S>
Matrix<S> mul(const Matrix<S> &a, const Matrix<S> &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    }
    Matrix<S> out = zeros<S>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                if (is_zero(b(k, j))) continue;
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

template <typename S>
Matrix<S> add(Matrix<S> a, const Matrix<S> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    }
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(b(i, j))) a(i, j) += b(i, j);
    return a;
}

template <typename S>
Matrix<S> scaled(Matrix<S> a, const S &c) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) a(i, j) = a(i, j) * c;
    return a;
}

template <typename S>
bool is_zero_matrix(const Matrix<S> &a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <typename S>
bool equal(const Matrix<S> &a, const Matrix<S> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

namespace detail {

template <typename S>
struct is_field_scalar : std::false_type {};
template <>
struct is_field_scalar<Rational> : std::true_type {};
template <>
struct is_field_scalar<FieldElement> : std::true_type {};
template <>
struct is_field_scalar<ComplexFieldElement> : std::true_type {};

inline Integer exact_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline PolyOverField exact_div(const PolyOverField &a, const PolyOverField &b) {
    return a / b;
}

template <typename S>
S det_gauss(Matrix<S> a) {
    const Eigen::Index n = a.rows();
    S result(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        while (piv < n && is_zero(a(piv, k))) ++piv;
        if (piv == n) return S(0);
        if (piv != k) {
            a.row(piv).swap(a.row(k));
            result = -result;
        }
        result *= a(k, k);
        S inv = S(1) / a(k, k);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k))) continue;
            S f = a(i, k) * inv;
            for (Eigen::Index j = k + 1; j < n; ++j) {
                if (!is_zero(a(k, j))) a(i, j) -= f * a(k, j);
            }
        }
    }
    return result;
}

// Fraction-free elimination: after step k every entry is a (k+1)-minor, so
// the division by the previous pivot is exact.
template <typename S>
S det_bareiss(Matrix<S> a) {
    const Eigen::Index n = a.rows();
    if (n == 0) return S(1);
    S prev(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index piv = k;
        while (piv < n && is_zero(a(piv, k))) ++piv;
        if (piv == n) return S(0);
        if (piv != k) {
            a.row(piv).swap(a.row(k));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                S t = a(k, k) * a(i, j);
                if (!is_zero(a(i, k)) && !is_zero(a(k, j))) t -= a(i, k) * a(k, j);
                a(i, j) = exact_div(t, prev);
            }
        }
        prev = a(k, k);
    }
    S d = a(n - 1, n - 1);
    return negate ? S(-d) : d;
}

}  // namespace detail

/// Exact determinant. Field scalars use Gaussian elimination; integers and
/// polynomials use fraction-free elimination.
template <typename S>
S det(const Matrix<S> &a) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
    }
    if constexpr (detail::is_field_scalar<S>::value) {
        return detail::det_gauss(a);
    } else {
        return detail::det_bareiss(a);
    }
}

/// (A^t)[r, c] by repeated matrix-vector products (0-based indices).
template <typename S>
S mat_pow_entry(const Matrix<S> &a, long t, Eigen::Index r, Eigen::Index c) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, "matrix power of a non-square matrix");
    }
    if (t < 0 || r < 0 || c < 0 || r >= a.rows() || c >= a.cols()) {
        throw Error(ErrorKind::IndexOutOfRange, "mat_pow_entry argument out of range");
    }
    Vector<S> v = Vector<S>::Constant(a.rows(), S(0));
    v(c) = S(1);
    for (long s = 0; s < t; ++s) {
        Vector<S> w = Vector<S>::Constant(a.rows(), S(0));
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                if (!is_zero(a(i, k)) && !is_zero(v(k))) w(i) += a(i, k) * v(k);
            }
        }
        v = std::move(w);
    }
    return v(r);
}

/// Characteristic polynomial det(xI - A), coefficients indexed by power.
/// Hessenberg reduction followed by the standard recurrence; field scalars.
template <typename S>
std::vector<S> charpoly(Matrix<S> h) {
    static_assert(detail::is_field_scalar<S>::value, "charpoly needs a field scalar");
    if (h.rows() != h.cols()) {
        throw Error(ErrorKind::NotSquare, "charpoly of a non-square matrix");
    }
    const Eigen::Index n = h.rows();
    for (Eigen::Index m = 1; m + 1 < n; ++m) {
        Eigen::Index piv = m;
        while (piv < n && is_zero(h(piv, m - 1))) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            h.row(piv).swap(h.row(m));
            h.col(piv).swap(h.col(m));
        }
        S inv = S(1) / h(m, m - 1);
        for (Eigen::Index i = m + 1; i < n; ++i) {
            if (is_zero(h(i, m - 1))) continue;
            S u = h(i, m - 1) * inv;
            for (Eigen::Index j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
            for (Eigen::Index j = 0; j < n; ++j) h(j, m) += u * h(j, i);
        }
    }
    // p[k] = charpoly of the leading k x k block.
    std::vector<std::vector<S>> p(n + 1);
    p[0] = {S(1)};
    for (Eigen::Index m = 1; m <= n; ++m) {
        std::vector<S> cur(m + 1, S(0));
        for (Eigen::Index k = 0; k < m; ++k) {
            cur[k + 1] += p[m - 1][k];
            cur[k] -= h(m - 1, m - 1) * p[m - 1][k];
        }
        S t(1);
        for (Eigen::Index i = 1; i < m; ++i) {
            t = t * h(m - i, m - i - 1);
            if (is_zero(t)) break;
            S f = t * h(m - i - 1, m - 1);
            if (is_zero(f)) continue;
            for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] -= f * p[m - i - 1][k];
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

/// Floating-point approximation of a complex field matrix.
Eigen::MatrixXcd to_complex_double(const ComplexMatrix &a);
Eigen::MatrixXcd to_complex_double(const FieldMatrix &a);

/// Largest eigenvalue modulus, from a dense complex eigen-solver. A
/// validation aid only: never used on the exact decision path. Throws
/// NoConvergence if the solver fails or its dominant eigenpair residual
/// exceeds tol times the matrix norm.
double spectral_radius_estimate(const Eigen::MatrixXcd &a, double tol = 1e-9);

}  // namespace selquant

namespace Eigen {

template <>
struct NumTraits<selquant::PolyOverField> : GenericNumTraits<selquant::PolyOverField> {
    typedef selquant::PolyOverField Real;
    typedef selquant::PolyOverField NonInteger;
    typedef selquant::PolyOverField Nested;
    typedef selquant::PolyOverField Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 1024,
        MulCost = 8192
    };
    static inline int digits10() {
        return 0;
    }
};

}  // namespace Eigen

#endif
