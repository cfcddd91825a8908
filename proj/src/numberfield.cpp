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

#include "selquant/numberfield.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "selquant/error.hpp"

namespace selquant {

namespace detail {

struct FieldData {
    IntPolynomial minpoly;
    ratpoly::Poly minpoly_q;
    std::vector<ratpoly::Poly> sturm;
    RationalInterval isolating;
    int degree = 0;
    bool rational_root = false;
    int sign_at_lo = 0;
    // reduction[k] = x^(degree + k) mod minpoly, padded to `degree` coefficients.
    std::vector<std::vector<Rational>> reduction;
    double alpha_approx = 0.0;
};

}  // namespace detail

using detail::FieldData;

namespace {

// ---------------------------------------------------------------------------
// Irreducibility (Kronecker's method). Only used when explicitly requested.

std::vector<Integer> positive_divisors(const Integer &n_in) {
    Integer n = abs(n_in);
    if (n > Integer("1000000000000")) {
        throw Error(ErrorKind::InvalidArgument, "irreducibility check: coefficient too large to factor");
    }
    std::vector<Integer> small, large;
    for (Integer k = 1; k * k <= n; ++k) {
        if (n % k == 0) {
            small.push_back(k);
            if (k * k != n) {
                large.push_back(n / k);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool divides_exactly(const ratpoly::Poly &q, const ratpoly::Poly &p) {
    return ratpoly::divmod(p, q).second.empty();
}

// Lagrange interpolation through (xs[i], ys[i]).
ratpoly::Poly interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys) {
    ratpoly::Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ratpoly::Poly basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = ratpoly::mul(basis, ratpoly::Poly{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result = ratpoly::add(result, ratpoly::scale(basis, ys[i] / denom));
    }
    return result;
}

bool has_factor_of_degree(const IntPolynomial &p, int k) {
    const ratpoly::Poly pq = p.to_rational();
    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> choices;
    long probe = 0;
    while (static_cast<int>(xs.size()) <= k) {
        Rational x(probe);
        Rational v = p.eval(x);
        probe = probe <= 0 ? -probe + 1 : -probe;
        if (sgn(v) == 0) {
            return true;  // rational root, linear factor
        }
        xs.push_back(x);
        std::vector<Integer> opts;
        for (const auto &dv : positive_divisors(v.get_num())) {
            opts.push_back(dv);
            opts.push_back(-dv);
        }
        choices.push_back(std::move(opts));
    }
    std::size_t total = 1;
    for (const auto &c : choices) {
        total *= c.size();
        if (total > 2000000) {
            throw Error(ErrorKind::InvalidArgument, "irreducibility check: search space too large");
        }
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    for (std::size_t it = 0; it < total; ++it) {
        std::size_t r = it;
        std::vector<Rational> ys;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            ys.emplace_back(choices[i][r % choices[i].size()]);
            r /= choices[i].size();
        }
        ratpoly::Poly q = interpolate(xs, ys);
        if (ratpoly::degree(q) != k) continue;
        if (divides_exactly(q, pq)) {
            return true;
        }
    }
    return false;
}

bool is_reducible(const IntPolynomial &p) {
    int d = p.degree();
    if (d <= 1) {
        return false;
    }
    if (sgn(p.coeff(0)) == 0) {
        return true;
    }
    for (int k = 1; k <= d / 2; ++k) {
        if (has_factor_of_degree(p, k)) {
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------

bool same_field(const std::shared_ptr<const FieldData> &a, const std::shared_ptr<const FieldData> &b) {
    if (a == b) {
        return true;
    }
    if (!(a->minpoly == b->minpoly)) {
        return false;
    }
    Rational lo = a->isolating.lo > b->isolating.lo ? a->isolating.lo : b->isolating.lo;
    Rational hi = a->isolating.hi < b->isolating.hi ? a->isolating.hi : b->isolating.hi;
    if (lo > hi) {
        return false;
    }
    return ratpoly::count_roots(a->sturm, lo, hi) >= 1;
}

const std::shared_ptr<const FieldData> &common_field(const std::shared_ptr<const FieldData> &a,
                                                     const std::shared_ptr<const FieldData> &b) {
    if (!a) return b;
    if (!b) return a;
    if (!same_field(a, b)) {
        throw Error(ErrorKind::FieldMismatch, "elements belong to different number fields");
    }
    return a;
}

RationalInterval bisect(const FieldData &f, RationalInterval range, const Rational &width) {
    if (f.rational_root) {
        return f.isolating;
    }
    while (range.width() > width) {
        Rational m = range.midpoint();
        int s = sgn(ratpoly::eval(f.minpoly_q, m));
        if (s == 0) {
            return RationalInterval(m, m);
        }
        if (s == f.sign_at_lo) {
            range.lo = m;
        } else {
            range.hi = m;
        }
    }
    return range;
}

}  // namespace

// ---------------------------------------------------------------------------
// NumberField

NumberField NumberField::create(IntPolynomial minpoly, RationalInterval isolating, FieldOptions options) {
    if (minpoly.degree() < 1) {
        throw Error(ErrorKind::InvalidArgument, "minimal polynomial must be nonconstant");
    }
    auto data = std::make_shared<FieldData>();
    data->minpoly_q = minpoly.to_rational();
    ratpoly::Poly g = ratpoly::gcd(data->minpoly_q, ratpoly::derivative(data->minpoly_q));
    if (ratpoly::degree(g) > 0) {
        throw Error(ErrorKind::NotSquareFree, minpoly.to_string() + " shares a factor with its derivative");
    }
    data->sturm = ratpoly::sturm_chain(data->minpoly_q);
    int roots = ratpoly::count_roots(data->sturm, isolating.lo, isolating.hi);
    if (roots != 1) {
        std::ostringstream os;
        os << "[" << isolating.lo << ", " << isolating.hi << "] holds " << roots << " roots of "
           << minpoly.to_string();
        throw Error(ErrorKind::NotIsolating, os.str());
    }
    if (options.check_irreducible && is_reducible(minpoly)) {
        throw Error(ErrorKind::Reducible, minpoly.to_string() + " factors over Q");
    }
    data->degree = minpoly.degree();
    int s_lo = sgn(ratpoly::eval(data->minpoly_q, isolating.lo));
    int s_hi = sgn(ratpoly::eval(data->minpoly_q, isolating.hi));
    if (s_lo == 0) {
        data->rational_root = true;
        isolating = RationalInterval(isolating.lo, isolating.lo);
    } else if (s_hi == 0) {
        data->rational_root = true;
        isolating = RationalInterval(isolating.hi, isolating.hi);
    }
    data->sign_at_lo = s_lo;
    data->isolating = isolating;
    data->minpoly = std::move(minpoly);

    const int d = data->degree;
    const ratpoly::Poly &p = data->minpoly_q;
    if (d >= 2) {
        // x^d = -(p_0 + ... + p_{d-1} x^{d-1}) / p_d, then shift upward.
        std::vector<Rational> cur(d);
        for (int i = 0; i < d; ++i) {
            cur[i] = -p[i] / p[d];
        }
        data->reduction.push_back(cur);
        for (int k = 1; k <= d - 2; ++k) {
            std::vector<Rational> next(d);
            Rational top = cur[d - 1];
            for (int i = d - 1; i >= 1; --i) {
                next[i] = cur[i - 1];
            }
            next[0] = Rational(0);
            for (int i = 0; i < d; ++i) {
                next[i] += top * data->reduction[0][i];
            }
            data->reduction.push_back(next);
            cur = std::move(next);
        }
    }
    RationalInterval fine = bisect(*data, data->isolating, pow2(-64));
    data->alpha_approx = fine.midpoint().get_d();
    return NumberField(std::move(data));
}

NumberField NumberField::sqrt2() {
    static const NumberField f = create(IntPolynomial{-2, 0, 1}, RationalInterval(Rational(1), Rational(2)));
    return f;
}

NumberField NumberField::golden() {
    static const NumberField f = create(IntPolynomial{-1, -1, 1}, RationalInterval(Rational(1), Rational(2)));
    return f;
}

NumberField NumberField::cbrt2() {
    static const NumberField f = create(IntPolynomial{-2, 0, 0, 1}, RationalInterval(Rational(1), Rational(3, 2)));
    return f;
}

NumberField NumberField::rationals() {
    static const NumberField f = create(IntPolynomial{0, 1}, RationalInterval(Rational(-1), Rational(1)));
    return f;
}

NumberField NumberField::preset(const std::string &name) {
    if (name == "sqrt2") return sqrt2();
    if (name == "golden") return golden();
    if (name == "cbrt2") return cbrt2();
    if (name == "rational" || name == "rationals") return rationals();
    throw Error(ErrorKind::ParseError, "unknown field preset '" + name + "'");
}

const IntPolynomial &NumberField::minpoly() const {
    return data_->minpoly;
}

const RationalInterval &NumberField::isolating() const {
    return data_->isolating;
}

int NumberField::degree() const {
    return data_->degree;
}

bool NumberField::rational_root() const {
    return data_->rational_root;
}

RationalInterval NumberField::refine_root(const Rational &width) const {
    if (sgn(width) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "refine_root needs a positive width");
    }
    return bisect(*data_, data_->isolating, width);
}

RationalInterval NumberField::refine_root(RationalInterval start, const Rational &width) const {
    return bisect(*data_, std::move(start), width);
}

Rational NumberField::alpha_abs_upper() const {
    return data_->isolating.magnitude();
}

double NumberField::alpha_approx() const {
    return data_->alpha_approx;
}

FieldElement NumberField::zero() const {
    return FieldElement(data_, {});
}

FieldElement NumberField::one() const {
    return FieldElement(data_, {Rational(1)});
}

FieldElement NumberField::generator() const {
    return FieldElement(data_, {Rational(0), Rational(1)});
}

FieldElement NumberField::constant(const Rational &c) const {
    return FieldElement(data_, {c});
}

FieldElement NumberField::element(std::vector<Rational> coeffs) const {
    return FieldElement(data_, std::move(coeffs));
}

bool NumberField::operator==(const NumberField &other) const {
    return same_field(data_, other.data_);
}

std::string NumberField::describe() const {
    std::ostringstream os;
    os << "Q[a], a root of " << data_->minpoly.to_string() << " in [" << data_->isolating.lo << ", "
       << data_->isolating.hi << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::shared_ptr<const FieldData> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto &c : coeffs_) c.canonicalize();
    if (!field_) {
        if (coeffs_.size() > 1) {
            throw Error(ErrorKind::InvalidArgument, "field-less element with non-constant coefficients");
        }
        coeffs_.resize(1);
        return;
    }
    const int d = field_->degree;
    if (static_cast<int>(coeffs_.size()) > d) {
        auto [q, r] = ratpoly::divmod(coeffs_, field_->minpoly_q);
        coeffs_ = std::move(r);
    }
    coeffs_.resize(d);
}

std::optional<NumberField> FieldElement::field() const {
    if (!field_) return std::nullopt;
    return NumberField(field_);
}

Rational FieldElement::coeff(int j) const {
    return j >= 0 && j < static_cast<int>(coeffs_.size()) ? coeffs_[j] : Rational(0);
}

bool FieldElement::is_zero() const {
    for (const auto &c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) != 0) return false;
    }
    return true;
}

FieldElement &FieldElement::operator+=(const FieldElement &b) {
    if (!b.field_) {
        coeffs_[0] += b.coeffs_[0];
        return *this;
    }
    if (!field_) {
        Rational c = coeffs_[0];
        field_ = b.field_;
        coeffs_ = b.coeffs_;
        coeffs_[0] += c;
        return *this;
    }
    common_field(field_, b.field_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] += b.coeffs_[j];
    }
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &b) {
    if (!b.field_) {
        coeffs_[0] -= b.coeffs_[0];
        return *this;
    }
    if (!field_) {
        Rational c = coeffs_[0];
        field_ = b.field_;
        coeffs_.assign(b.coeffs_.size(), Rational(0));
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            coeffs_[j] = -b.coeffs_[j];
        }
        coeffs_[0] += c;
        return *this;
    }
    common_field(field_, b.field_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] -= b.coeffs_[j];
    }
    return *this;
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    if (!a.field_ || !b.field_) {
        const FieldElement &scalar = a.field_ ? b : a;
        const FieldElement &other = a.field_ ? a : b;
        FieldElement r = other;
        const Rational &c = scalar.coeffs_[0];
        if (sgn(c) == 0) {
            for (auto &x : r.coeffs_) x = 0;
            return r;
        }
        for (auto &x : r.coeffs_) {
            if (sgn(x) != 0) x *= c;
        }
        return r;
    }
    const auto &field = common_field(a.field_, b.field_);
    const int d = field->degree;
    if (a.is_zero() || b.is_zero()) {
        return FieldElement(field, {});
    }
    if (d == 1) {
        return FieldElement(field, {a.coeffs_[0] * b.coeffs_[0]});
    }
    std::vector<Rational> prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + d);
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (sgn(prod[k]) == 0) continue;
        const auto &red = field->reduction[k - d];
        for (int i = 0; i < d; ++i) {
            if (sgn(red[i]) != 0) out[i] += prod[k] * red[i];
        }
    }
    FieldElement r;
    r.field_ = field;
    r.coeffs_ = std::move(out);
    return r;
}

FieldElement &FieldElement::operator*=(const FieldElement &b) {
    *this = *this * b;
    return *this;
}

FieldElement &FieldElement::operator/=(const FieldElement &b) {
    *this = *this * b.inverse();
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
    }
    if (is_rational()) {
        FieldElement r = *this;
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    auto [g, s] = ratpoly::inverse_mod(coeffs_, field_->minpoly_q);
    if (ratpoly::degree(g) != 0) {
        throw Error(ErrorKind::Reducible,
                    "element shares a factor with the minimal polynomial " + field_->minpoly.to_string());
    }
    return FieldElement(field_, std::move(s));
}

bool operator==(const FieldElement &a, const FieldElement &b) {
    if (a.field_ && b.field_) {
        common_field(a.field_, b.field_);
    }
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t j = 0; j < n; ++j) {
        if (a.coeff(static_cast<int>(j)) != b.coeff(static_cast<int>(j))) return false;
    }
    return true;
}

double FieldElement::to_double() const {
    if (!field_) {
        return coeffs_[0].get_d();
    }
    long double x = field_->alpha_approx;
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + static_cast<long double>(it->get_d());
    }
    return static_cast<double>(acc);
}

Rational FieldElement::eval_at(const Rational &x) const {
    return ratpoly::eval(coeffs_, x);
}

RationalInterval FieldElement::enclose(const RationalInterval &alpha_range) const {
    return ratpoly::eval(coeffs_, alpha_range);
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational &c = coeffs_[j];
        if (sgn(c) == 0) continue;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        Rational m = abs(c);
        if (j == 0) {
            os << m;
        } else {
            if (m != 1) os << m << "*";
            os << "a";
            if (j >= 2) os << "^" << j;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

int fe_sign(const FieldElement &a) {
    if (a.is_zero()) {
        return 0;
    }
    if (a.is_rational()) {
        return sgn(a.rational_value());
    }
    const FieldData &f = *a.field_data();
    if (f.rational_root) {
        return sgn(a.eval_at(f.isolating.lo));
    }
    NumberField field(a.field_data());
    RationalInterval range = f.isolating;
    Rational base = range.width();
    for (long bits = 8;; bits *= 2) {
        RationalInterval enc = a.enclose(range);
        if (sgn(enc.lo) > 0) return 1;
        if (sgn(enc.hi) < 0) return -1;
        range = field.refine_root(range, base * pow2(-bits));
        if (range.width() == 0) {
            return sgn(a.eval_at(range.lo));
        }
    }
}

namespace {

std::optional<Rational> exact_rational_sqrt(const Rational &q) {
    if (sgn(q) < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::optional<Rational> reconstruct(double x) {
    // Continued-fraction convergents with bounded denominators.
    const double tol = 1e-9 * std::max(1.0, std::fabs(x));
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double v = x;
    for (int it = 0; it < 40; ++it) {
        double fl = std::floor(v);
        if (std::fabs(fl) > 1e15) return std::nullopt;
        long long a = static_cast<long long>(fl);
        long long h2 = a * h1 + h0;
        long long k2 = a * k1 + k0;
        if (k2 > 100000000LL || k2 <= 0) return std::nullopt;
        if (std::fabs(static_cast<double>(h2) / static_cast<double>(k2) - x) <= tol) {
            Rational r(Integer(std::to_string(h2)), Integer(std::to_string(k2)));
            r.canonicalize();
            return r;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        double frac = v - fl;
        if (frac < 1e-15) return std::nullopt;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace

std::optional<FieldElement> field_sqrt(const FieldElement &a) {
    if (a.is_zero()) {
        return a;
    }
    if (fe_sign(a) < 0) {
        return std::nullopt;
    }
    if (a.is_rational()) {
        if (auto r = exact_rational_sqrt(a.rational_value())) {
            return a.field_data() ? FieldElement(a.field_data(), {*r}) : FieldElement(*r);
        }
    }
    if (!a.field_data() || a.field_data()->degree < 2 || a.field_data()->degree > 10) {
        return std::nullopt;
    }
    const FieldData &f = *a.field_data();
    const int d = f.degree;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) {
        companion(i, d - 1) = -Rational(f.minpoly_q[i] / f.minpoly_q[d]).get_d();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
    if (solver.info() != Eigen::Success) {
        return std::nullopt;
    }
    Eigen::VectorXcd roots = solver.eigenvalues();
    Eigen::VectorXcd values(d);
    Eigen::MatrixXcd vander(d, d);
    for (int i = 0; i < d; ++i) {
        std::complex<double> acc = 0;
        for (int j = d - 1; j >= 0; --j) {
            acc = acc * roots(i) + a.coeff(j).get_d();
        }
        values(i) = std::sqrt(acc);
        std::complex<double> pw = 1;
        for (int j = 0; j < d; ++j) {
            vander(i, j) = pw;
            pw *= roots(i);
        }
    }
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(vander);
    for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        Eigen::VectorXcd s = values;
        for (int i = 1; i < d; ++i) {
            if (mask & (1u << (i - 1))) s(i) = -s(i);
        }
        Eigen::VectorXcd c = lu.solve(s);
        std::vector<Rational> coeffs;
        bool ok = true;
        for (int j = 0; j < d && ok; ++j) {
            if (std::fabs(c(j).imag()) > 1e-6 * std::max(1.0, std::abs(c(j)))) {
                ok = false;
                break;
            }
            auto r = reconstruct(c(j).real());
            if (!r) ok = false;
            else coeffs.push_back(*r);
        }
        if (!ok) continue;
        FieldElement cand(a.field_data(), coeffs);
        if (cand * cand == a) {
            return fe_sign(cand) < 0 ? -cand : cand;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// ComplexFieldElement

FieldElement ComplexFieldElement::norm2() const {
    return re_ * re_ + im_ * im_;
}

ComplexFieldElement ComplexFieldElement::inverse() const {
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero complex field element");
    }
    FieldElement n = norm2().inverse();
    return ComplexFieldElement(re_ * n, -(im_ * n));
}

ComplexFieldElement &ComplexFieldElement::operator+=(const ComplexFieldElement &b) {
    re_ += b.re_;
    im_ += b.im_;
    return *this;
}

ComplexFieldElement &ComplexFieldElement::operator-=(const ComplexFieldElement &b) {
    re_ -= b.re_;
    im_ -= b.im_;
    return *this;
}

ComplexFieldElement operator*(const ComplexFieldElement &a, const ComplexFieldElement &b) {
    if (a.im_.is_zero() && b.im_.is_zero()) {
        return ComplexFieldElement(a.re_ * b.re_, FieldElement());
    }
    return ComplexFieldElement(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexFieldElement &ComplexFieldElement::operator*=(const ComplexFieldElement &b) {
    *this = *this * b;
    return *this;
}

ComplexFieldElement &ComplexFieldElement::operator/=(const ComplexFieldElement &b) {
    *this = *this * b.inverse();
    return *this;
}

std::string ComplexFieldElement::to_string() const {
    if (im_.is_zero()) {
        return re_.to_string();
    }
    return "(" + re_.to_string() + ") + i*(" + im_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Bounds

Rational mahler_bound_envelope(const IntPolynomial &f, int g_degree, const Integer &g_height,
                               const Rational &alpha_abs_upper) {
    const int df = f.degree();
    if (df < 1) {
        throw Error(ErrorKind::DegenerateDegrees, "Mahler bound needs deg f >= 1");
    }
    if (g_degree < 0) {
        throw Error(ErrorKind::InvalidArgument, "Mahler bound needs a nonzero g");
    }
    Integer hg = g_height < 1 ? Integer(1) : g_height;
    Integer hf = f.height();
    Rational geometric(0);
    Rational power(1);
    for (int i = 0; i < df; ++i) {
        geometric += power;
        power *= alpha_abs_upper;
    }
    Integer hf_pow, hg_pow;
    mpz_pow_ui(hf_pow.get_mpz_t(), hf.get_mpz_t(), static_cast<unsigned long>(g_degree));
    mpz_pow_ui(hg_pow.get_mpz_t(), hg.get_mpz_t(), static_cast<unsigned long>(df - 1));
    Rational denom = Rational(factorial(static_cast<unsigned long>(df + g_degree - 1)) * hf_pow * hg_pow) * geometric;
    return 1 / denom;
}

Rational mahler_bound(const IntPolynomial &f, const IntPolynomial &g, const Rational &alpha_abs_upper) {
    return mahler_bound_envelope(f, g.degree(), g.height(), alpha_abs_upper);
}

PerturbationBound rational_perturbation_bound(int degree, const Rational &height_u, const Rational &height_v,
                                              const Rational &delta) {
    if (sgn(delta) <= 0 || sgn(height_v) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "perturbation bound needs delta > 0 and v != 0");
    }
    Rational d(degree < 1 ? 1 : degree);
    PerturbationBound b;
    b.epsilon = delta / (2 * d * height_v);
    b.errcoef = 4 * d * height_u * height_v / (delta * delta);
    return b;
}

PerturbationBound rational_perturbation_bound(const IntPolynomial &u, const IntPolynomial &v, const Rational &delta) {
    int d = std::max({1, u.degree(), v.degree()});
    return rational_perturbation_bound(d, Rational(u.height()), Rational(v.height()), delta);
}

}  // namespace selquant
