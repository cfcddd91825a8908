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

#include "selquant/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "selquant/error.hpp"

namespace selquant {

RationalInterval::RationalInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) {
        throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
    }
}

Rational RationalInterval::magnitude() const {
    Rational a = abs(lo);
    Rational b = abs(hi);
    return a > b ? a : b;
}

RationalInterval operator+(const RationalInterval &a, const RationalInterval &b) {
    return RationalInterval(a.lo + b.lo, a.hi + b.hi);
}

RationalInterval operator*(const RationalInterval &a, const RationalInterval &b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return RationalInterval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Integer IntPolynomial::height() const {
    Integer h(0);
    for (const auto &c : coeffs_) {
        if (abs(c) > h) {
            h = abs(c);
        }
    }
    return h;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<Integer> d;
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        d.push_back(coeffs_[j] * static_cast<unsigned long>(j));
    }
    return IntPolynomial(std::move(d));
}

Rational IntPolynomial::eval(const Rational &x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    return acc;
}

std::vector<Rational> IntPolynomial::to_rational() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
        out.emplace_back(c);
    }
    return out;
}

std::string IntPolynomial::to_string(const char *var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int j = degree(); j >= 0; --j) {
        const Integer &c = coeffs_[j];
        if (sgn(c) == 0) {
            continue;
        }
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        Integer a = abs(c);
        if (j == 0 || a != 1) {
            os << a;
        }
        if (j >= 1) {
            os << var;
        }
        if (j >= 2) {
            os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

namespace ratpoly {

void trim(Poly &p) {
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

int degree(const Poly &p) {
    return static_cast<int>(p.size()) - 1;
}

Poly add(const Poly &a, const Poly &b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

Poly sub(const Poly &a, const Poly &b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

Poly mul(const Poly &a, const Poly &b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

Poly scale(const Poly &a, const Rational &c) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * c;
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
    if (b.empty()) {
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    Poly rem = a;
    trim(rem);
    int db = degree(b);
    if (degree(rem) < db) {
        return {{}, rem};
    }
    Poly quot(rem.size() - b.size() + 1);
    Rational lead_inv = 1 / b.back();
    for (int k = degree(rem); k >= db; --k) {
        Rational c = rem[k] * lead_inv;
        if (sgn(c) == 0) continue;
        quot[k - db] = c;
        for (int j = 0; j <= db; ++j) {
            rem[k - db + j] -= c * b[j];
        }
    }
    trim(quot);
    rem.resize(db);
    trim(rem);
    return {quot, rem};
}

Poly derivative(const Poly &p) {
    Poly d;
    for (std::size_t j = 1; j < p.size(); ++j) {
        d.push_back(p[j] * static_cast<long>(j));
    }
    trim(d);
    return d;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        a = scale(a, 1 / a.back());
    }
    return a;
}

std::pair<Poly, Poly> inverse_mod(const Poly &a, const Poly &m) {
    // Extended Euclid tracking only the coefficient of a.
    Poly r0 = m, r1 = a;
    trim(r0);
    trim(r1);
    Poly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.empty()) {
        return {{}, {}};
    }
    Rational inv = 1 / r0.back();
    return {scale(r0, inv), divmod(scale(s0, inv), m).second};
}

Rational eval(const Poly &p, const Rational &x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RationalInterval eval(const Poly &p, const RationalInterval &range) {
    if (p.empty()) {
        return RationalInterval(Rational(0), Rational(0));
    }
    RationalInterval acc(p.back(), p.back());
    for (int j = degree(p) - 1; j >= 0; --j) {
        acc = acc * range + RationalInterval(p[j], p[j]);
    }
    return acc;
}

std::vector<Poly> sturm_chain(const Poly &p) {
    std::vector<Poly> chain;
    Poly a = p;
    trim(a);
    chain.push_back(a);
    Poly b = derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = scale(r, Rational(-1));
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<Poly> &chain, const Rational &x) {
    int count = 0;
    int prev = 0;
    for (const auto &q : chain) {
        int s = sgn(eval(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int count_roots(const std::vector<Poly> &chain, const Rational &lo, const Rational &hi) {
    // V(lo) - V(hi) counts roots in (lo, hi]; a root sitting at lo is added
    // separately.
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (sgn(eval(chain.front(), lo)) == 0) {
        ++n;
    }
    return n;
}

}  // namespace ratpoly

}  // namespace selquant
