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

#include "selquant/rational.hpp"

#include <cctype>

#include "selquant/error.hpp"

namespace selquant {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotSquareFree: return "NotSquareFree";
        case ErrorKind::NotIsolating: return "NotIsolating";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DegenerateDegrees: return "DegenerateDegrees";
        case ErrorKind::RootNotInField: return "RootNotInField";
        case ErrorKind::SeedOutsideBasin: return "SeedOutsideBasin";
        case ErrorKind::DerivativeVanishes: return "DerivativeVanishes";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::CompletenessViolation: return "CompletenessViolation";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::TraceViolation: return "TraceViolation";
        case ErrorKind::PsdViolation: return "PsdViolation";
        case ErrorKind::UndefinedBranch: return "UndefinedBranch";
        case ErrorKind::NotReal: return "NotReal";
        case ErrorKind::NoLimit: return "NoLimit";
        case ErrorKind::SingularAtOne: return "SingularAtOne";
        case ErrorKind::InternalBoundViolation: return "InternalBoundViolation";
        case ErrorKind::NotStochastic: return "NotStochastic";
        case ErrorKind::NonAbsorbingChain: return "NonAbsorbingChain";
        case ErrorKind::RouteMismatch: return "RouteMismatch";
        case ErrorKind::BadTargets: return "BadTargets";
    }
    return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    std::string out(s);
    if (!out.empty() && out.front() == '+') {
        out.erase(out.begin());
    }
    return out;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string s = strip(text);
    if (!is_integer_literal(s)) {
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
    }
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    std::string s = strip(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(s));
    }
    Integer num = parse_integer(std::string_view(s).substr(0, slash));
    std::string den_text = s.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw Error(ErrorKind::ParseError, "negative denominator in '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (sgn(den) == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational pow2(long e) {
    Rational r(1);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pow(const Rational &base, unsigned long e) {
    Rational r(1);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    r = Rational(num, den);
    r.canonicalize();
    return r;
}

long ceil_log2(const Rational &q) {
    if (sgn(q) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "ceil_log2 of a non-positive rational");
    }
    long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    // 2^(e-1) < q < 2^(e+1) now; settle the exact boundary.
    while (q > pow2(e)) {
        ++e;
    }
    while (q <= pow2(e - 1)) {
        --e;
    }
    return e;
}

long floor_log2(const Rational &q) {
    if (sgn(q) <= 0) {
        throw Error(ErrorKind::InvalidArgument, "floor_log2 of a non-positive rational");
    }
    long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    while (pow2(e) > q) {
        --e;
    }
    while (pow2(e + 1) <= q) {
        ++e;
    }
    return e;
}

long precision_for(const Rational &q) {
    Rational inv = 1 / q;
    long e = ceil_log2(inv);
    return e < 1 ? 1 : e;
}

}  // namespace selquant
