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

#ifndef SELQUANT_RATIONAL_HPP
#define SELQUANT_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace selquant {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". The result is canonical (lowest terms, q > 0).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline std::string to_string(const Rational &q) {
    return q.get_str();
}
inline std::string to_string(const Integer &z) {
    return z.get_str();
}

inline bool is_zero(const Rational &q) {
    return sgn(q) == 0;
}
inline bool is_zero(const Integer &z) {
    return sgn(z) == 0;
}

/// 2^e as an exact rational; e may be negative.
Rational pow2(long e);
Integer factorial(unsigned long n);
Rational pow(const Rational &base, unsigned long e);

/// Smallest integer e with q <= 2^e. Requires q > 0.
long ceil_log2(const Rational &q);
/// Largest integer e with 2^e <= q. Requires q > 0.
long floor_log2(const Rational &q);
/// Smallest integer e >= 1 with 2^-e <= q. Requires q > 0.
long precision_for(const Rational &q);

inline std::size_t bit_size(const Integer &z) {
    return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace selquant

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 64,
        MulCost = 64
    };
    static inline int digits10() {
        return 0;
    }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 32,
        MulCost = 64
    };
    static inline int digits10() {
        return 0;
    }
};

}  // namespace Eigen

#endif
