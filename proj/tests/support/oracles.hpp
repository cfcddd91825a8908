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

// Slow, independent reference computations used only by tests.

#ifndef SELQUANT_TESTS_ORACLES_HPP
#define SELQUANT_TESTS_ORACLES_HPP

#include <vector>

#include "selquant/linalg.hpp"

namespace oracle {

using selquant::Matrix;

// Laplace expansion along the first row.
template <typename S>
S cofactor_det(const Matrix<S> &a) {
    const Eigen::Index n = a.rows();
    if (n == 0) return S(1);
    if (n == 1) return a(0, 0);
    S total(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        Matrix<S> sub(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = a(r, c);
            }
        }
        S term = a(0, j) * cofactor_det(sub);
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

// Solves x = Q x + b by Gauss-Jordan on (I - Q) with full row reduction.
template <typename S>
std::vector<S> solve_fixed_point(const Matrix<S> &q, const std::vector<S> &b) {
    const Eigen::Index n = q.rows();
    Matrix<S> aug(n, n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) aug(i, j) = (i == j ? S(1) : S(0)) - q(i, j);
        aug(i, n) = b[i];
    }
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (selquant::is_zero(aug(p, c))) ++p;
        aug.row(p).swap(aug.row(c));
        S inv = S(1) / aug(c, c);
        for (Eigen::Index j = 0; j <= n; ++j) aug(c, j) = aug(c, j) * inv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c || selquant::is_zero(aug(i, c))) continue;
            S f = aug(i, c);
            for (Eigen::Index j = 0; j <= n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    std::vector<S> x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

// Absorption probability into `target` from `start` for a column-stochastic
// matrix a (a(i, j) = Pr[j -> i]), by first-step analysis over the transient
// states. Indices are 0-based.
template <typename S>
S absorption_linear_solve(const Matrix<S> &a, Eigen::Index start, Eigen::Index target) {
    const Eigen::Index n = a.rows();
    std::vector<Eigen::Index> transient;
    std::vector<bool> absorbing(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        absorbing[j] = a(j, j) == S(1);
        if (!absorbing[j]) transient.push_back(j);
    }
    if (absorbing[start]) return start == target ? S(1) : S(0);
    const Eigen::Index t = static_cast<Eigen::Index>(transient.size());
    Matrix<S> q(t, t);
    std::vector<S> b(t);
    for (Eigen::Index r = 0; r < t; ++r) {
        for (Eigen::Index c = 0; c < t; ++c) q(r, c) = a(transient[c], transient[r]);
        b[r] = a(target, transient[r]);
    }
    auto x = solve_fixed_point(q, b);
    for (Eigen::Index r = 0; r < t; ++r)
        if (transient[r] == start) return x[r];
    return S(0);
}

}  // namespace oracle

#endif
