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

#include "selquant/process.hpp"

#include <sstream>

namespace selquant {

namespace {

ComplexMatrix zero_matrix(int n) {
    return zeros<ComplexFieldElement>(n, n);
}

// A X A^dagger, skipping zero entries.
ComplexMatrix sandwich(const ComplexMatrix &a, const ComplexMatrix &x) {
    return mul(mul(a, x), dagger(a));
}

bool matrix_is_real(const ComplexMatrix &m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_real()) return false;
    return true;
}

}  // namespace

SelectiveQuantumOperation::SelectiveQuantumOperation(int dim, int outputs, std::map<Key, ComplexMatrix> kraus)
    : dim_(dim), outputs_(outputs), kraus_(std::move(kraus)) {
    if (dim_ < 1 || outputs_ < 1) {
        throw Error(ErrorKind::InvalidArgument, "operation needs dim >= 1 and at least one output");
    }
    for (auto it = kraus_.begin(); it != kraus_.end();) {
        const auto [i, j] = it->first;
        if (i < 0 || i >= outputs_ || j < 0) {
            std::ostringstream os;
            os << "Kraus index (" << i << ", " << j << ") out of range";
            throw Error(ErrorKind::IndexOutOfRange, os.str());
        }
        if (it->second.rows() != dim_ || it->second.cols() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "Kraus matrix has the wrong shape");
        }
        if (is_zero_matrix(it->second)) {
            it = kraus_.erase(it);
        } else {
            ++it;
        }
    }
}

int SelectiveQuantumOperation::branches() const {
    int b = 0;
    for (const auto &[key, m] : kraus_) b = std::max(b, key.second + 1);
    return b;
}

ComplexMatrix SelectiveQuantumOperation::kraus(int i, int j) const {
    auto it = kraus_.find({i, j});
    return it == kraus_.end() ? zero_matrix(dim_) : it->second;
}

std::vector<ComplexMatrix> SelectiveQuantumOperation::kraus_for(int i) const {
    std::vector<ComplexMatrix> out;
    for (const auto &[key, m] : kraus_) {
        if (key.first == i) out.push_back(m);
    }
    return out;
}

bool SelectiveQuantumOperation::is_real() const {
    for (const auto &[key, m] : kraus_) {
        if (!matrix_is_real(m)) return false;
    }
    return true;
}

CompletenessCertificate validate_operation(const SelectiveQuantumOperation &op) {
    ComplexMatrix sum = zero_matrix(op.dim());
    for (const auto &[key, a] : op.entries()) sum = add(sum, mul(dagger(a), a));
    double worst = -1;
    Eigen::Index wr = 0, wc = 0;
    for (Eigen::Index r = 0; r < sum.rows(); ++r) {
        for (Eigen::Index c = 0; c < sum.cols(); ++c) {
            ComplexFieldElement dev = sum(r, c) - ComplexFieldElement(r == c ? 1 : 0);
            if (dev.is_zero()) continue;
            double mag = std::abs(dev.to_complex());
            if (mag > worst) {
                worst = mag;
                wr = r;
                wc = c;
            }
        }
    }
    if (worst >= 0) {
        std::ostringstream os;
        os << "sum of A^dagger A differs from I at (" << wr << ", " << wc << "): entry is "
           << sum(wr, wc).to_string();
        throw Error(ErrorKind::CompletenessViolation, os.str());
    }
    return {op.dim(), op.entries().size()};
}

void check_hermitian(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NotSquare, "density matrix is not square");
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            if (m(i, j) != conj(m(j, i))) {
                std::ostringstream os;
                os << "entry (" << i << ", " << j << ") is not the conjugate of (" << j << ", " << i << ")";
                throw Error(ErrorKind::NotHermitian, os.str());
            }
        }
    }
}

bool is_psd(const ComplexMatrix &m) {
    bool diagonal = true;
    for (Eigen::Index i = 0; i < m.rows() && diagonal; ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) {
                diagonal = false;
                break;
            }
    if (diagonal) {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (fe_sign(m(i, i).re()) < 0) return false;
        return true;
    }
    const Eigen::Index n = m.rows();
    std::vector<ComplexFieldElement> cp = charpoly(m);
    for (Eigen::Index k = 0; k <= n; ++k) {
        const ComplexFieldElement &c = cp[n - k];
        if (!c.is_real()) return false;
        int s = fe_sign(c.re());
        if (k % 2 == 1) s = -s;
        if (s < 0) return false;
    }
    return true;
}

DensityMatrix DensityMatrix::create(ComplexMatrix m) {
    check_hermitian(m);
    ComplexFieldElement tr = trace(m);
    if (tr != ComplexFieldElement(1)) {
        throw Error(ErrorKind::TraceViolation, "trace is " + tr.to_string() + ", not 1");
    }
    if (!is_psd(m)) {
        throw Error(ErrorKind::PsdViolation, "matrix has a negative eigenvalue");
    }
    return trusted(std::move(m));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    DensityMatrix d;
    d.m_ = std::move(m);
    return d;
}

bool DensityMatrix::is_real() const {
    return matrix_is_real(m_);
}

ComplexMatrix apply_unnormalized(const SelectiveQuantumOperation &op, const ComplexMatrix &x, int i) {
    if (i < 0 || i >= op.outputs()) {
        throw Error(ErrorKind::IndexOutOfRange, "output symbol out of range");
    }
    ComplexMatrix out = zero_matrix(op.dim());
    for (const auto &[key, a] : op.entries()) {
        if (key.first == i) out = add(out, sandwich(a, x));
    }
    return out;
}

FieldElement real_trace(const ComplexMatrix &m) {
    return trace(m).re();
}

FieldElement branch_probability(const SelectiveQuantumOperation &op, const DensityMatrix &rho, int i) {
    return real_trace(apply_unnormalized(op, rho.matrix(), i));
}

DensityMatrix apply_normalized(const SelectiveQuantumOperation &op, const DensityMatrix &rho, int i) {
    ComplexMatrix f = apply_unnormalized(op, rho.matrix(), i);
    FieldElement p = real_trace(f);
    if (p.is_zero()) {
        throw Error(ErrorKind::UndefinedBranch, "branch " + std::to_string(i) + " has probability 0");
    }
    return DensityMatrix::trusted(scaled(f, ComplexFieldElement(p.inverse())));
}

FieldElement prefix_probability(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                const std::vector<int> &prefix) {
    ComplexMatrix x = rho.matrix();
    for (int r : prefix) x = apply_unnormalized(op, x, r);
    return real_trace(x);
}

FieldMatrix real_blocks(const ComplexMatrix &m) {
    FieldMatrix out = zeros<FieldElement>(2 * m.rows(), 2 * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto &a = m(i, j).re();
            const auto &b = m(i, j).im();
            out(2 * i, 2 * j) = a;
            out(2 * i, 2 * j + 1) = b;
            out(2 * i + 1, 2 * j) = -b;
            out(2 * i + 1, 2 * j + 1) = a;
        }
    }
    return out;
}

namespace {

ComplexMatrix as_complex(const FieldMatrix &m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = ComplexFieldElement(m(i, j));
    return out;
}

FieldMatrix real_part(const ComplexMatrix &m) {
    FieldMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_real()) {
                throw Error(ErrorKind::NotReal, "matrix has a nonzero imaginary part");
            }
            out(i, j) = m(i, j).re();
        }
    }
    return out;
}

}  // namespace

RealifiedProcess realify(const SelectiveQuantumOperation &op, const DensityMatrix &rho) {
    std::map<SelectiveQuantumOperation::Key, ComplexMatrix> kraus;
    for (const auto &[key, a] : op.entries()) kraus[key] = as_complex(real_blocks(a));
    FieldMatrix r = real_blocks(rho.matrix());
    r = scaled(r, FieldElement(Rational(1, 2)));
    return {SelectiveQuantumOperation(2 * op.dim(), op.outputs(), std::move(kraus)),
            DensityMatrix::trusted(as_complex(r))};
}

void check_beta(const FieldElement &beta) {
    if (fe_sign(beta) < 0 || fe_sign(FieldElement(1) - beta) < 0) {
        throw Error(ErrorKind::InvalidArgument, "beta must lie in [0, 1]");
    }
}

DecisionMatrix build_decision_matrix(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                     const FieldElement &beta) {
    if (!op.is_real() || !rho.is_real()) {
        throw Error(ErrorKind::NotReal, "decision matrix needs a real operation and state");
    }
    check_beta(beta);
    const int n = op.dim();
    if (op.outputs() < 2) {
        throw Error(ErrorKind::InvalidArgument, "decision matrix needs outputs 0 and 1");
    }
    const Eigen::Index nn = static_cast<Eigen::Index>(n) * n;
    FieldMatrix m = zeros<FieldElement>(nn + 2, nn + 2);
    Vector<FieldElement> v = vec(real_part(rho.matrix()));
    for (Eigen::Index k = 0; k < nn; ++k) m(1 + k, 0) = v(k);
    m(nn + 1, 0) = -beta;
    FieldMatrix q = zeros<FieldElement>(n, n);
    for (const auto &[key, a] : op.entries()) {
        FieldMatrix ar = real_part(a);
        if (key.first == 0) {
            FieldMatrix k = kron(ar, conjugate(ar));
            for (Eigen::Index r = 0; r < nn; ++r)
                for (Eigen::Index c = 0; c < nn; ++c)
                    if (!k(r, c).is_zero()) m(1 + r, 1 + c) += k(r, c);
        } else if (key.first == 1) {
            q = add(q, mul(dagger(ar), ar));
        }
    }
    Vector<FieldElement> qv = vec(q);
    for (Eigen::Index k = 0; k < nn; ++k) m(nn + 1, 1 + k) = qv(k);
    return {std::move(m), n, beta};
}

FieldElement halting_probability_truncated(const SelectiveQuantumOperation &op, const DensityMatrix &rho, long t_max) {
    if (t_max < 0) {
        throw Error(ErrorKind::InvalidArgument, "truncation must be >= 0");
    }
    FieldElement total(0);
    ComplexMatrix x = rho.matrix();
    for (long t = 0; t <= t_max; ++t) {
        total += real_trace(apply_unnormalized(op, x, 1));
        if (t < t_max) x = apply_unnormalized(op, x, 0);
    }
    return total;
}

TrajectorySampler::TrajectorySampler(const SelectiveQuantumOperation &op, const DensityMatrix &rho)
    : kraus_(op.outputs()), rho_(to_complex_double(rho.matrix())) {
    for (const auto &[key, a] : op.entries()) kraus_[key.first].push_back(to_complex_double(a));
}

std::vector<int> TrajectorySampler::sample(std::mt19937_64 &rng, int max_steps) const {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<int> out;
    Eigen::MatrixXcd rho = rho_;
    for (int step = 0; step < max_steps; ++step) {
        std::vector<Eigen::MatrixXcd> next(kraus_.size());
        std::vector<double> weight(kraus_.size(), 0.0);
        double total = 0;
        for (std::size_t i = 0; i < kraus_.size(); ++i) {
            next[i] = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
            for (const auto &a : kraus_[i]) next[i] += a * rho * a.adjoint();
            weight[i] = std::max(0.0, next[i].trace().real());
            total += weight[i];
        }
        if (total <= 0) break;
        double u = unif(rng) * total;
        std::size_t pick = weight.size();
        std::size_t last_positive = 0;
        for (std::size_t i = 0; i < weight.size(); ++i) {
            if (weight[i] <= 0) continue;
            last_positive = i;
            if (u < weight[i]) {
                pick = i;
                break;
            }
            u -= weight[i];
        }
        if (pick == weight.size()) pick = last_positive;
        out.push_back(static_cast<int>(pick));
        rho = next[pick] / weight[pick];
    }
    return out;
}

std::vector<int> sample_trajectory(const SelectiveQuantumOperation &op, const DensityMatrix &rho, std::uint64_t seed,
                                   int max_steps) {
    if (max_steps < 1) {
        throw Error(ErrorKind::InvalidArgument, "max_steps must be >= 1");
    }
    std::mt19937_64 rng(seed);
    return TrajectorySampler(op, rho).sample(rng, max_steps);
}

}  // namespace selquant
