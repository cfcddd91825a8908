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

#include "selquant/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

namespace selquant {

PolyOverField::PolyOverField(int c) {
    if (c != 0) c_.emplace_back(c);
}

PolyOverField::PolyOverField(FieldElement c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

PolyOverField::PolyOverField(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) {
    trim();
}

PolyOverField PolyOverField::z() {
    return PolyOverField(std::vector<FieldElement>{FieldElement(0), FieldElement(1)});
}

void PolyOverField::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement PolyOverField::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : FieldElement(0);
}

FieldElement PolyOverField::eval(const FieldElement &z) const {
    FieldElement acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

PolyOverField PolyOverField::shift_one_minus() const {
    // Horner in the polynomial ring: acc = acc * (1 - x) + c_k.
    PolyOverField one_minus_x(std::vector<FieldElement>{FieldElement(1), FieldElement(-1)});
    PolyOverField acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * one_minus_x + PolyOverField(*it);
    }
    return acc;
}

PolyOverField &PolyOverField::operator+=(const PolyOverField &b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), FieldElement(0));
    for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
    trim();
    return *this;
}

PolyOverField &PolyOverField::operator-=(const PolyOverField &b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), FieldElement(0));
    for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
    trim();
    return *this;
}

PolyOverField operator*(const PolyOverField &a, const PolyOverField &b) {
    if (a.c_.empty() || b.c_.empty()) return PolyOverField();
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return PolyOverField(std::move(r));
}

PolyOverField &PolyOverField::operator*=(const PolyOverField &b) {
    *this = *this * b;
    return *this;
}

PolyOverField &PolyOverField::operator/=(const PolyOverField &b) {
    if (b.c_.empty()) {
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    if (c_.empty()) return *this;
    const int db = b.degree();
    if (degree() < db) {
        throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    }
    FieldElement lead_inv = b.c_.back().inverse();
    std::vector<FieldElement> rem = c_;
    std::vector<FieldElement> quot(rem.size() - b.c_.size() + 1, FieldElement(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k].is_zero()) continue;
        FieldElement q = rem[k] * lead_inv;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) {
            if (!b.c_[j].is_zero()) rem[k - db + j] -= q * b.c_[j];
        }
    }
    for (int k = 0; k < db; ++k) {
        if (!rem[k].is_zero()) {
            throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
        }
    }
    c_ = std::move(quot);
    trim();
    return *this;
}

PolyOverField PolyOverField::operator-() const {
    PolyOverField r = *this;
    for (auto &c : r.c_) c = -c;
    return r;
}

bool operator==(const PolyOverField &a, const PolyOverField &b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
        if (a.c_[k] != b.c_[k]) return false;
    }
    return true;
}

std::string PolyOverField::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[k].to_string() << ")";
        if (k >= 1) os << "*z";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

Eigen::MatrixXcd to_complex_double(const ComplexMatrix &a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_complex();
    return out;
}

Eigen::MatrixXcd to_complex_double(const FieldMatrix &a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_double();
    return out;
}

double spectral_radius_estimate(const Eigen::MatrixXcd &a, double tol) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, "spectral radius of a non-square matrix");
    }
    if (a.rows() == 0) return 0.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, true);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "eigenvalue iteration did not converge");
    }
    const auto &vals = solver.eigenvalues();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < vals.size(); ++i) {
        if (std::abs(vals(i)) > std::abs(vals(best))) best = i;
    }
    Eigen::VectorXcd v = solver.eigenvectors().col(best);
    double scale = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
    double residual = (a * v - vals(best) * v).norm() / std::max(v.norm(), 1e-300);
    if (!(residual <= tol * scale)) {
        throw Error(ErrorKind::NoConvergence, "dominant eigenpair residual above tolerance");
    }
    return std::abs(vals(best));
}

}  // namespace selquant
