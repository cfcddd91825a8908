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

#ifndef SELQUANT_PROCESS_HPP
#define SELQUANT_PROCESS_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "selquant/linalg.hpp"

namespace selquant {

/// Matrices A_{i,j} (output i, branch j, both 0-based) acting on an
/// n-dimensional space. Absent pairs are zero matrices.
class SelectiveQuantumOperation {
  public:
    using Key = std::pair<int, int>;

    SelectiveQuantumOperation() = default;
    /// Checks shapes and index ranges only; completeness is checked by
    /// validate_operation.
    SelectiveQuantumOperation(int dim, int outputs, std::map<Key, ComplexMatrix> kraus);

    int dim() const {
        return dim_;
    }
    /// m + 1: outputs are 0..m.
    int outputs() const {
        return outputs_;
    }
    /// One past the largest branch index present.
    int branches() const;
    const std::map<Key, ComplexMatrix> &entries() const {
        return kraus_;
    }
    /// A_{i,j}, or the zero matrix.
    ComplexMatrix kraus(int i, int j) const;
    /// The nonzero A_{i,j} for a fixed output i.
    std::vector<ComplexMatrix> kraus_for(int i) const;
    bool is_real() const;

  private:
    int dim_ = 0;
    int outputs_ = 0;
    std::map<Key, ComplexMatrix> kraus_;
};

struct CompletenessCertificate {
    int dim = 0;
    std::size_t matrices = 0;
};

/// Confirms sum A^dagger A = I exactly; otherwise throws
/// CompletenessViolation naming the entry of largest deviation.
CompletenessCertificate validate_operation(const SelectiveQuantumOperation &op);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    /// Throws NotHermitian, TraceViolation or PsdViolation.
    static DensityMatrix create(ComplexMatrix m);
    /// Skips the checks; for values that are valid by construction.
    static DensityMatrix trusted(ComplexMatrix m);

    const ComplexMatrix &matrix() const {
        return m_;
    }
    int dim() const {
        return static_cast<int>(m_.rows());
    }
    bool is_real() const;

  private:
    ComplexMatrix m_;
};

void check_hermitian(const ComplexMatrix &m);
/// Exact PSD test for a Hermitian matrix: every coefficient e_k of
/// det(xI - m) = sum_k (-1)^k e_k x^(n-k) must be nonnegative.
bool is_psd(const ComplexMatrix &m);

/// F_i(X) = sum_j A_{i,j} X A_{i,j}^dagger.
ComplexMatrix apply_unnormalized(const SelectiveQuantumOperation &op, const ComplexMatrix &x, int i);
/// E_i(rho) = F_i(rho) / p_i(rho); throws UndefinedBranch when p_i(rho) = 0.
DensityMatrix apply_normalized(const SelectiveQuantumOperation &op, const DensityMatrix &rho, int i);
/// p_i(rho) = tr F_i(rho).
FieldElement branch_probability(const SelectiveQuantumOperation &op, const DensityMatrix &rho, int i);
/// Pr[R_1 = r_1, ..., R_t = r_t] = tr(F_{r_t} o ... o F_{r_1}(rho)).
FieldElement prefix_probability(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                const std::vector<int> &prefix);

/// Real trace of a matrix whose trace is real.
FieldElement real_trace(const ComplexMatrix &m);

/// Real 2x2-block encoding: a + bi becomes [[a, b], [-b, a]].
FieldMatrix real_blocks(const ComplexMatrix &m);

struct RealifiedProcess {
    SelectiveQuantumOperation op;
    DensityMatrix rho;
};

/// Doubles the dimension, replacing every entry by its real 2x2 block and
/// halving rho. All prefix probabilities are unchanged.
RealifiedProcess realify(const SelectiveQuantumOperation &op, const DensityMatrix &rho);

/// Real (n^2+2)x(n^2+2) matrix M with M^(t+2)[n^2+1, 0] = Pr[0^t 1] and
/// M[n^2+1, 0] = -beta (0-based indices).
struct DecisionMatrix {
    FieldMatrix m;
    int n = 0;
    FieldElement beta;
};

/// Throws NotReal for complex input, InvalidArgument if beta is outside [0,1].
DecisionMatrix build_decision_matrix(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                     const FieldElement &beta);

void check_beta(const FieldElement &beta);

/// sum_{t=0}^{T} tr F_1(F_0^t(rho)), iterating F_0 once per step.
FieldElement halting_probability_truncated(const SelectiveQuantumOperation &op, const DensityMatrix &rho, long t_max);

/// Floating-point Monte-Carlo simulation of the output process, for
/// statistical checks only.
class TrajectorySampler {
  public:
    TrajectorySampler(const SelectiveQuantumOperation &op, const DensityMatrix &rho);
    /// Samples up to max_steps outputs; stops early if no output has
    /// positive weight.
    std::vector<int> sample(std::mt19937_64 &rng, int max_steps) const;

  private:
    std::vector<std::vector<Eigen::MatrixXcd>> kraus_;
    Eigen::MatrixXcd rho_;
};

std::vector<int> sample_trajectory(const SelectiveQuantumOperation &op, const DensityMatrix &rho, std::uint64_t seed,
                                   int max_steps);

}  // namespace selquant

#endif
