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

#ifndef SELQUANT_DECIDE_HPP
#define SELQUANT_DECIDE_HPP

#include <optional>
#include <string>

#include "selquant/newton.hpp"
#include "selquant/process.hpp"

namespace selquant {

/// Square real matrix M whose series sum_t M^t[p-1, 0] is to be decided.
/// Caller obligation: eigenvalues of modulus <= 1 and a convergent series
/// (automatic for matrices built from processes).
struct DecisionInstance {
    FieldMatrix m;
    std::string provenance;

    int p() const {
        return static_cast<int>(m.rows());
    }
};

enum class Verdict { Accept, Reject };
enum class Method { Exact, Approx, Markov };

std::string to_string(Verdict v);
std::string to_string(Method m);

/// Exact limit together with the data it was read from.
struct LimitDetails {
    FieldElement value;
    /// Order of vanishing of det(I - zM) at z = 1.
    int order = 0;
    int det_degree = 0;
    int minor_degree = 0;
    /// det(I - zM) and det((I - zM) without row 0 and column p-1).
    PolyOverField det_poly;
    PolyOverField minor_poly;
};

/// lim_{z -> 1-} (-1)^(1+p) det((I - zM)_{1,p}) / det(I - zM), read off the
/// lowest coefficients after the substitution z = 1 - x. Throws
/// InvalidArgument for p < 2, SingularAtOne if det(I - zM) vanishes
/// identically, NoLimit if the numerator vanishes to lower order.
LimitDetails series_limit_details(const DecisionInstance &inst);
FieldElement series_limit_exact(const DecisionInstance &inst);

/// Instance-specific rigorous constants for the integer pipeline.
struct BoundConstants {
    /// lcm of all coefficient denominators of M.
    Integer h;
    /// Largest degree in alpha among the entries of M.
    int entry_degree = 0;
    int p = 0;
    /// Degree envelope in y for both determinants: p * entry_degree.
    int degree_y = 0;
    /// l1 envelopes of det(hI - (1-x)E(y)) and of h times its (1,p) minor,
    /// as integer polynomials in (y, x).
    Integer height_v;
    Integer height_u;
    Rational alpha_upper;
    /// Lower bounds on |b_k(alpha)| and, when nonzero, |a_k(alpha)|.
    Rational delta_b;
    Rational delta_a;
    /// Upper bounds on the x-coefficients of the scaled determinants.
    Rational bound_v;
    Rational bound_u;
    /// A nonzero limit has modulus >= separation; separation = 2^(1-c1).
    long c1 = 0;
    Rational separation;
    Rational eps_z;
    Rational coef_z;
    long mu = 0;
    Rational delta_t;
    Rational eps_t;
    Rational coef_t;
    long nu = 0;

    /// Accept threshold 2^-c1.
    Rational threshold() const {
        return separation / 2;
    }
};

BoundConstants derive_constants(const DecisionInstance &inst, const NumberField &field);

struct ApproxOptions {
    std::optional<long> mu_override;
    std::optional<long> nu_override;
    /// Round the Newton approximant to a dyadic rational with nu + 2
    /// fractional bits (still within 2^-nu of alpha). The raw recurrence
    /// output carries several times more bits than needed.
    bool dyadic_alpha = true;
};

struct ApproxDetails {
    Verdict verdict = Verdict::Reject;
    /// False when precision overrides were applied.
    bool certified = true;
    long mu = 0;
    long nu = 0;
    Approximant alpha;
    Integer u;
    Integer v;
    Integer f;
    /// U / V, an approximation of the limit.
    Rational ratio() const;
};

/// F = 2^c1 U V - V^2 with U, V determinants of integer matrices built
/// from alpha ~ f/g and z = 1 - 2^-mu. Accept iff F > 0. Throws
/// InternalBoundViolation if V = 0.
ApproxDetails decide_approx_details(const DecisionInstance &inst, const NewtonScheme &scheme,
                                    const BoundConstants &constants, const ApproxOptions &options = {});

struct DecisionResult {
    Verdict verdict = Verdict::Reject;
    Method method = Method::Exact;
    std::optional<FieldElement> witness;
    bool certified = true;
    std::optional<LimitDetails> limit;
    std::optional<BoundConstants> constants;
    std::optional<ApproxDetails> approx;
};

DecisionResult decide_exact(const DecisionInstance &inst);
DecisionResult decide_approx(const DecisionInstance &inst, const NumberField &field, const NewtonScheme &scheme,
                             const BoundConstants &constants, const ApproxOptions &options = {});

/// Auto takes the Krylov-compressed matrix whenever it is smaller than the
/// full one.
enum class Reduction { Auto, Full, Compressed };

/// Realifies when needed and builds the decision instance: the full
/// (n^2+2)-matrix, or an equivalent matrix restricted to the Krylov space
/// spanned by F_0^i(rho).
DecisionInstance process_instance(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                  const FieldElement &beta, Reduction reduction = Reduction::Auto);

/// Same series value, companion form on the Krylov space of F_0 from rho.
/// Needs a real operation and state.
DecisionInstance compressed_instance(const SelectiveQuantumOperation &op, const DensityMatrix &rho,
                                     const FieldElement &beta);

/// The field of the instance's entries (rationals if all are field-less).
NumberField instance_field(const DecisionInstance &inst);

/// Accept iff the halting-with-1 probability exceeds beta.
DecisionResult decide_process(const SelectiveQuantumOperation &op, const DensityMatrix &rho, const FieldElement &beta,
                              Method method = Method::Exact, Reduction reduction = Reduction::Auto,
                              const ApproxOptions &options = {});

/// Probability that the chain started in `start` is absorbed in `target`
/// (0-based). a(i, j) = Pr[j -> i]. Throws NotStochastic or
/// NonAbsorbingChain.
FieldElement markov_absorption(const FieldMatrix &a, int start, int target);

/// Checks column-stochasticity exactly.
void check_stochastic(const FieldMatrix &a);

}  // namespace selquant

#endif
