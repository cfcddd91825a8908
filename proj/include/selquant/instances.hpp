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

#ifndef SELQUANT_INSTANCES_HPP
#define SELQUANT_INSTANCES_HPP

#include <random>
#include <string>
#include <vector>

#include "selquant/process.hpp"

namespace selquant {

/// A process together with the cutpoint it is compared against.
struct ProcessInstance {
    std::string name;
    SelectiveQuantumOperation op;
    DensityMatrix rho;
    FieldElement beta;
};

/// (sqrt 2 / 2) [[1, 1], [1, -1]] over Q(sqrt 2).
ComplexMatrix hadamard_matrix();
/// Outputs the measured bit after a Hadamard: A_{0,0} = |0><0| H,
/// A_{1,0} = |1><1| H.
SelectiveQuantumOperation hadamard_measure();
/// |k><k| in dimension dim, entries tagged with `field`.
DensityMatrix basis_state(const NumberField &field, int dim, int k);

struct RandomOperationParams {
    int dim = 2;
    /// m + 1, at least 2.
    int outputs = 2;
    int branches = 1;
    /// Allow complex phases.
    bool complex_entries = false;
    /// Number of elementary rotations; <= 0 picks a default from the size.
    int rotations = 0;
};

/// Random operation satisfying completeness exactly: an isometry built
/// from exact Givens rotations and unit phases, cut into Kraus blocks. In
/// Q(sqrt 2) the rotation angles include pi/4.
SelectiveQuantumOperation random_operation(std::mt19937_64 &rng, const NumberField &field,
                                           const RandomOperationParams &params);

/// Random exact unitary of size n, same construction.
ComplexMatrix random_unitary(std::mt19937_64 &rng, const NumberField &field, int n, bool complex_entries,
                             int rotations);

/// Convex mixture of the projectors onto columns of a random unitary.
DensityMatrix random_density(std::mt19937_64 &rng, const NumberField &field, int dim, bool complex_entries);

/// One of 0, 1/4, 1/2, sqrt(2)/4 (when available) and 1.
FieldElement random_beta(std::mt19937_64 &rng, const NumberField &field);

struct SuiteParams {
    std::uint64_t seed = 1;
    int count = 20;
    std::vector<int> dims{2, 3};
    int max_outputs = 3;
    int max_branches = 2;
    bool complex_entries = false;
};

std::vector<ProcessInstance> random_suite(const NumberField &field, const SuiteParams &params);

}  // namespace selquant

#endif
