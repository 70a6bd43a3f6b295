// Copyright 2026 <project authors>
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

#ifndef FQC_SIM_TOMOGRAPHY_H
#define FQC_SIM_TOMOGRAPHY_H

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fqc/circuit/circuit.h"
#include "fqc/sim/state_vector.h"

namespace fqc {

/// Fermion occupation pattern over the whole fermion register, mode 0 first ("0110"). A label names the
/// creation-ordered Fock state, the same state basis_state builds.
using FermionLabel = std::string;

/// Density matrix restricted to a set of fermion patterns; qubits and bosons are traced out.
struct DensityMatrixOnSubspace {
    std::vector<FermionLabel> basis;
    Eigen::MatrixXcd matrix;

    double trace() const { return matrix.trace().real(); }
    double hermiticity_error() const;
    double min_eigenvalue() const;
    /// <psi|rho|psi> with psi given in the subspace basis.
    double fidelity(const Eigen::VectorXcd &psi) const;
    nlohmann::json to_json() const;
};

/// Exact reduced density matrix of the fermions, projected on the labelled patterns.
DensityMatrixOnSubspace project_density(const StateVector &s, const std::vector<FermionLabel> &basis);

/// Marginal probability of every labelled fermion pattern.
std::vector<double> measure_populations(const StateVector &s, const std::vector<FermionLabel> &basis);

/// Linear-inversion tomography. Each rotation circuit acts on fermions only and is applied to the prepared state
/// before the labelled populations are read. Throws if the settings do not fix every matrix element.
DensityMatrixOnSubspace subspace_tomography(const StateVector &prepared, const std::vector<Circuit> &rotations,
                                            const std::vector<FermionLabel> &basis);
DensityMatrixOnSubspace subspace_tomography(const StateVector &initial, const Circuit &prepare,
                                            const std::vector<Circuit> &rotations,
                                            const std::vector<FermionLabel> &basis);

/// Same inversion from externally supplied populations (one row per rotation, one column per label).
DensityMatrixOnSubspace reconstruct(uint32_t n_fermions, const std::vector<Circuit> &rotations,
                                    const std::vector<FermionLabel> &basis,
                                    const std::vector<std::vector<double>> &populations);

}  // namespace fqc

#endif
