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

#ifndef FQC_SIM_STATE_VECTOR_H
#define FQC_SIM_STATE_VECTOR_H

#include <complex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fqc/sim/layout.h"
#include "json.hpp"

namespace fqc {

using cplx = std::complex<double>;

class TruncationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Amplitudes over the mixed basis, stored sparsely. Gates conserving excitation sectors keep the support small.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(Layout layout) : layout_(std::move(layout)) {}

    /// Product state; occupied fermion modes are created in ascending order, p_hi^+ ... p_lo^+ |vac>.
    static StateVector basis_state(const Layout &layout, const Occupation &occ);
    static StateVector from_dense(const Layout &layout, const Eigen::VectorXcd &v, double tol = 0);

    const Layout &layout() const { return layout_; }
    cplx amplitude(BasisIndex i) const;
    void set(BasisIndex i, cplx a);
    void add(BasisIndex i, cplx a);
    size_t support_size() const { return amps_.size(); }
    const std::unordered_map<BasisIndex, cplx> &amplitudes() const { return amps_; }
    /// Basis indices in increasing order.
    std::vector<BasisIndex> sorted_support() const;

    double norm_squared() const;
    double norm() const;
    void normalize();
    void scale(cplx c);
    void prune(double tol = 1e-15);
    /// <this|other>
    cplx inner(const StateVector &other) const;
    StateVector &operator+=(const StateVector &o);

    Eigen::VectorXcd to_dense() const;
    nlohmann::json to_json() const;

   private:
    Layout layout_;
    std::unordered_map<BasisIndex, cplx> amps_;
};

/// Fermion primitives with Jordan-Wigner signs: image index and sign, or nullopt when the result vanishes.
std::optional<std::pair<BasisIndex, double>> create_at(const Layout &l, BasisIndex i, uint32_t f);
std::optional<std::pair<BasisIndex, double>> annihilate_at(const Layout &l, BasisIndex i, uint32_t f);

/// Applies p_f^+ or p_f to a state.
StateVector apply_creation(const StateVector &s, uint32_t f);
StateVector apply_annihilation(const StateVector &s, uint32_t f);

}  // namespace fqc

#endif
