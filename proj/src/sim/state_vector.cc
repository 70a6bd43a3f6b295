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

#include "fqc/sim/state_vector.h"

#include <algorithm>
#include <cmath>

namespace fqc {

std::optional<std::pair<BasisIndex, double>> create_at(const Layout &l, BasisIndex i, uint32_t f) {
    if (l.fermion(i, f)) {
        return std::nullopt;
    }
    double sign = (l.occupied_before(i, f) & 1) ? -1.0 : 1.0;
    return std::make_pair(l.flip_fermion(i, f), sign);
}

std::optional<std::pair<BasisIndex, double>> annihilate_at(const Layout &l, BasisIndex i, uint32_t f) {
    if (!l.fermion(i, f)) {
        return std::nullopt;
    }
    double sign = (l.occupied_before(i, f) & 1) ? -1.0 : 1.0;
    return std::make_pair(l.flip_fermion(i, f), sign);
}

StateVector StateVector::basis_state(const Layout &layout, const Occupation &occ) {
    Occupation bare = occ;
    std::fill(bare.fermions.begin(), bare.fermions.end(), 0);
    StateVector s(layout);
    s.set(layout.encode(bare), 1.0);
    for (uint32_t f = 0; f < occ.fermions.size(); f++) {
        if (occ.fermions[f] == 1) {
            s = apply_creation(s, f);
        } else if (occ.fermions[f] != 0) {
            throw std::invalid_argument("fermion occupation must be 0 or 1");
        }
    }
    return s;
}

StateVector StateVector::from_dense(const Layout &layout, const Eigen::VectorXcd &v, double tol) {
    if (static_cast<double>(v.size()) != layout.dimension()) {
        throw std::invalid_argument("dense vector dimension does not match layout");
    }
    StateVector s(layout);
    for (Eigen::Index k = 0; k < v.size(); k++) {
        if (std::abs(v[k]) > tol) {
            s.set(static_cast<BasisIndex>(k), v[k]);
        }
    }
    return s;
}

cplx StateVector::amplitude(BasisIndex i) const {
    auto it = amps_.find(i);
    return it == amps_.end() ? cplx(0) : it->second;
}

void StateVector::set(BasisIndex i, cplx a) {
    if (a == cplx(0)) {
        amps_.erase(i);
    } else {
        amps_[i] = a;
    }
}

void StateVector::add(BasisIndex i, cplx a) {
    if (a != cplx(0)) {
        amps_[i] += a;
    }
}

std::vector<BasisIndex> StateVector::sorted_support() const {
    std::vector<BasisIndex> out;
    out.reserve(amps_.size());
    for (const auto &[i, a] : amps_) {
        out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double StateVector::norm_squared() const {
    double n = 0;
    for (BasisIndex i : sorted_support()) {
        n += std::norm(amps_.at(i));
    }
    return n;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

void StateVector::normalize() {
    double n = norm();
    if (n == 0) {
        throw std::runtime_error("cannot normalize the zero vector");
    }
    scale(1 / n);
}

void StateVector::scale(cplx c) {
    for (auto &[i, a] : amps_) {
        a *= c;
    }
}

void StateVector::prune(double tol) {
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (std::abs(it->second) <= tol) {
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
}

cplx StateVector::inner(const StateVector &other) const {
    cplx acc = 0;
    const StateVector &small = amps_.size() <= other.amps_.size() ? *this : other;
    std::vector<BasisIndex> keys = small.sorted_support();
    for (BasisIndex i : keys) {
        acc += std::conj(amplitude(i)) * other.amplitude(i);
    }
    return acc;
}

StateVector &StateVector::operator+=(const StateVector &o) {
    for (const auto &[i, a] : o.amps_) {
        add(i, a);
    }
    return *this;
}

Eigen::VectorXcd StateVector::to_dense() const {
    double dim = layout_.dimension();
    if (dim > (1 << 24)) {
        throw std::invalid_argument("layout too large for a dense vector");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (const auto &[i, a] : amps_) {
        v[static_cast<Eigen::Index>(i)] = a;
    }
    return v;
}

nlohmann::json StateVector::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (BasisIndex i : sorted_support()) {
        cplx a = amps_.at(i);
        out.push_back({{"basis", layout_.label(i)}, {"amp", {a.real(), a.imag()}}});
    }
    return out;
}

StateVector apply_creation(const StateVector &s, uint32_t f) {
    StateVector out(s.layout());
    for (const auto &[i, a] : s.amplitudes()) {
        if (auto img = create_at(s.layout(), i, f)) {
            out.add(img->first, a * img->second);
        }
    }
    return out;
}

StateVector apply_annihilation(const StateVector &s, uint32_t f) {
    StateVector out(s.layout());
    for (const auto &[i, a] : s.amplitudes()) {
        if (auto img = annihilate_at(s.layout(), i, f)) {
            out.add(img->first, a * img->second);
        }
    }
    return out;
}

}  // namespace fqc
