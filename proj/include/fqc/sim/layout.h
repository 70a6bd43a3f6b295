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

#ifndef FQC_SIM_LAYOUT_H
#define FQC_SIM_LAYOUT_H

#include <cstdint>
#include <string>
#include <vector>

#include "fqc/circuit/circuit.h"

namespace fqc {

using BasisIndex = uint64_t;

struct Occupation {
    std::vector<int> qubits;
    std::vector<int> fermions;
    std::vector<uint32_t> bosons;
};

/// Mixed-radix basis: qubits, then fermion modes (JW order), then boson modes. Register 0 is most significant.
class Layout {
   public:
    Layout() = default;
    Layout(uint32_t n_qubits, uint32_t n_fermions, std::vector<uint32_t> boson_cutoffs = {});
    static Layout from(const Registers &r) { return Layout(r.qubits, r.fermions, r.boson_cutoffs); }

    uint32_t qubits() const { return nq_; }
    uint32_t fermions() const { return nf_; }
    uint32_t bosons() const { return static_cast<uint32_t>(cutoffs_.size()); }
    uint32_t cutoff(uint32_t m) const { return cutoffs_.at(m); }
    const std::vector<uint32_t> &cutoffs() const { return cutoffs_; }
    /// Hilbert-space dimension as a double (can exceed 2^64 in principle).
    double dimension() const;

    int qubit(BasisIndex i, uint32_t q) const { return static_cast<int>((i / qstride_[q]) & 1); }
    int fermion(BasisIndex i, uint32_t f) const { return static_cast<int>((i / fstride_[f]) & 1); }
    uint32_t boson(BasisIndex i, uint32_t m) const {
        return static_cast<uint32_t>((i / bstride_[m]) % (cutoffs_[m] + 1));
    }
    BasisIndex flip_qubit(BasisIndex i, uint32_t q) const { return qubit(i, q) ? i - qstride_[q] : i + qstride_[q]; }
    BasisIndex flip_fermion(BasisIndex i, uint32_t f) const {
        return fermion(i, f) ? i - fstride_[f] : i + fstride_[f];
    }
    BasisIndex with_boson(BasisIndex i, uint32_t m, uint32_t n) const {
        return i - static_cast<BasisIndex>(boson(i, m)) * bstride_[m] + static_cast<BasisIndex>(n) * bstride_[m];
    }
    /// Number of occupied fermion modes j < f.
    int occupied_before(BasisIndex i, uint32_t f) const;
    int fermion_number(BasisIndex i) const;

    BasisIndex encode(const Occupation &o) const;
    Occupation decode(BasisIndex i) const;
    /// "q:01 f:10 b:3,0"
    std::string label(BasisIndex i) const;
    bool operator==(const Layout &o) const { return nq_ == o.nq_ && nf_ == o.nf_ && cutoffs_ == o.cutoffs_; }

   private:
    uint32_t nq_ = 0;
    uint32_t nf_ = 0;
    std::vector<uint32_t> cutoffs_;
    std::vector<BasisIndex> qstride_;
    std::vector<BasisIndex> fstride_;
    std::vector<BasisIndex> bstride_;
    BasisIndex fblock_ = 1;
};

}  // namespace fqc

#endif
