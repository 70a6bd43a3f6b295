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

#include "fqc/sim/layout.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fqc {

Layout::Layout(uint32_t n_qubits, uint32_t n_fermions, std::vector<uint32_t> boson_cutoffs)
    : nq_(n_qubits), nf_(n_fermions), cutoffs_(std::move(boson_cutoffs)) {
    double log2dim = n_qubits + n_fermions;
    for (uint32_t c : cutoffs_) {
        log2dim += std::log2(static_cast<double>(c) + 1);
    }
    if (log2dim > 62) {
        throw std::invalid_argument("register layout too large to index");
    }
    BasisIndex stride = 1;
    bstride_.resize(cutoffs_.size());
    for (size_t m = cutoffs_.size(); m-- > 0;) {
        bstride_[m] = stride;
        stride *= cutoffs_[m] + 1;
    }
    fblock_ = stride;
    fstride_.resize(nf_);
    for (size_t f = nf_; f-- > 0;) {
        fstride_[f] = stride;
        stride *= 2;
    }
    qstride_.resize(nq_);
    for (size_t q = nq_; q-- > 0;) {
        qstride_[q] = stride;
        stride *= 2;
    }
}

double Layout::dimension() const {
    double d = std::ldexp(1.0, static_cast<int>(nq_ + nf_));
    for (uint32_t c : cutoffs_) {
        d *= c + 1.0;
    }
    return d;
}

int Layout::occupied_before(BasisIndex i, uint32_t f) const {
    if (f == 0) {
        return 0;
    }
    uint64_t bits = (i / fblock_) & ((nf_ >= 64) ? ~0ull : ((1ull << nf_) - 1));
    return std::popcount(bits >> (nf_ - f));
}

int Layout::fermion_number(BasisIndex i) const {
    uint64_t bits = (i / fblock_) & ((nf_ >= 64) ? ~0ull : ((1ull << nf_) - 1));
    return std::popcount(bits);
}

BasisIndex Layout::encode(const Occupation &o) const {
    if (o.qubits.size() > nq_ || o.fermions.size() > nf_ || o.bosons.size() > cutoffs_.size()) {
        throw std::invalid_argument("occupation has more registers than the layout");
    }
    BasisIndex i = 0;
    for (size_t q = 0; q < o.qubits.size(); q++) {
        if (o.qubits[q] != 0 && o.qubits[q] != 1) {
            throw std::invalid_argument("qubit occupation must be 0 or 1");
        }
        i += o.qubits[q] * qstride_[q];
    }
    for (size_t f = 0; f < o.fermions.size(); f++) {
        if (o.fermions[f] != 0 && o.fermions[f] != 1) {
            throw std::invalid_argument("fermion occupation must be 0 or 1");
        }
        i += o.fermions[f] * fstride_[f];
    }
    for (size_t m = 0; m < o.bosons.size(); m++) {
        if (o.bosons[m] > cutoffs_[m]) {
            throw std::invalid_argument("boson occupation " + std::to_string(o.bosons[m]) + " exceeds cutoff " +
                                        std::to_string(cutoffs_[m]));
        }
        i += o.bosons[m] * bstride_[m];
    }
    return i;
}

Occupation Layout::decode(BasisIndex i) const {
    Occupation o;
    for (uint32_t q = 0; q < nq_; q++) {
        o.qubits.push_back(qubit(i, q));
    }
    for (uint32_t f = 0; f < nf_; f++) {
        o.fermions.push_back(fermion(i, f));
    }
    for (uint32_t m = 0; m < bosons(); m++) {
        o.bosons.push_back(boson(i, m));
    }
    return o;
}

std::string Layout::label(BasisIndex i) const {
    std::ostringstream out;
    Occupation o = decode(i);
    bool sep = false;
    if (nq_) {
        out << "q:";
        for (int b : o.qubits) out << b;
        sep = true;
    }
    if (nf_) {
        out << (sep ? " " : "") << "f:";
        for (int b : o.fermions) out << b;
        sep = true;
    }
    if (!cutoffs_.empty()) {
        out << (sep ? " " : "") << "b:";
        for (size_t m = 0; m < o.bosons.size(); m++) {
            out << (m ? "," : "") << o.bosons[m];
        }
    }
    return out.str();
}

}  // namespace fqc
