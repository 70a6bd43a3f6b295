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

#include "fqc/codes/encoding.h"

#include <optional>
#include <stdexcept>

#include "fqc/codes/syndrome.h"
#include "fqc/sim/apply_string.h"

namespace fqc {

namespace {

using MQS = MajoranaQubitString;

/// Solves A x = b over GF(2); rows of A are equations.
std::optional<std::vector<uint8_t>> solve_gf2(std::vector<std::vector<uint8_t>> a, std::vector<uint8_t> b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; col++) {
        size_t piv = r;
        while (piv < rows && !a[piv][col]) piv++;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        for (size_t o = 0; o < rows; o++) {
            if (o != r && a[o][col]) {
                for (size_t c = col; c < cols; c++) a[o][c] ^= a[r][c];
                b[o] ^= b[r];
            }
        }
        pivot_col.push_back(col);
        r++;
    }
    for (size_t o = r; o < rows; o++) {
        if (b[o]) return std::nullopt;
    }
    std::vector<uint8_t> x(cols, 0);
    for (size_t k = 0; k < r; k++) x[pivot_col[k]] = b[k];
    return x;
}

std::vector<uint8_t> support(const MQS &s, uint32_t n_eta) {
    std::vector<uint8_t> v(n_eta, 0);
    for (uint32_t e : s.majoranas()) v[e] = 1;
    return v;
}

}  // namespace

Circuit repetition_encoder(uint32_t n) {
    Circuit c = Circuit::fermions(n);
    for (uint32_t k = 0; k + 1 < n; k++) {
        c.add(gates::braid(k, k + 1)).add(gates::sf_dag(k + 1));
    }
    return c;
}

std::vector<MQS> destabilizers(const StabilizerCode &code) {
    const uint32_t n_eta = 2 * code.n_sites;
    // For an even string the commutation with any string is the overlap parity.
    std::vector<std::vector<uint8_t>> a;
    for (const MQS &g : code.generators) a.push_back(support(g, n_eta));
    a.push_back(support(code.logical_gamma, n_eta));
    a.push_back(support(code.logical_gamma_tilde, n_eta));
    a.push_back(std::vector<uint8_t>(n_eta, 1));
    std::vector<MQS> out;
    for (size_t k = 0; k < code.generators.size(); k++) {
        std::vector<uint8_t> b(a.size(), 0);
        b[k] = 1;
        auto x = solve_gf2(a, b);
        if (!x) {
            throw std::logic_error("no destabilizer for generator " + std::to_string(k));
        }
        std::vector<uint32_t> eta;
        for (uint32_t e = 0; e < n_eta; e++)
            if ((*x)[e]) eta.push_back(e);
        out.push_back(hermitian_product(eta));
    }
    return out;
}

Circuit measurement_preparation(const StabilizerCode &code, bool tracked) {
    Circuit c = syndrome_circuit(code, 0, 0);
    if (tracked) return c;
    auto ds = destabilizers(code);
    for (size_t k = 0; k < ds.size(); k++) {
        for (const Gate &g : string_circuit(ds[k]).gates()) {
            c.conditioned({{syndrome_record(0, k), 1}}, g);
        }
    }
    return c;
}

Circuit encoding_circuit(const StabilizerCode &code) {
    if (code.name == "repetition") return repetition_encoder(code.n_sites);
    return measurement_preparation(code, false);
}

StateVector project_codespace(const StabilizerCode &code, const StateVector &s) {
    StateVector out = s;
    for (const MQS &g : code.generators) {
        out = apply_operator(out, 0.5 * (OperatorSum::identity() + OperatorSum(g)));
    }
    return out;
}

LogicalBasis logical_basis(const StabilizerCode &code, const Layout &layout) {
    if (layout.fermions() < code.n_sites) {
        throw std::invalid_argument("layout is smaller than the code");
    }
    OperatorSum empty = OperatorSum::identity() - code.logical_number();
    // Walk fermion basis states until one has weight in the codespace.
    const uint64_t limit = uint64_t{1} << std::min<uint32_t>(code.n_sites, 20);
    for (uint64_t bits = 0; bits < limit; bits++) {
        Occupation occ;
        occ.fermions.assign(layout.fermions(), 0);
        for (uint32_t f = 0; f < code.n_sites; f++) occ.fermions[f] = (bits >> f) & 1;
        StateVector z = apply_operator(project_codespace(code, StateVector::basis_state(layout, occ)), empty);
        if (z.norm() < 1e-6) continue;
        z.normalize();
        z.prune();
        StateVector o = apply_operator(z, code.logical_creation());
        o.prune();
        return {z, o};
    }
    throw std::logic_error("codespace is empty");
}

}  // namespace fqc
