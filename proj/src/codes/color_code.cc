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

#include "fqc/codes/color_code.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fqc {

StabilizerCode build_color_code(uint32_t d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("colour code distance must be odd and at least 3");
    }
    const int b = static_cast<int>(3 * (d - 1) / 2);
    auto is_centre = [](int r, int c) { return (r + c + 1) % 3 == 0; };
    auto inside = [b](int r, int c) { return r >= 0 && r <= b && c >= 0 && c <= r; };

    StabilizerCode code;
    code.name = "color";
    code.distance = d;
    code.layout.kind = "triangular";
    std::map<std::pair<int, int>, uint32_t> site_of;
    for (int r = 0; r <= b; r++) {
        for (int c = 0; c <= r; c++) {
            if (!is_centre(r, c)) {
                site_of[{r, c}] = static_cast<uint32_t>(code.layout.coords.size());
                code.layout.coords.emplace_back(r, c);
            }
        }
    }
    code.n_sites = static_cast<uint32_t>(code.layout.coords.size());

    static constexpr int kNeighbours[6][2] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
    for (int r = 0; r <= b; r++) {
        for (int c = 0; c <= r; c++) {
            if (!is_centre(r, c)) continue;
            Plaquette p;
            p.color = r % 3;
            for (const auto &off : kNeighbours) {
                int rr = r + off[0], cc = c + off[1];
                if (inside(rr, cc) && !is_centre(rr, cc)) p.sites.push_back(site_of.at({rr, cc}));
            }
            std::sort(p.sites.begin(), p.sites.end());
            code.layout.plaquettes.push_back(p);
        }
    }
    for (const Plaquette &p : code.layout.plaquettes) {
        std::vector<uint32_t> eta;
        for (uint32_t s : p.sites) eta.push_back(2 * s);
        code.generators.push_back(hermitian_product(eta));
    }
    // The gamma~ partner is signed so that the pair multiplies to the plaquette
    // parity prod Z^f_i. The vacuum then sits in a +1 sector of every such product,
    // and transversal CZf keeps the stabilizer group for weight-6 plaquettes too.
    for (size_t k = 0; k < code.layout.plaquettes.size(); k++) {
        const Plaquette &p = code.layout.plaquettes[k];
        std::vector<uint32_t> eta;
        MajoranaQubitString parity;
        for (uint32_t s : p.sites) {
            eta.push_back(2 * s + 1);
            parity = parity * MajoranaQubitString::parity(s);
        }
        MajoranaQubitString gt = hermitian_product(eta);
        if ((code.generators[k] * gt).phase() != parity.phase()) gt = Phase::minus_one() * gt;
        code.generators.push_back(gt);
    }
    set_total_parity_logicals(code);
    return code;
}

}  // namespace fqc
