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

#include "fqc/circuit/resources.h"

#include <algorithm>

namespace fqc {

nlohmann::json ResourceReport::to_json() const {
    return {{"counts", counts},         {"gates", gates},
            {"cliffords", cliffords},   {"rotations", rotations},
            {"braids", braids},         {"single_fermion", single_fermion},
            {"two_qubit", two_qubit},   {"measurements", measurements},
            {"swaps", swaps},           {"depth", depth},
            {"rotation_depth", rotation_depth}};
}

ResourceReport count_resources(const Circuit &c, const ResourceOptions &opt) {
    ResourceReport r;
    std::map<Target, size_t> level;
    std::map<Target, size_t> rot_level;
    std::map<std::string, size_t> record_level;
    std::map<std::string, size_t> record_rot;

    auto place = [&](const std::vector<Target> &ts, size_t floor, size_t rot_floor, bool rotation) {
        size_t l = floor;
        size_t rl = rot_floor;
        for (const Target &t : ts) {
            l = std::max(l, level[t]);
            rl = std::max(rl, rot_level[t]);
        }
        l += 1;
        if (rotation) {
            rl += 1;
        }
        for (const Target &t : ts) {
            level[t] = l;
            rot_level[t] = rl;
        }
        r.depth = std::max(r.depth, l);
        r.rotation_depth = std::max(r.rotation_depth, rl);
        return std::make_pair(l, rl);
    };
    auto tally = [&](const Gate &g) {
        r.counts[g.name()]++;
        r.gates++;
        bool cl = opt.clifford(g);
        if (cl) {
            r.cliffords++;
        } else {
            r.rotations++;
        }
        if (is_braid_class(g)) {
            r.braids++;
        }
        if (is_single_fermion(g)) {
            r.single_fermion++;
        }
        const auto &sig = gate_info(g.kind).signature;
        if (sig.size() == 2 && sig[0] == RegisterKind::Qubit && sig[1] == RegisterKind::Qubit) {
            r.two_qubit++;
        }
        return !cl;
    };

    for (const Op &op : c.ops) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            bool rot = tally(*g);
            place(g->typed_targets(), 0, 0, rot);
        } else if (const auto *m = std::get_if<Measure>(&op)) {
            r.measurements++;
            r.counts["MEASURE"]++;
            auto [l, rl] = place({m->target}, 0, 0, false);
            record_level[m->record] = l;
            record_rot[m->record] = rl;
        } else if (const auto *cd = std::get_if<Conditioned>(&op)) {
            bool rot = tally(cd->gate);
            size_t floor = 0;
            size_t rfloor = 0;
            for (const auto &[rec, v] : cd->when) {
                floor = std::max(floor, record_level[rec]);
                rfloor = std::max(rfloor, record_rot[rec]);
            }
            place(cd->gate.typed_targets(), floor, rfloor, rot);
        } else if (const auto *rs = std::get_if<Reset>(&op)) {
            r.counts["RESET"]++;
            place({rs->target}, 0, 0, false);
        } else if (const auto *sw = std::get_if<MoveSwap>(&op)) {
            r.swaps++;
            Target a = fermion(sw->a);
            Target b = fermion(sw->b);
            if (opt.swaps_cost_depth) {
                place({a, b}, 0, 0, false);
            } else {
                // The moved atoms carry their schedule with them.
                std::swap(level[a], level[b]);
                std::swap(rot_level[a], rot_level[b]);
            }
        }
    }
    return r;
}

}  // namespace fqc
