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

#include "fqc/sim/measure.h"

#include <cmath>
#include <stdexcept>

namespace fqc {

uint64_t Rng::derive(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

int read(const Layout &l, BasisIndex i, Target t) {
    switch (t.kind) {
        case RegisterKind::Qubit:
            return l.qubit(i, t.index);
        case RegisterKind::Fermion:
            return l.fermion(i, t.index);
        default:
            throw std::invalid_argument("boson registers cannot be measured here");
    }
}

void check(const Layout &l, Target t) {
    uint32_t n = t.kind == RegisterKind::Qubit ? l.qubits() : l.fermions();
    if (t.kind == RegisterKind::Boson || t.index >= n) {
        throw std::invalid_argument("cannot measure " + t.str());
    }
}

StateVector project(const StateVector &s, Target t, int outcome) {
    StateVector out(s.layout());
    for (const auto &[i, a] : s.amplitudes()) {
        if (read(s.layout(), i, t) == outcome) {
            out.set(i, a);
        }
    }
    return out;
}

}  // namespace

double probability(const StateVector &s, Target t, int outcome) {
    check(s.layout(), t);
    return project(s, t, outcome).norm_squared() / s.norm_squared();
}

Branch branch(const StateVector &s, Target t, int outcome) {
    check(s.layout(), t);
    StateVector p = project(s, t, outcome);
    double prob = p.norm_squared() / s.norm_squared();
    if (prob < 1e-15) {
        throw std::invalid_argument("zero-probability branch requested on " + t.str());
    }
    p.normalize();
    return {prob, p};
}

MeasureResult measure(const StateVector &s, Target t, Rng &rng) {
    double p1 = probability(s, t, 1);
    int outcome = rng.uniform() < p1 ? 1 : 0;
    return {outcome, branch(s, t, outcome).state};
}

StateVector apply_circuit(const StateVector &s, const Circuit &c, const SimOptions &opt) {
    StateVector cur = s;
    for (const Op &op : c.ops) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            cur = apply_gate(cur, *g, opt);
        } else if (const auto *sw = std::get_if<MoveSwap>(&op)) {
            cur = apply_move_swap(cur, sw->a, sw->b);
        } else {
            throw std::invalid_argument("apply_circuit needs a unitary circuit; use run_circuit");
        }
    }
    return cur;
}

RunResult run_circuit(const StateVector &s, const Circuit &c, Rng *rng, const std::map<std::string, int> &forced,
                      const SimOptions &opt) {
    RunResult r{s, {}, 1};
    auto sample = [&](Target t, const std::string &record) {
        auto it = forced.find(record);
        if (it != forced.end()) {
            Branch b = branch(r.state, t, it->second);
            r.probability *= b.probability;
            r.state = std::move(b.state);
            return it->second;
        }
        if (!rng) {
            throw std::invalid_argument("measurement '" + record + "' needs an rng or a forced outcome");
        }
        MeasureResult m = measure(r.state, t, *rng);
        r.state = std::move(m.state);
        return m.outcome;
    };
    int resets = 0;
    for (const Op &op : c.ops) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            r.state = apply_gate(r.state, *g, opt);
        } else if (const auto *sw = std::get_if<MoveSwap>(&op)) {
            r.state = apply_move_swap(r.state, sw->a, sw->b);
        } else if (const auto *m = std::get_if<Measure>(&op)) {
            r.records[m->record] = sample(m->target, m->record);
        } else if (const auto *cd = std::get_if<Conditioned>(&op)) {
            bool fire = true;
            for (const auto &[rec, v] : cd->when) {
                auto it = r.records.find(rec);
                if (it == r.records.end()) {
                    throw std::invalid_argument("record '" + rec + "' not yet measured");
                }
                fire = fire && it->second == v;
            }
            if (fire) {
                r.state = apply_gate(r.state, cd->gate, opt);
            }
        } else if (const auto *rs = std::get_if<Reset>(&op)) {
            std::string rec = "__reset" + std::to_string(resets++);
            int v = sample(rs->target, rec);
            if (v == 1) {
                if (rs->target.kind == RegisterKind::Qubit) {
                    r.state = apply_gate(r.state, gates::x(rs->target.index), opt);
                } else {
                    r.state = apply_annihilation(r.state, rs->target.index);
                }
            }
        }
    }
    return r;
}

}  // namespace fqc
