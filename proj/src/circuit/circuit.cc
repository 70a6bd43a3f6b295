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

#include "fqc/circuit/circuit.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fqc {

bool Registers::contains(const Target &t) const {
    switch (t.kind) {
        case RegisterKind::Qubit:
            return t.index < qubits;
        case RegisterKind::Fermion:
            return t.index < fermions;
        default:
            return t.index < boson_cutoffs.size();
    }
}

Circuit &Circuit::add(const Gate &g) {
    fqc::validate(g);
    ops.emplace_back(g);
    return *this;
}

Circuit &Circuit::add(const std::vector<Gate> &gs) {
    for (const Gate &g : gs) {
        add(g);
    }
    return *this;
}

Circuit &Circuit::measure(Target t, std::string record) {
    ops.emplace_back(Measure{t, std::move(record)});
    return *this;
}

Circuit &Circuit::conditioned(std::vector<std::pair<std::string, int>> when, const Gate &g) {
    fqc::validate(g);
    ops.emplace_back(Conditioned{std::move(when), g});
    return *this;
}

Circuit &Circuit::reset(Target t) {
    ops.emplace_back(Reset{t});
    return *this;
}

Circuit &Circuit::move_swap(uint32_t a, uint32_t b) {
    if (a == b) {
        throw std::invalid_argument("move-swap needs two distinct modes");
    }
    ops.emplace_back(MoveSwap{a, b});
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    registers.qubits = std::max(registers.qubits, other.registers.qubits);
    registers.fermions = std::max(registers.fermions, other.registers.fermions);
    auto &mine = registers.boson_cutoffs;
    const auto &theirs = other.registers.boson_cutoffs;
    if (mine.size() < theirs.size()) {
        mine.resize(theirs.size(), 0);
    }
    for (size_t k = 0; k < theirs.size(); k++) {
        mine[k] = std::max(mine[k], theirs[k]);
    }
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    return *this;
}

bool Circuit::is_unitary() const {
    for (const Op &op : ops) {
        if (!std::holds_alternative<Gate>(op) && !std::holds_alternative<MoveSwap>(op)) {
            return false;
        }
    }
    return true;
}

Circuit Circuit::inverse() const {
    Circuit out(registers);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (const auto *g = std::get_if<Gate>(&*it)) {
            out.add(fqc::inverse(*g));
        } else if (const auto *s = std::get_if<MoveSwap>(&*it)) {
            out.move_swap(s->a, s->b);
        } else {
            throw std::invalid_argument("cannot invert a circuit with measurements, resets or conditioned gates");
        }
    }
    return out;
}

std::vector<Gate> Circuit::gates() const {
    std::vector<Gate> out;
    for (const Op &op : ops) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            out.push_back(*g);
        }
    }
    return out;
}

void Circuit::validate() const {
    std::set<std::string> records;
    auto check = [&](const Target &t) {
        if (!registers.contains(t)) {
            throw std::invalid_argument("target " + t.str() + " outside declared registers");
        }
    };
    for (const Op &op : ops) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            fqc::validate(*g);
            for (const Target &t : g->typed_targets()) {
                check(t);
            }
        } else if (const auto *m = std::get_if<Measure>(&op)) {
            if (m->target.kind == RegisterKind::Boson) {
                throw std::invalid_argument("boson measurement is not supported");
            }
            check(m->target);
            records.insert(m->record);
        } else if (const auto *c = std::get_if<Conditioned>(&op)) {
            for (const auto &[r, v] : c->when) {
                if (!records.count(r)) {
                    throw std::invalid_argument("record '" + r + "' used before it is measured");
                }
            }
            for (const Target &t : c->gate.typed_targets()) {
                check(t);
            }
        } else if (const auto *r = std::get_if<Reset>(&op)) {
            check(r->target);
        } else if (const auto *s = std::get_if<MoveSwap>(&op)) {
            check(fermion(s->a));
            check(fermion(s->b));
        }
    }
}

}  // namespace fqc
