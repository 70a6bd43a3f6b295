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

#include "fqc/circuit/circuit_json.h"

#include <stdexcept>

namespace fqc {

using nlohmann::json;

json to_json(const Gate &g) {
    json j;
    j["kind"] = g.name();
    json t = json::array();
    for (const Target &x : g.typed_targets()) {
        t.push_back(x.str());
    }
    j["targets"] = t;
    const GateInfo &info = gate_info(g.kind);
    if (info.has_angle) {
        j["angle"] = g.angle.str();
    }
    if (info.has_molecules) {
        j["N"] = g.molecules;
    }
    return j;
}

Gate gate_from_json(const json &j) {
    auto kind = gate_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) {
        throw std::invalid_argument("unknown gate kind " + j.at("kind").dump());
    }
    Gate g;
    g.kind = *kind;
    const GateInfo &info = gate_info(g.kind);
    const json &t = j.at("targets");
    if (t.size() != info.signature.size()) {
        throw std::invalid_argument("wrong target count for " + std::string(info.name));
    }
    for (size_t k = 0; k < t.size(); k++) {
        Target x = Target::parse(t[k].get<std::string>());
        if (x.kind != info.signature[k]) {
            throw std::invalid_argument("wrong register kind for target " + x.str());
        }
        g.targets.push_back(x.index);
    }
    if (info.has_angle) {
        g.angle = Angle::parse(j.at("angle").get<std::string>());
    }
    if (info.has_molecules) {
        g.molecules = j.at("N").get<double>();
    }
    validate(g);
    return g;
}

json to_json(const Circuit &c) {
    json regs;
    regs["qubits"] = c.registers.qubits;
    regs["fermions"] = c.registers.fermions;
    regs["boson_cutoffs"] = c.registers.boson_cutoffs;
    json ops = json::array();
    for (const Op &op : c.ops) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            ops.push_back(to_json(*g));
        } else if (const auto *m = std::get_if<Measure>(&op)) {
            ops.push_back({{"kind", "MEASURE"}, {"targets", {m->target.str()}}, {"record", m->record}});
        } else if (const auto *cd = std::get_if<Conditioned>(&op)) {
            json when = json::array();
            for (const auto &[r, v] : cd->when) {
                when.push_back({{"record", r}, {"value", v}});
            }
            ops.push_back({{"kind", "IF"}, {"when", when}, {"gate", to_json(cd->gate)}});
        } else if (const auto *r = std::get_if<Reset>(&op)) {
            ops.push_back({{"kind", "RESET"}, {"targets", {r->target.str()}}});
        } else if (const auto *s = std::get_if<MoveSwap>(&op)) {
            ops.push_back({{"kind", "MOVE_SWAP"}, {"targets", {fermion(s->a).str(), fermion(s->b).str()}}});
        }
    }
    return {{"registers", regs}, {"ops", ops}};
}

Circuit circuit_from_json(const json &j) {
    Registers r;
    const json &regs = j.at("registers");
    r.qubits = regs.value("qubits", 0u);
    r.fermions = regs.value("fermions", 0u);
    r.boson_cutoffs = regs.value("boson_cutoffs", std::vector<uint32_t>{});
    Circuit c(r);
    for (const json &op : j.at("ops")) {
        std::string kind = op.at("kind").get<std::string>();
        if (kind == "MEASURE") {
            c.measure(Target::parse(op.at("targets").at(0).get<std::string>()), op.at("record").get<std::string>());
        } else if (kind == "IF") {
            std::vector<std::pair<std::string, int>> when;
            for (const json &w : op.at("when")) {
                when.emplace_back(w.at("record").get<std::string>(), w.at("value").get<int>());
            }
            c.conditioned(when, gate_from_json(op.at("gate")));
        } else if (kind == "RESET") {
            c.reset(Target::parse(op.at("targets").at(0).get<std::string>()));
        } else if (kind == "MOVE_SWAP") {
            Target a = Target::parse(op.at("targets").at(0).get<std::string>());
            Target b = Target::parse(op.at("targets").at(1).get<std::string>());
            c.move_swap(a.index, b.index);
        } else {
            c.add(gate_from_json(op));
        }
    }
    c.validate();
    return c;
}

}  // namespace fqc
