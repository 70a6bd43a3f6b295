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

#include "fqc/pairing/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

#include "fqc/sim/measure.h"

namespace fqc {

namespace {

// Runs f(0..n-1) on a small worker pool; results land in index order so the output is deterministic.
template <class F>
auto parallel_map(size_t n, F f) -> std::vector<decltype(f(size_t{0}))> {
    std::vector<decltype(f(size_t{0}))> out(n);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k = next++; k < n; k = next++) out[k] = f(k);
    };
    size_t threads = std::min<size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (size_t t = 1; t < threads; t++) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();
    return out;
}

std::vector<double> weighted_sum(const std::vector<std::vector<double>> &rows, const std::vector<double> &w) {
    std::vector<double> out(rows.at(0).size(), 0.0);
    for (size_t k = 0; k < rows.size(); k++) {
        for (size_t c = 0; c < out.size(); c++) out[c] += w[k] * rows[k][c];
    }
    return out;
}

StateVector fock_state(const Registers &r, const std::vector<int> &fermions, uint32_t source_molecules) {
    Layout l = Layout::from(r);
    std::vector<uint32_t> bosons(r.bosons(), 0);
    bosons[1] = source_molecules;
    return StateVector::basis_state(l, {{}, fermions, bosons});
}

// The source sits in mode 1; bs(0, 1, t) leaves mode 0 with sin^2 t of the molecules. Taking the
// source in the second slot gives both outputs the same sign under b, so pulses from either mode share
// one phase reference.
Gate split(double fraction_to_mode0) { return gates::bs(0, 1, Angle::radians(std::asin(std::sqrt(fraction_to_mode0)))); }

double fidelity(const DensityMatrixOnSubspace &target, const DensityMatrixOnSubspace &rho) {
    return (target.matrix.adjoint() * rho.matrix).trace().real();
}

Circuit ideal_pair(uint32_t fermions, uint32_t i, uint32_t j, Angle phi) {
    Circuit c = Circuit::fermions(fermions);
    c.add(gates::pair_ideal(i, j, phi));
    return c;
}

}  // namespace

std::vector<std::pair<uint32_t, double>> MoleculeInput::weights() const {
    if (!(n >= 0)) throw std::invalid_argument("molecule number must be non-negative");
    if (source == MoleculeSource::Fock) {
        if (n != std::floor(n)) throw std::invalid_argument("Fock input needs an integer molecule number");
        return {{static_cast<uint32_t>(n), 1.0}};
    }
    if (n == 0) return {{0, 1.0}};
    std::vector<std::pair<uint32_t, double>> w;
    double total = 0;
    const auto peak = static_cast<uint32_t>(std::floor(n));
    for (uint32_t k = 0;; k++) {
        double lp = k * std::log(n) - n - std::lgamma(k + 1.0);
        double p = std::exp(lp);
        if (p >= 1e-13) {
            w.emplace_back(k, p);
            total += p;
        } else if (k > peak) {
            break;
        }
    }
    for (auto &[k, p] : w) p /= total;
    return w;
}

uint32_t MoleculeInput::max_occupation() const {
    uint32_t m = 0;
    for (const auto &[k, p] : weights()) m = std::max(m, k);
    return m;
}

std::string to_string(Wiring w) { return w == Wiring::Same ? "same" : "cross"; }

Wiring parse_wiring(const std::string &text) {
    if (text == "same") return Wiring::Same;
    if (text == "cross") return Wiring::Cross;
    throw std::invalid_argument("unknown wiring: " + text);
}

std::vector<double> theta_grid(size_t points) {
    std::vector<double> t;
    for (size_t k = 0; k < points; k++) t.push_back(2 * M_PI * static_cast<double>(k) / static_cast<double>(points));
    return t;
}

nlohmann::json FringeData::to_json() const {
    return {{"N", input.n},          {"source", to_string(input.source)}, {"wiring", to_string(wiring)},
            {"theta", theta},        {"p_full", p_full},                  {"p_empty", p_empty},
            {"fit", fit.to_json()}};
}

FringeData ramsey(const MoleculeInput &input, const std::vector<double> &theta, Wiring wiring) {
    if (theta.size() < 16) throw std::invalid_argument("ramsey: the theta grid needs at least 16 points");
    PairingConfig cfg;
    cfg.molecules = input.n / 2;
    cfg.sites = 2;
    cfg.source = input.source;
    const uint32_t top = input.max_occupation();
    cfg.cutoffs = {top, top};
    const Registers regs = cfg.registers();
    const Circuit first = pair_circuit(0, 1, 0, cfg);
    const Circuit second = pair_circuit(0, 1, wiring == Wiring::Same ? 0 : 1, cfg);
    const std::vector<FermionLabel> labels = {cfg.label("11"), cfg.label("00")};

    auto w = input.weights();
    std::vector<double> weights;
    for (const auto &[k, p] : w) weights.push_back(p);
    auto per_n = parallel_map(w.size(), [&](size_t idx) {
        StateVector s = apply_gate(fock_state(regs, std::vector<int>(regs.fermions, 0), w[idx].first), split(0.5));
        s = apply_circuit(s, first);
        std::vector<double> row;
        for (double t : theta) {
            Circuit c(regs);
            c.add(gates::phase_f(0, Angle::radians(t))).append(second);
            std::vector<double> pops = measure_populations(apply_circuit(s, c), labels);
            row.insert(row.end(), pops.begin(), pops.end());
        }
        return row;
    });
    std::vector<double> avg = weighted_sum(per_n, weights);

    FringeData out;
    out.input = input;
    out.wiring = wiring;
    out.theta = theta;
    for (size_t k = 0; k < theta.size(); k++) {
        out.p_full.push_back(avg[2 * k]);
        out.p_empty.push_back(avg[2 * k + 1]);
    }
    out.fit = fit_fringe(out.theta, out.p_full);
    return out;
}

nlohmann::json BellResult::to_json() const {
    return {{"N1", n1},
            {"N2", n2},
            {"model", model == PulseModel::Protocol ? "protocol" : "ideal"},
            {"rho", rho.to_json()},
            {"target", target.to_json()},
            {"infidelity", infidelity}};
}

BellResult bell_experiment(uint32_t n1, uint32_t n2, PulseModel model) {
    const bool ideal = model == PulseModel::Ideal;
    if (!ideal && (n1 == 0 || n2 == 0)) throw std::invalid_argument("bell_experiment: both modes need molecules");
    PairingConfig cfg;
    cfg.sites = 2;
    const uint32_t total = ideal ? 0 : n1 + n2;
    cfg.cutoffs = {total, total};
    const Registers regs = cfg.registers();
    const uint32_t nf = regs.fermions;
    const std::vector<FermionLabel> labels = {cfg.label("00"), cfg.label("11")};

    auto pulse = [&](uint32_t mode, uint32_t n, Angle phi) {
        if (ideal) {
            Circuit c(regs);
            return c.add(gates::pair_ideal(0, 1, phi));
        }
        PairingConfig p = cfg;
        p.molecules = n;
        p.phi = phi;
        return pair_circuit(0, 1, mode, p);
    };

    StateVector s = fock_state(regs, std::vector<int>(nf, 0), total);
    if (!ideal) s = apply_gate(s, split(static_cast<double>(n1) / total));
    s = apply_circuit(s, pulse(1, n2, Angle()));

    std::vector<Circuit> measured = {Circuit(regs), pulse(0, n1, Angle()), pulse(0, n1, Angle::pi_fraction(1, 2))};
    std::vector<Circuit> model_rot = {Circuit::fermions(nf), ideal_pair(nf, 0, 1, Angle()),
                                      ideal_pair(nf, 0, 1, Angle::pi_fraction(1, 2))};
    auto pops = parallel_map(measured.size(),
                             [&](size_t k) { return measure_populations(apply_circuit(s, measured[k]), labels); });

    BellResult out;
    out.n1 = n1;
    out.n2 = n2;
    out.model = model;
    out.rho = reconstruct(nf, model_rot, labels, pops);
    StateVector vac = StateVector::basis_state(Layout(0, nf, {}), {{}, std::vector<int>(nf, 0), {}});
    out.target = project_density(apply_circuit(vac, ideal_pair(nf, 0, 1, Angle())), labels);
    out.infidelity = 1 - fidelity(out.target, out.rho);
    return out;
}

nlohmann::json ChoiResult::to_json() const {
    return {{"N1", n1},
            {"N2", n2},
            {"source", to_string(source)},
            {"model", model == PulseModel::Protocol ? "protocol" : "ideal"},
            {"rho", rho.to_json()},
            {"entanglement_fidelity", entanglement_fidelity},
            {"entanglement_infidelity", entanglement_infidelity()},
            {"average_infidelity", average_infidelity}};
}

ChoiResult choi_experiment(uint32_t n1, uint32_t n2, MoleculeSource source, PulseModel model) {
    const bool ideal = model == PulseModel::Ideal;
    if (!ideal && (n1 == 0 || n2 == 0)) throw std::invalid_argument("choi_experiment: both modes need molecules");
    const MoleculeInput input{ideal ? 0.0 : static_cast<double>(n1) + n2, ideal ? MoleculeSource::Fock : source};
    PairingConfig cfg;
    cfg.sites = 4;
    const uint32_t top = input.max_occupation();
    cfg.cutoffs = {top, top};
    const Registers regs = cfg.registers();
    const uint32_t nf = regs.fermions;
    const std::vector<FermionLabel> labels = {cfg.label("0000"), cfg.label("0011"), cfg.label("1100"),
                                              cfg.label("1111")};
    const std::vector<int> empty(nf, 0);
    std::vector<int> full = empty;
    for (uint32_t f = 0; f < 4; f++) full[f] = 1;

    auto system_pulse = [&](uint32_t mode, uint32_t n, Angle phi) {
        if (ideal) {
            Circuit c(regs);
            return c.add(gates::pair_ideal(0, 1, phi));
        }
        PairingConfig p = cfg;
        p.molecules = n;
        p.phi = phi;
        return pair_circuit(0, 1, mode, p);
    };

    // Settings: none, phase 0 and phase pi/2 on the system and on the ancilla.
    const std::vector<std::optional<Angle>> phases = {std::nullopt, Angle(), Angle::pi_fraction(1, 2)};
    std::vector<Circuit> measured;
    std::vector<Circuit> model_rot;
    for (const auto &ps : phases) {
        for (const auto &pa : phases) {
            Circuit m(regs);
            Circuit r = Circuit::fermions(nf);
            if (ps) {
                m.append(system_pulse(0, n1, *ps));
                r.add(gates::pair_ideal(0, 1, *ps));
            }
            if (pa) {
                m.add(gates::pair_ideal(2, 3, *pa));
                r.add(gates::pair_ideal(2, 3, *pa));
            }
            measured.push_back(m);
            model_rot.push_back(r);
        }
    }
    const Circuit gate = system_pulse(1, n2, Angle());

    // The system pair of the second Choi branch is taken from the source, so both branches carry the same
    // number of atoms and the pair's phase is referenced to the molecules.
    auto w = input.weights();
    auto rows = parallel_map(w.size(), [&](size_t k) {
        const uint32_t n = w[k].first;
        StateVector s = fock_state(regs, empty, n);
        s += fock_state(regs, full, ideal || n == 0 ? n : n - 1);
        s.scale(1 / std::sqrt(2.0));
        if (!ideal) s = apply_gate(s, split(static_cast<double>(n1) / (n1 + n2)));
        s = apply_circuit(s, gate);
        std::vector<std::vector<double>> per_setting;
        for (const Circuit &m : measured) per_setting.push_back(measure_populations(apply_circuit(s, m), labels));
        return per_setting;
    });
    std::vector<std::vector<double>> pops(measured.size(), std::vector<double>(labels.size(), 0.0));
    for (size_t k = 0; k < w.size(); k++) {
        for (size_t r = 0; r < measured.size(); r++) {
            for (size_t c = 0; c < labels.size(); c++) pops[r][c] += w[k].second * rows[k][r][c];
        }
    }

    ChoiResult out;
    out.n1 = n1;
    out.n2 = n2;
    out.source = input.source;
    out.model = model;
    out.rho = reconstruct(nf, model_rot, labels, pops);
    Layout fl(0, nf, {});
    StateVector choi = StateVector::basis_state(fl, {{}, empty, {}});
    choi += StateVector::basis_state(fl, {{}, full, {}});
    choi.scale(1 / std::sqrt(2.0));
    DensityMatrixOnSubspace target = project_density(apply_circuit(choi, ideal_pair(nf, 0, 1, Angle())), labels);
    out.entanglement_fidelity = fidelity(target, out.rho);
    const double d = 2;
    out.average_infidelity = 1 - (d * out.entanglement_fidelity + 1) / (d + 1);
    return out;
}

nlohmann::json ChoiConvergence::to_json() const {
    nlohmann::json s = nlohmann::json::array();
    for (const auto &r : steps) {
        s.push_back({{"N1", r.n1},
                     {"entanglement_infidelity", r.entanglement_infidelity()},
                     {"average_infidelity", r.average_infidelity}});
    }
    return {{"steps", s}, {"converged", converged}, {"result", result().to_json()}};
}

ChoiConvergence choi_converged(uint32_t n2, MoleculeSource source, uint32_t n1_start, uint32_t n1_max,
                               double rel_tol) {
    if (n1_start == 0 || n1_start > n1_max) throw std::invalid_argument("choi_converged: bad N1 range");
    ChoiConvergence c;
    for (uint32_t n1 = n1_start; n1 <= n1_max; n1 *= 2) {
        c.steps.push_back(choi_experiment(n1, n2, source));
        if (c.steps.size() >= 2) {
            double now = c.steps.back().entanglement_infidelity();
            double before = c.steps[c.steps.size() - 2].entanglement_infidelity();
            if (std::abs(now - before) < rel_tol * std::abs(now)) {
                c.converged = true;
                break;
            }
        }
    }
    return c;
}

namespace {

PairingConfig single_pulse_config(uint32_t n) {
    PairingConfig cfg;
    cfg.sites = 2;
    cfg.molecules = n / 2.0;
    cfg.cutoffs = {n, n};
    return cfg;
}

StateVector after_single_pulse(const PairingConfig &cfg, uint32_t n) {
    const Registers regs = cfg.registers();
    StateVector s = apply_gate(fock_state(regs, std::vector<int>(regs.fermions, 0), n), split(0.5));
    return apply_circuit(s, pair_circuit(0, 1, 0, cfg));
}

}  // namespace

DensityMatrixOnSubspace single_pulse_density(uint32_t n) {
    PairingConfig cfg = single_pulse_config(n);
    return project_density(after_single_pulse(cfg, n), {cfg.label("00"), cfg.label("11")});
}

double conditional_purity(uint32_t n, uint32_t total) {
    PairingConfig cfg = single_pulse_config(n);
    StateVector s = after_single_pulse(cfg, n);
    const Layout &l = s.layout();
    StateVector kept(l);
    for (const auto &[i, a] : s.amplitudes()) {
        uint32_t m = 0;
        for (uint32_t b = 0; b < l.bosons(); b++) m += l.boson(i, b);
        if (m == total) kept.set(i, a);
    }
    if (kept.norm() == 0) throw std::invalid_argument("conditional_purity: outcome has zero probability");
    kept.normalize();
    DensityMatrixOnSubspace d = project_density(kept, {cfg.label("00"), cfg.label("11")});
    return (d.matrix.adjoint() * d.matrix).trace().real() / std::pow(d.trace(), 2);
}

}  // namespace fqc
