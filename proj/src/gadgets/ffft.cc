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


#include "fqc/gadgets/ffft.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "fqc/gadgets/baselines.h"

namespace fqc {

FourierPhase::FourierPhase(int64_t k_, int64_t n_) : k(k_), n(n_) {
    if (n <= 0 || k < 0 || k >= n) throw std::invalid_argument("Fourier phase needs 0 <= k < n");
}

bool is_power_of_two(uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

Circuit two_mode_fourier(const FourierPhase &phase, uint32_t top, uint32_t bottom) {
    if (top == bottom) throw std::invalid_argument("two_mode_fourier needs distinct modes");
    Circuit c = Circuit::fermions(std::max(top, bottom) + 1);
    // exp(-i theta n) followed by Zf is exp(-i (theta - pi) n).
    if (phase.k == 0) {
        c.add(gates::zf(bottom));
    } else {
        c.add(gates::phase_f(bottom, Angle::pi_fraction(2 * phase.k - phase.n, phase.n)));
    }
    c.add(gates::braid(top, bottom));
    c.add(gates::tf(top)).add(gates::tf_dag(bottom));
    c.add(gates::braid_dag(top, bottom));
    return c;
}

Circuit qubit_two_mode_fourier(const FourierPhase &phase, uint32_t a, uint32_t b) {
    // After CNOT(a, b) the one-particle sector sits at b = 1, where the butterfly
    // is a rotation of a; at b = 0 only |11> needs its sign flipped.
    Circuit c(Registers{std::max(a, b) + 1, 0, {}});
    if (phase.k != 0) c.add(gates::phase_q(b, phase.theta()));
    c.add(gates::cnot(a, b)).add(gates::z(a));
    // Controlled Ry(-pi/2) on a, with Ry(x) = S Rx(x) S^dagger.
    c.add(gates::sdg(a)).add(gates::xrot(a, Angle::pi_fraction(-1, 4))).add(gates::s(a));
    c.add(gates::cnot(b, a));
    c.add(gates::sdg(a)).add(gates::xrot(a, Angle::pi_fraction(1, 4))).add(gates::s(a));
    c.add(gates::cnot(b, a));
    c.add(gates::z(b)).add(gates::cnot(a, b));
    return c;
}

std::vector<std::vector<std::pair<uint32_t, uint32_t>>> transposition_layers(std::vector<uint32_t> from,
                                                                             const std::vector<uint32_t> &to) {
    if (from.size() != to.size()) throw std::invalid_argument("orders differ in length");
    std::unordered_map<uint32_t, uint32_t> dest;
    for (uint32_t p = 0; p < to.size(); p++) dest[to[p]] = p;
    std::vector<uint32_t> key(from.size());
    for (size_t p = 0; p < from.size(); p++) {
        auto it = dest.find(from[p]);
        if (it == dest.end()) throw std::invalid_argument("orders are not permutations of each other");
        key[p] = it->second;
    }
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> layers;
    const size_t n = key.size();
    for (size_t round = 0; !std::is_sorted(key.begin(), key.end()); round++) {
        std::vector<std::pair<uint32_t, uint32_t>> layer;
        for (size_t i = round % 2; i + 1 < n; i += 2) {
            if (key[i] > key[i + 1]) {
                std::swap(key[i], key[i + 1]);
                layer.emplace_back(static_cast<uint32_t>(i), static_cast<uint32_t>(i + 1));
            }
        }
        if (!layer.empty()) layers.push_back(std::move(layer));
    }
    return layers;
}

namespace {

uint32_t bit_reverse(uint32_t x, uint32_t bits) {
    uint32_t r = 0;
    for (uint32_t b = 0; b < bits; b++) r |= ((x >> b) & 1u) << (bits - 1 - b);
    return r;
}

using SwapFn = std::function<void(Circuit &, uint32_t, uint32_t)>;
using ButterflyFn = std::function<void(Circuit &, const FourierPhase &, uint32_t, uint32_t)>;

// Decimation in time over slots. Slot p starts with the amplitude of mode
// rev(p); before each stage the data is rearranged so butterfly partners sit on
// positions (2i, 2i + 1), and at the end slot k is moved to position k.
Circuit fft_skeleton(uint32_t n, FftRouting routing, Circuit c, const SwapFn &swap, const ButterflyFn &butterfly) {
    if (!is_power_of_two(n)) throw std::invalid_argument("FFFT size must be a power of two");
    uint32_t bits = 0;
    while ((1u << bits) < n) bits++;
    std::vector<uint32_t> at(n);
    for (uint32_t x = 0; x < n; x++) at[x] = bit_reverse(x, bits);

    auto route = [&](const std::vector<uint32_t> &want) {
        for (const auto &layer : transposition_layers(at, want))
            for (auto [a, b] : layer) swap(c, a, b);
        at = want;
    };
    for (uint32_t s = 1; s <= bits; s++) {
        const uint32_t m = 1u << s;
        std::vector<uint32_t> want;
        if (routing == FftRouting::Local) {
            for (uint32_t blk = 0; blk < n; blk += m) {
                for (uint32_t j = 0; j < m / 2; j++) {
                    want.push_back(blk + j);
                    want.push_back(blk + j + m / 2);
                }
            }
        } else {
            // Constant geometry: the slot index rotated right by s - 1 bits, so the
            // butterfly bit lands in the lowest position and consecutive stages
            // differ by a perfect shuffle of the whole register.
            want.assign(n, 0);
            const uint32_t r = s - 1;
            for (uint32_t slot = 0; slot < n; slot++) {
                uint32_t pos = (slot >> r) | ((slot & ((1u << r) - 1)) << (bits - r));
                want[pos] = slot;
            }
        }
        route(want);
        for (uint32_t i = 0; i < n / 2; i++) butterfly(c, FourierPhase(want[2 * i] % m, m), 2 * i, 2 * i + 1);
    }
    std::vector<uint32_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0u);
    route(identity);
    return c;
}

}  // namespace

Circuit ffft(uint32_t n_modes, FftRouting routing) {
    return fft_skeleton(
        n_modes, routing, Circuit::fermions(n_modes), [](Circuit &c, uint32_t a, uint32_t b) { c.move_swap(a, b); },
        [](Circuit &c, const FourierPhase &ph, uint32_t a, uint32_t b) { c.append(two_mode_fourier(ph, a, b)); });
}

Circuit qubit_fft_fswap(uint32_t n_modes, FftRouting routing) {
    return fft_skeleton(
        n_modes, routing, Circuit(Registers{n_modes, 0, {}}),
        [](Circuit &c, uint32_t a, uint32_t b) { c.append(qubit_fswap(a, b)); },
        [](Circuit &c, const FourierPhase &ph, uint32_t a, uint32_t b) {
            c.append(qubit_two_mode_fourier(ph, a, b));
        });
}

}  // namespace fqc
