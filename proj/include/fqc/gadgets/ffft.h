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


#ifndef FQC_GADGETS_FFFT_H
#define FQC_GADGETS_FFFT_H

#include <cstdint>
#include <utility>
#include <vector>

#include "fqc/circuit/circuit.h"

namespace fqc {

/// Twiddle index of a two-mode butterfly: theta = 2 pi k / n.
struct FourierPhase {
    int64_t k = 0;
    int64_t n = 2;

    /// Throws std::invalid_argument unless 0 <= k < n.
    FourierPhase(int64_t k, int64_t n);
    Angle theta() const { return Angle::pi_fraction(2 * k, n); }
};

bool is_power_of_two(uint64_t n);

/// Phase exp(-i theta n) on `bottom`, then the two-mode Fourier butterfly
///   p_top^+    -> (p_top^+ + p_bottom^+) / sqrt 2
///   p_bottom^+ -> (p_top^+ - p_bottom^+) / sqrt 2
/// compiled as two braids and three single-fermion gates. The twiddle is merged
/// into the leading Zf, so k = 0 carries no arbitrary angle.
Circuit two_mode_fourier(const FourierPhase &phase, uint32_t top = 0, uint32_t bottom = 1);

/// Adjacent-transposition layers taking the item order `from` to `to`
/// (odd-even transposition sort). Both are permutations of the same labels.
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> transposition_layers(std::vector<uint32_t> from,
                                                                             const std::vector<uint32_t> &to);

/// How butterfly partners are brought together before each stage.
///  Shuffle: constant geometry, slot bits rotated by stage, so consecutive stages
///           differ by a perfect shuffle of the whole register.
///  Local:   pairs ordered by block, so stage s only permutes within blocks of
///           2^s modes (Theta(2^s) fSWAP depth).
enum class FftRouting { Shuffle, Local };

/// Radix-2 decimation-in-time FFFT on N modes. Butterfly partners are brought
/// next to each other by moving atoms before each stage, and the bit-reversed
/// output is moved back at the end, so the single-particle matrix is exactly
///   M[k][j] = exp(-2 pi i j k / N) / sqrt N.
Circuit ffft(uint32_t n_modes, FftRouting routing = FftRouting::Local);

/// Same algorithm on Jordan-Wigner qubits. Moves become fSWAP = SWAP * CZ layers
/// and each butterfly is compiled into CNOTs and single-qubit gates.
Circuit qubit_fft_fswap(uint32_t n_modes, FftRouting routing = FftRouting::Shuffle);

/// Qubit version of two_mode_fourier on adjacent qubits a, b = a + 1.
Circuit qubit_two_mode_fourier(const FourierPhase &phase, uint32_t a, uint32_t b);

}  // namespace fqc

#endif
