// Copyright 2026 The egc Authors
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

#pragma once

// Brute-force reference implementations used only by the tests. They work
// on dense vectors and matrices and share no code with the library beyond
// reading a GraphState's vertices and edges.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "egc/graph_state.hpp"

namespace egc::oracle {

using Complex = std::complex<double>;
using Vec = std::vector<Complex>;

/// Square matrix in row-major order.
struct Matrix {
    std::size_t dim = 0;
    std::vector<Complex> a;

    Complex& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

Matrix identity(std::size_t dim);
Matrix matmul(const Matrix& x, const Matrix& y);
Matrix scaled(const Matrix& x, Complex s);
bool approx_equal(const Matrix& x, const Matrix& y, double tol = 1e-12);

/// Dense matrix of text such as "+XIZ", "-iYY" (qubit k is character k and
/// bit k of the basis index).
Matrix pauli_matrix(const std::string& text);

/// Letters 0=I, 1=X, 2=Z, 3=Y on each qubit; applies the Hermitian
/// Paulis with no global phase.
Vec apply_letters(const std::vector<int>& letters, const Vec& v);

Vec graph_state_vector(const GraphState& g);

/// Normalised <+|_q G> and <-|_q G> on the remaining vertices in increasing
/// order; the logical X-basis states of the code.
struct Codespace {
    std::size_t n = 0;
    Vec plus;
    Vec minus;
};
Codespace codespace(const GraphState& g);

/// 2x2 matrix <psi_a| P |psi_b> with a, b in {plus, minus}.
Matrix logical_action(const Codespace& cs, const std::vector<int>& letters);

/// Per pattern (base 3, pair 0 least significant, digit 0 success, 1 fail,
/// 2 loss): whether some product of measured pair parities acts as +-XX or
/// +-ZZ on the two logical qubits.
struct ErasureOracle {
    std::size_t n = 0;
    std::vector<bool> xx;
    std::vector<bool> zz;
};
ErasureOracle erasure_oracle(const GraphState& progenitor, std::uint32_t w_bits);

double pattern_weight(std::size_t n, std::uint32_t index, double eta, double p_fail);
double success_probability(const ErasureOracle& o, bool xx, double eta, double p_fail);

/// Maximum-likelihood logical error per pattern from enumerating all
/// 4^(2n) two-block Pauli errors; NaN where the parity is erased. The
/// uncorrected rate uses the first matching product of measured parities,
/// which need not be the representative the library fixes.
struct ErrorOracle {
    std::vector<double> corrected;
    std::vector<double> uncorrected;
};
ErrorOracle error_oracle(const GraphState& progenitor, std::uint32_t w_bits, bool xx, double epsilon);
double average_error(const ErrorOracle& o, std::size_t n, double eta, double p_fail, bool corrected = true);

/// Probability that independent depolarizing noise on the 2n photons of two
/// blocks anticommutes with P (x) P, where P has the given letters.
double paired_flip_rate(const std::vector<int>& letters, double epsilon);

/// Single-photon depolarizing flip statistics of one fused pair,
/// by enumerating the 16 two-photon Paulis. p[fx][fz].
void pair_flip_table(double epsilon, double p[2][2]);

/// Number of marked-isomorphism classes reachable by n leaf / path-edge
/// creations, with isomorphism decided over all vertex permutations.
std::size_t count_generatable_classes(std::size_t n_photons);
bool brute_marked_isomorphic(const GraphState& a, const GraphState& b);

}  // namespace egc::oracle
