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

#include <complex>
#include <cstddef>
#include <vector>

#include "egc/graph_state.hpp"
#include "egc/pauli.hpp"

namespace egc {

/// Dense state vector; qubit q is bit q of the basis index.
class StateVector {
  public:
    using Amplitude = std::complex<double>;

    static constexpr std::size_t kMaxQubits = 20;

    explicit StateVector(std::size_t num_qubits);  // |0...0>
    static StateVector from_amplitudes(std::size_t num_qubits, std::vector<Amplitude> amplitudes);
    static StateVector from_graph(const GraphState& g);

    std::size_t num_qubits() const { return n_; }
    const std::vector<Amplitude>& amplitudes() const { return amp_; }

    void h(std::size_t q);
    void x(std::size_t q);
    void z(std::size_t q);
    void cnot(std::size_t control, std::size_t target);
    void cz(std::size_t a, std::size_t b);
    void swap(std::size_t a, std::size_t b);
    void apply(const PauliOperator& p);

    /// Projects qubit q onto the X eigenstate with the given sign and
    /// renormalises. Returns the probability of that outcome (0 leaves the
    /// state untouched).
    double project_x(std::size_t q, int outcome);

    double norm() const;
    /// <this|p|this>.
    double expectation(const PauliOperator& p) const;
    /// |<this|other>|.
    double overlap(const StateVector& other) const;

  private:
    std::size_t n_;
    std::vector<Amplitude> amp_;
};

}  // namespace egc
