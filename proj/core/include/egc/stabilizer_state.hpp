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

#include <cstddef>
#include <vector>

#include "egc/graph_state.hpp"
#include "egc/pauli.hpp"

namespace egc {

struct MeasurementResult {
    int outcome = +1;
    bool deterministic = false;
};

/// Pure stabilizer state kept as n independent commuting generators with
/// exact signs. Starts in |0...0>.
class StabilizerState {
  public:
    explicit StabilizerState(std::size_t num_qubits);

    /// The graph state of g (|+> on every vertex, CZ on every edge).
    static StabilizerState from_graph(const GraphState& g);

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliOperator>& generators() const { return rows_; }

    void h(std::size_t q);
    void s(std::size_t q);
    void x(std::size_t q);
    void z(std::size_t q);
    void cnot(std::size_t control, std::size_t target);
    void cz(std::size_t a, std::size_t b);
    void swap(std::size_t a, std::size_t b);

    /// Measures a Hermitian Pauli. A random outcome is forced to `forced`;
    /// a deterministic one is reported as is (the caller decides whether a
    /// mismatch with `forced` matters).
    MeasurementResult measure(const PauliOperator& p, int forced = +1);
    MeasurementResult measure_x(std::size_t q, int forced = +1);

    /// Puts qubit q into |+> regardless of its current (product) state.
    void reset_plus(std::size_t q);

    /// +1 / -1 if p or -p stabilizes the state, 0 otherwise.
    int expectation(const PauliOperator& p) const;

    /// Reduced row-echelon generators; equal for equal states.
    std::vector<PauliOperator> canonical_generators() const;

    friend bool operator==(const StabilizerState& a, const StabilizerState& b);

  private:
    static void flip(PauliOperator& p) { p.phase_ = static_cast<std::uint8_t>((p.phase_ + 2) & 3); }

    std::size_t n_;
    std::vector<PauliOperator> rows_;
};

}  // namespace egc
