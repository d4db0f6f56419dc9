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
#include <string>
#include <vector>

#include "egc/graph_state.hpp"
#include "egc/pauli.hpp"

namespace egc {

enum class LogicalBasis { kX, kZ };

/// Single-logical-qubit stabilizer code obtained from a progenitor graph by
/// measuring the input qubit (the emitter vertex) in X with outcome +1.
///
/// Code qubits are the progenitor vertices other than the input, in
/// increasing vertex order. All operators below act on those n_code qubits.
class GraphCode {
  public:
    const GraphState& progenitor() const { return progenitor_; }
    std::size_t input_qubit() const { return input_; }
    std::size_t num_code_qubits() const { return code_vertices_.size(); }
    /// code_vertices()[k] is the progenitor vertex of code qubit k.
    const std::vector<std::size_t>& code_vertices() const { return code_vertices_; }

    const PauliOperator& logical_x() const { return logical_x_; }
    const PauliOperator& logical_z() const { return logical_z_; }
    const StabilizerGroup& stabilizers() const { return stabilizers_; }

    /// All 2^(n_code-1) stabilizer elements, in generator-subset order.
    const std::vector<PauliOperator>& stabilizer_elements() const { return stabilizer_elements_; }
    /// Logical times every stabilizer element, same order as above.
    const std::vector<PauliOperator>& logical_set(LogicalBasis basis) const {
        return basis == LogicalBasis::kX ? logical_x_set_ : logical_z_set_;
    }

    const std::string& id() const { return id_; }

  private:
    friend GraphCode code_from_progenitor(const GraphState& g);

    GraphState progenitor_;
    std::size_t input_ = 0;
    std::vector<std::size_t> code_vertices_;
    PauliOperator logical_x_;
    PauliOperator logical_z_;
    StabilizerGroup stabilizers_{0};
    std::vector<PauliOperator> stabilizer_elements_;
    std::vector<PauliOperator> logical_x_set_;
    std::vector<PauliOperator> logical_z_set_;
    std::string id_;
};

/// Largest code handled by the eager logical-set construction.
inline constexpr std::size_t kMaxCodeQubits = 16;

/// X_bar = prod_{i in N(q)} Z_i and Z_bar = S_{q0} Z_q with q0 the lowest
/// neighbour of q; the code stabilizers are S_{q0} S_i (i in N(q), i != q0)
/// and S_j (j not adjacent to q). Throws ConstructionError if q is isolated.
GraphCode code_from_progenitor(const GraphState& g);

std::vector<PauliOperator> logical_set(const GraphCode& code, LogicalBasis basis);

/// Stable textual identifier: "n<k>-<ops>" for single-emitter progenitors
/// (the smallest generating LEAF/PATH_EDGE string), otherwise
/// "n<k>-g<edge list>@<input>".
std::string code_id(const GraphState& progenitor);

/// The progenitor after local complementation at the input s, then at its
/// lowest neighbour, then at s again.
GraphState dual_progenitor(const GraphState& g);
GraphCode dual_code(const GraphCode& code);

/// What the dual's local Clifford does to the X/Z letters of one code qubit.
enum class QubitBasisAction { kKeep, kSwap, kMixesY };

/// Per-code-qubit effect of the dual transformation.
std::vector<QubitBasisAction> dual_basis_actions(const GraphCode& code);

}  // namespace egc
