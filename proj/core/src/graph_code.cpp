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

#include "egc/graph_code.hpp"

#include <algorithm>

#include "egc/errors.hpp"

namespace egc {

GraphCode code_from_progenitor(const GraphState& g) {
    if (g.num_vertices() < 2) throw ConstructionError("progenitor needs at least two vertices");
    std::size_t q = g.emitter_vertex();
    auto nq = g.neighbors(q);
    if (nq.empty()) throw ConstructionError("input qubit " + std::to_string(q) + " is isolated");
    if (g.num_vertices() - 1 > kMaxCodeQubits) {
        throw ResourceError("code with " + std::to_string(g.num_vertices() - 1) + " qubits exceeds cap " +
                            std::to_string(kMaxCodeQubits));
    }

    GraphCode code;
    code.progenitor_ = g;
    code.input_ = q;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (v != q) code.code_vertices_.push_back(v);
    }
    std::size_t n = code.code_vertices_.size();

    auto restrict = [&](const PauliOperator& p) {
        if (p.at(q) != Pauli::I) {
            throw ConstructionError("operator " + p.str() + " acts on the input qubit");
        }
        return p.restricted(code.code_vertices_);
    };

    PauliOperator x_bar(g.num_vertices());
    for (auto i : nq) x_bar.set(i, Pauli::Z);
    code.logical_x_ = restrict(x_bar);

    std::size_t q0 = nq.front();
    PauliOperator s_q0 = graph_stabilizer(g, q0);
    code.logical_z_ = restrict(s_q0 * PauliOperator::single(g.num_vertices(), q, Pauli::Z));

    std::vector<PauliOperator> gens;
    for (auto i : nq) {
        if (i != q0) gens.push_back(restrict(s_q0 * graph_stabilizer(g, i)));
    }
    for (std::size_t j = 0; j < g.num_vertices(); ++j) {
        if (j == q || g.has_edge(q, j)) continue;
        gens.push_back(restrict(graph_stabilizer(g, j)));
    }
    code.stabilizers_ = StabilizerGroup(n, std::move(gens));
    code.stabilizer_elements_ = code.stabilizers_.enumerate(kMaxCodeQubits);
    for (const auto& s : code.stabilizer_elements_) {
        code.logical_x_set_.push_back(code.logical_x_ * s);
        code.logical_z_set_.push_back(code.logical_z_ * s);
    }
    code.id_ = code_id(g);
    return code;
}

std::vector<PauliOperator> logical_set(const GraphCode& code, LogicalBasis basis) {
    return code.logical_set(basis);
}

std::string code_id(const GraphState& progenitor) {
    std::string prefix = "n" + std::to_string(progenitor.num_vertices() - 1) + "-";
    if (progenitor.is_tree() && is_single_emitter_generatable(progenitor)) {
        return prefix + generation_ops_str(generation_plan(progenitor).ops);
    }
    std::string out = prefix + "g";
    bool first = true;
    for (auto [a, b] : progenitor.edges()) {
        if (!first) out += ".";
        first = false;
        out += std::to_string(a) + "_" + std::to_string(b);
    }
    out += "@" + std::to_string(progenitor.emitter_vertex());
    return out;
}

GraphState dual_progenitor(const GraphState& g) {
    std::size_t s = g.emitter_vertex();
    auto ns = g.neighbors(s);
    if (ns.empty()) throw ConstructionError("input qubit is isolated");
    std::size_t q_star = ns.front();
    return local_complement(local_complement(local_complement(g, s), q_star), s);
}

GraphCode dual_code(const GraphCode& code) { return code_from_progenitor(dual_progenitor(code.progenitor())); }

std::vector<QubitBasisAction> dual_basis_actions(const GraphCode& code) {
    const GraphState& g0 = code.progenitor();
    std::size_t s = g0.emitter_vertex();
    std::size_t q_star = g0.neighbors(s).front();
    GraphState g1 = local_complement(g0, s);
    GraphState g2 = local_complement(g1, q_star);

    auto transform = [&](PauliOperator p) {
        p = lc_pauli_transform(p, s, g0);
        p = lc_pauli_transform(p, q_star, g1);
        return lc_pauli_transform(p, s, g2);
    };

    std::vector<QubitBasisAction> out;
    for (auto v : code.code_vertices()) {
        Pauli x_image = transform(PauliOperator::single(g0.num_vertices(), v, Pauli::X)).at(v);
        Pauli z_image = transform(PauliOperator::single(g0.num_vertices(), v, Pauli::Z)).at(v);
        if (x_image == Pauli::X && z_image == Pauli::Z) out.push_back(QubitBasisAction::kKeep);
        else if (x_image == Pauli::Z && z_image == Pauli::X) out.push_back(QubitBasisAction::kSwap);
        else out.push_back(QubitBasisAction::kMixesY);
    }
    return out;
}

}  // namespace egc
