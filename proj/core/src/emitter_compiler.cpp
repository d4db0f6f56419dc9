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

#include "egc/emitter_compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <sstream>
#include <type_traits>

#include "egc/errors.hpp"
#include "egc/stabilizer_state.hpp"
#include "egc/statevector.hpp"

namespace egc {

const char* instruction_name(InstructionKind kind) {
    switch (kind) {
        case InstructionKind::kInitEmitter:
            return "INIT_EMITTER";
        case InstructionKind::kSpinRotation:
            return "SPIN_ROTATION";
        case InstructionKind::kEmitPhoton:
            return "EMIT_PHOTON";
        case InstructionKind::kCz:
            return "CZ";
        case InstructionKind::kSwap:
            return "SWAP";
        case InstructionKind::kMeasureX:
            return "MEASURE_X";
        case InstructionKind::kReinit:
            return "REINIT";
    }
    return "?";
}

const char* emitter_mode_name(EmitterMode mode) {
    return mode == EmitterMode::kTwoEmitter ? "two-emitter" : "emitter-memory";
}

EmitterMode parse_emitter_mode(const std::string& text) {
    if (text == "two-emitter") return EmitterMode::kTwoEmitter;
    if (text == "emitter-memory") return EmitterMode::kEmitterMemory;
    throw ConfigError("unknown emitter mode \"" + text + "\" (expected two-emitter or emitter-memory)");
}

OuterPlan outer_from_graph(const GraphState& g) {
    if (g.num_vertices() == 0) throw ConstructionError("outer graph is empty");
    if (!is_caterpillar(g)) throw ConstructionError("outer graph is not a star, chain or branched chain");
    std::optional<OuterPlan> best;
    for (std::size_t mark = 0; mark < g.num_vertices(); ++mark) {
        GraphState h = g;
        h.set_emitter_vertex(mark);
        if (!is_single_emitter_generatable(h)) continue;
        GenerationPlan plan = generation_plan(h);
        OuterPlan out;
        out.ops = plan.ops;
        out.vertex_of.assign(g.num_vertices(), 0);
        std::size_t active = 0;
        for (std::size_t i = 0; i < plan.ops.size(); ++i) {
            if (plan.ops[i] == GenerationOp::kLeaf) {
                out.vertex_of[i + 1] = plan.photon_vertices[i];
            } else {
                out.vertex_of[active] = plan.photon_vertices[i];
                active = i + 1;
            }
        }
        out.vertex_of[active] = mark;
        if (!best || generation_ops_str(out.ops) < generation_ops_str(best->ops)) best = std::move(out);
    }
    if (!best) throw ConstructionError("outer graph is not reachable with leaf and path-edge creations");
    return *best;
}

namespace {

class SequenceBuilder {
  public:
    SequenceBuilder(GenerationSequence& seq, const GenerationPlan& inner) : seq_(seq), inner_(inner) {}

    void push(InstructionKind kind, std::size_t e, std::size_t other = 0, std::ptrdiff_t vertex = -1) {
        Instruction ins;
        ins.kind = kind;
        ins.emitter = e;
        ins.other = other;
        ins.vertex = vertex;
        ins.block = block;
        if (kind == InstructionKind::kEmitPhoton) ins.photon = static_cast<std::ptrdiff_t>(seq_.num_photons++);
        seq_.ops.push_back(ins);
    }

    // Grows one copy of the inner progenitor; the emitter ends on its input.
    void generate_code(std::size_t e) {
        for (auto op : inner_.ops) {
            push(InstructionKind::kEmitPhoton, e);
            if (op == GenerationOp::kPathEdge) push(InstructionKind::kSpinRotation, e);
        }
    }

    std::size_t block = 0;

  private:
    GenerationSequence& seq_;
    const GenerationPlan& inner_;
};

}  // namespace

GenerationSequence compile(const std::vector<GenerationOp>& outer, const GraphCode& inner, EmitterMode mode) {
    GenerationPlan plan = generation_plan(inner.progenitor());
    if (plan.ops.size() != inner.num_code_qubits()) throw ConstructionError("inner plan size mismatch");
    GenerationSequence seq;
    seq.mode = mode;
    seq.outer_ops = outer;
    seq.inner_ops = plan.ops;
    seq.inner_code_qubits = inner.num_code_qubits();
    SequenceBuilder b(seq, plan);
    using K = InstructionKind;
    std::ptrdiff_t active = 0;

    if (mode == EmitterMode::kTwoEmitter) {
        std::size_t hold = 0, gen = 1;
        b.push(K::kInitEmitter, 0);
        b.push(K::kInitEmitter, 1);
        b.generate_code(hold);
        for (std::size_t i = 0; i < outer.size(); ++i) {
            b.block = i + 1;
            auto v = static_cast<std::ptrdiff_t>(i + 1);
            b.generate_code(gen);
            b.push(K::kCz, hold, gen);
            if (outer[i] == GenerationOp::kLeaf) {
                b.push(K::kMeasureX, gen, 0, v);
                b.push(K::kReinit, gen);
            } else {
                b.push(K::kMeasureX, hold, 0, active);
                b.push(K::kReinit, hold);
                std::swap(hold, gen);
                active = v;
            }
        }
        b.block = outer.size() + 1;
        b.push(K::kMeasureX, hold, 0, active);
    } else {
        const std::size_t e = 0, m = 1;
        b.push(K::kInitEmitter, e);
        b.push(K::kInitEmitter, m);
        b.generate_code(e);
        b.push(K::kSwap, e, m);
        for (std::size_t i = 0; i < outer.size(); ++i) {
            b.block = i + 1;
            auto v = static_cast<std::ptrdiff_t>(i + 1);
            b.generate_code(e);
            b.push(K::kCz, m, e);
            if (outer[i] == GenerationOp::kLeaf) {
                b.push(K::kMeasureX, e, 0, v);
            } else {
                b.push(K::kSwap, m, e);
                b.push(K::kMeasureX, e, 0, active);
                active = v;
            }
            b.push(K::kReinit, e);
        }
        b.block = outer.size() + 1;
        b.push(K::kMeasureX, m, 0, active);
    }
    return seq;
}

ResourceCount count_resources(const GenerationSequence& seq) {
    ResourceCount rc;
    std::vector<std::size_t> depth(seq.emitter_count, 0);
    auto touch = [&](std::size_t e) {
        if (e < depth.size()) ++depth[e];
    };
    for (const auto& ins : seq.ops) {
        switch (ins.kind) {
            case InstructionKind::kInitEmitter:
            case InstructionKind::kReinit:
                depth[ins.emitter] = 0;
                break;
            case InstructionKind::kMeasureX:
                break;
            case InstructionKind::kEmitPhoton:
                ++rc.photons;
                touch(ins.emitter);
                break;
            case InstructionKind::kSpinRotation:
                touch(ins.emitter);
                break;
            case InstructionKind::kCz:
            case InstructionKind::kSwap:
                ++rc.spin_spin_gates;
                touch(ins.emitter);
                touch(ins.other);
                break;
        }
        // Only emitting qubits count towards the depth; the memory does not.
        std::size_t emitters = seq.mode == EmitterMode::kEmitterMemory ? 1 : depth.size();
        for (std::size_t e = 0; e < emitters; ++e) rc.max_emitter_depth = std::max(rc.max_emitter_depth, depth[e]);
    }
    return rc;
}

std::string schedule_text(const GenerationSequence& seq) {
    auto name = [&](std::size_t e) -> std::string {
        if (seq.mode == EmitterMode::kEmitterMemory) return e == 0 ? "E" : "M";
        return "E" + std::to_string(e);
    };
    std::ostringstream out;
    out << "# mode " << emitter_mode_name(seq.mode) << ", outer " << generation_ops_str(seq.outer_ops)
        << ", inner " << generation_ops_str(seq.inner_ops) << "\n";
    std::size_t block = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < seq.ops.size(); ++i) {
        const auto& ins = seq.ops[i];
        if (ins.block != block) {
            block = ins.block;
            out << "# block " << block << "\n";
        }
        out << i << "\t" << instruction_name(ins.kind) << " " << name(ins.emitter);
        if (ins.kind == InstructionKind::kCz || ins.kind == InstructionKind::kSwap) out << " " << name(ins.other);
        if (ins.kind == InstructionKind::kEmitPhoton) out << " -> p" << ins.photon;
        if (ins.kind == InstructionKind::kMeasureX) out << " (outer vertex " << ins.vertex << ")";
        out << "\n";
    }
    return out.str();
}

ConcatenatedGraph concatenated_graph(const std::vector<GenerationOp>& outer, const GraphCode& inner) {
    ConcatenatedGraph c;
    c.outer_ops = outer;
    c.inner_progenitor = inner.progenitor();
    c.inner_plan = generation_plan(c.inner_progenitor);
    c.num_outer = outer.size() + 1;
    c.photons_per_vertex = c.inner_plan.ops.size();
    c.num_photons = c.num_outer * c.photons_per_vertex;
    c.graph = GraphState(c.num_photons + c.num_outer, 0);
    GraphState outer_graph = graph_from_generation_ops(outer);
    std::size_t q = c.inner_progenitor.emitter_vertex();
    std::vector<std::size_t> local(c.inner_progenitor.num_vertices());
    for (std::size_t v = 0; v < c.num_outer; ++v) {
        std::size_t base = v * c.photons_per_vertex;
        for (std::size_t k = 0; k < c.photons_per_vertex; ++k) local[c.inner_plan.photon_vertices[k]] = base + k;
        local[q] = c.num_photons + v;
        for (auto [a, b] : c.inner_progenitor.edges()) c.graph.add_edge(local[a], local[b]);
        for (std::size_t k = 0; k < c.photons_per_vertex; ++k) c.leaf_frame.push_back(c.inner_plan.photon_is_leaf[k]);
    }
    for (auto [a, b] : outer_graph.edges()) c.graph.add_edge(c.num_photons + a, c.num_photons + b);
    c.graph.set_emitter_vertex(c.num_photons + outer_graph.emitter_vertex());
    return c;
}

namespace {

// State of the construction after a given block: which photons exist,
// which outer vertices are still held by an emitter, and the byproducts of
// -1 outcomes seen so far.
struct Checkpoint {
    std::size_t block = 0;
    std::size_t photons = 0;
    std::vector<std::ptrdiff_t> held;  // per emitter: outer vertex or -1
    std::size_t outer_present = 0;
    std::vector<std::size_t> flipped;  // outer vertices measured with -1
    std::size_t end = 0;               // instruction index after the block
    std::size_t start = 0;
};

std::vector<Checkpoint> checkpoints(const GenerationSequence& seq, const ConcatenatedGraph& target,
                                    const VerificationOptions& options) {
    std::vector<Checkpoint> out;
    Checkpoint cur;
    cur.held.assign(seq.emitter_count, -1);
    std::size_t ppv = std::max<std::size_t>(target.photons_per_vertex, 1);
    std::vector<bool> started(seq.emitter_count, false);
    for (std::size_t i = 0; i < seq.ops.size(); ++i) {
        const auto& ins = seq.ops[i];
        if (ins.block != cur.block) {
            cur.end = i;
            out.push_back(cur);
            cur.block = ins.block;
            cur.start = i;
        }
        switch (ins.kind) {
            case InstructionKind::kInitEmitter:
            case InstructionKind::kReinit:
                cur.held[ins.emitter] = -1;
                started[ins.emitter] = false;
                break;
            case InstructionKind::kEmitPhoton: {
                auto v = static_cast<std::ptrdiff_t>(static_cast<std::size_t>(ins.photon) / ppv);
                cur.held[ins.emitter] = v;
                cur.photons = std::max(cur.photons, static_cast<std::size_t>(ins.photon) + 1);
                cur.outer_present = std::max(cur.outer_present, static_cast<std::size_t>(v) + 1);
                break;
            }
            case InstructionKind::kSwap:
                std::swap(cur.held[ins.emitter], cur.held[ins.other]);
                break;
            case InstructionKind::kMeasureX: {
                auto it = options.outcomes.find(i);
                if (it != options.outcomes.end() && it->second == -1 && ins.vertex >= 0) {
                    cur.flipped.push_back(static_cast<std::size_t>(ins.vertex));
                }
                cur.held[ins.emitter] = -1;
                break;
            }
            default:
                break;
        }
    }
    cur.end = seq.ops.size();
    out.push_back(cur);
    return out;
}

// Photon-level byproduct of a -1 outcome on outer vertex v: the inner
// logical Z, X_{q0} Z_{N(q0) \ q}, in the graph frame.
std::vector<std::pair<std::size_t, Pauli>> byproduct(const ConcatenatedGraph& t, std::size_t v) {
    const GraphState& p = t.inner_progenitor;
    std::size_t q = p.emitter_vertex();
    auto nq = p.neighbors(q);
    if (nq.empty()) throw VerificationError("inner input vertex is isolated");
    std::size_t q0 = *std::min_element(nq.begin(), nq.end());
    std::vector<std::size_t> photon_of(p.num_vertices(), 0);
    for (std::size_t k = 0; k < t.photons_per_vertex; ++k) {
        photon_of[t.inner_plan.photon_vertices[k]] = v * t.photons_per_vertex + k;
    }
    std::vector<std::pair<std::size_t, Pauli>> out{{photon_of[q0], Pauli::X}};
    for (auto u : p.neighbors(q0)) {
        if (u != q) out.push_back({photon_of[u], Pauli::Z});
    }
    return out;
}

// Qubit layout: photons, then the two emitters, then one placeholder per
// outer vertex (stabilizer method only).
StabilizerState expected_tableau(const ConcatenatedGraph& t, const Checkpoint& cp, std::size_t emitters) {
    std::size_t P = t.num_photons;
    std::size_t N = P + emitters + t.num_outer;
    StabilizerState st(N);
    std::vector<std::ptrdiff_t> qubit(t.graph.num_vertices(), -1);
    for (std::size_t k = 0; k < cp.photons; ++k) qubit[k] = static_cast<std::ptrdiff_t>(k);
    std::vector<bool> held_vertex(t.num_outer, false);
    for (std::size_t v = 0; v < cp.outer_present; ++v) qubit[P + v] = static_cast<std::ptrdiff_t>(P + emitters + v);
    for (std::size_t e = 0; e < emitters; ++e) {
        if (cp.held[e] >= 0) {
            qubit[P + static_cast<std::size_t>(cp.held[e])] = static_cast<std::ptrdiff_t>(P + e);
            held_vertex[static_cast<std::size_t>(cp.held[e])] = true;
        } else {
            st.h(P + e);
        }
    }
    for (std::size_t v = 0; v < t.num_outer; ++v) {
        if (v >= cp.outer_present || held_vertex[v]) st.h(P + emitters + v);
    }
    for (auto q : qubit) {
        if (q >= 0) st.h(static_cast<std::size_t>(q));
    }
    for (auto [a, b] : t.graph.edges()) {
        if (qubit[a] >= 0 && qubit[b] >= 0) st.cz(static_cast<std::size_t>(qubit[a]), static_cast<std::size_t>(qubit[b]));
    }
    for (std::size_t v = 0; v < cp.outer_present; ++v) {
        if (!held_vertex[v]) st.reset_plus(P + emitters + v);
    }
    for (auto v : cp.flipped) {
        for (auto [k, pauli] : byproduct(t, v)) {
            if (pauli == Pauli::X) st.x(k);
            else st.z(k);
        }
    }
    for (std::size_t k = 0; k < cp.photons; ++k) {
        if (t.leaf_frame[k]) st.h(k);
    }
    return st;
}

// Direct amplitude formula: sum over the measured-out outer vertices of
// (-1)^(edges), then byproducts and leaf frames.
StateVector expected_statevector(const ConcatenatedGraph& t, const Checkpoint& cp, std::size_t emitters) {
    std::size_t P = t.num_photons;
    std::size_t N = P + emitters;
    std::vector<std::ptrdiff_t> qubit(t.graph.num_vertices(), -1);
    for (std::size_t k = 0; k < cp.photons; ++k) qubit[k] = static_cast<std::ptrdiff_t>(k);
    std::vector<bool> held_vertex(t.num_outer, false);
    for (std::size_t e = 0; e < emitters; ++e) {
        if (cp.held[e] >= 0) {
            qubit[P + static_cast<std::size_t>(cp.held[e])] = static_cast<std::ptrdiff_t>(P + e);
            held_vertex[static_cast<std::size_t>(cp.held[e])] = true;
        }
    }
    std::vector<std::size_t> summed;  // graph vertices summed over
    std::vector<std::ptrdiff_t> summed_index(t.graph.num_vertices(), -1);
    for (std::size_t v = 0; v < cp.outer_present; ++v) {
        if (!held_vertex[v]) {
            summed_index[P + v] = static_cast<std::ptrdiff_t>(summed.size());
            summed.push_back(P + v);
        }
    }
    std::size_t k = summed.size();
    // Quadratic form among summed vertices and table of sums for each
    // linear coefficient vector.
    std::vector<std::uint32_t> quad_pairs;
    for (auto [a, b] : t.graph.edges()) {
        if (summed_index[a] >= 0 && summed_index[b] >= 0) {
            quad_pairs.push_back((1U << summed_index[a]) | (1U << summed_index[b]));
        }
    }
    std::vector<double> table(std::size_t{1} << k, 0.0);
    for (std::uint32_t c = 0; c < (1U << k); ++c) {
        double s = 0.0;
        for (std::uint32_t u = 0; u < (1U << k); ++u) {
            int parity = std::popcount(c & u) & 1;
            for (auto m : quad_pairs) parity ^= (std::popcount(u & m) == 2) ? 1 : 0;
            s += parity ? -1.0 : 1.0;
        }
        table[c] = s;
    }
    std::vector<StateVector::Amplitude> amp(std::size_t{1} << N, 0.0);
    std::size_t emitted_mask = (std::size_t{1} << cp.photons) - 1;
    std::size_t photon_mask = (std::size_t{1} << P) - 1;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if ((i & photon_mask & ~emitted_mask) != 0) continue;
        int parity = 0;
        std::uint32_t c = 0;
        for (auto [a, b] : t.graph.edges()) {
            std::ptrdiff_t qa = qubit[a], qb = qubit[b];
            std::ptrdiff_t sa = summed_index[a], sb = summed_index[b];
            if (qa >= 0 && qb >= 0) {
                parity ^= static_cast<int>((i >> qa) & (i >> qb) & 1U);
            } else if (qa >= 0 && sb >= 0) {
                if ((i >> qa) & 1U) c ^= 1U << sb;
            } else if (qb >= 0 && sa >= 0) {
                if ((i >> qb) & 1U) c ^= 1U << sa;
            }
        }
        amp[i] = parity ? -table[c] : table[c];
    }
    StateVector sv = StateVector::from_amplitudes(N, std::move(amp));
    double nrm = sv.norm();
    if (nrm == 0.0) throw VerificationError("expected state vanishes");
    std::vector<StateVector::Amplitude> scaled = sv.amplitudes();
    for (auto& a : scaled) a /= nrm;
    sv = StateVector::from_amplitudes(N, std::move(scaled));
    for (auto v : cp.flipped) {
        for (auto [q, pauli] : byproduct(t, v)) {
            if (pauli == Pauli::X) sv.x(q);
            else sv.z(q);
        }
    }
    for (std::size_t q = 0; q < cp.photons; ++q) {
        if (t.leaf_frame[q]) sv.h(q);
    }
    return sv;
}

template <typename State>
bool apply_instruction(State& st, const Instruction& ins, std::size_t P, int outcome, std::string& err) {
    std::size_t e = P + ins.emitter;
    switch (ins.kind) {
        case InstructionKind::kInitEmitter:
        case InstructionKind::kReinit:
            if constexpr (std::is_same_v<State, StabilizerState>) {
                st.reset_plus(e);
            } else {
                // An emitter about to be reinitialised is already in a
                // product state; project and correct.
                if (st.project_x(e, +1) < 1e-9) {
                    st.project_x(e, -1);
                    st.z(e);
                }
            }
            return true;
        case InstructionKind::kSpinRotation:
            st.h(e);
            return true;
        case InstructionKind::kEmitPhoton:
            st.cnot(e, static_cast<std::size_t>(ins.photon));
            return true;
        case InstructionKind::kCz:
            st.cz(e, P + ins.other);
            return true;
        case InstructionKind::kSwap:
            st.swap(e, P + ins.other);
            return true;
        case InstructionKind::kMeasureX: {
            if constexpr (std::is_same_v<State, StabilizerState>) {
                auto r = st.measure_x(e, outcome);
                if (r.outcome != outcome) {
                    err = "measurement outcome is fixed to " + std::to_string(r.outcome);
                    return false;
                }
            } else {
                if (st.project_x(e, outcome) < 1e-9) {
                    err = "forced measurement outcome has zero probability";
                    return false;
                }
            }
            if (outcome == -1) st.z(e);
            return true;
        }
    }
    return true;
}

}  // namespace

VerificationResult verify_sequence(const GenerationSequence& seq, const ConcatenatedGraph& expected,
                                   const VerificationOptions& options) {
    VerificationResult res;
    if (seq.num_photons != expected.num_photons) {
        res.message = "sequence emits " + std::to_string(seq.num_photons) + " photons, target has " +
                      std::to_string(expected.num_photons);
        return res;
    }
    std::size_t P = expected.num_photons;
    std::size_t E = seq.emitter_count;
    VerificationMethod method = options.method;
    if (method == VerificationMethod::kAuto) {
        method = P + E <= options.statevector_limit ? VerificationMethod::kStateVector : VerificationMethod::kStabilizer;
    }
    res.method = method;
    std::vector<Checkpoint> cps = checkpoints(seq, expected, options);

    auto run = [&](auto state, auto build_expected, bool all_checkpoints) {
        std::size_t c = 0;
        for (std::size_t i = 0; i <= seq.ops.size(); ++i) {
            while (c < cps.size() && cps[c].end == i) {
                if (all_checkpoints || c + 1 == cps.size()) {
                    if (!build_expected(state, cps[c])) {
                        res.divergent_block = static_cast<std::ptrdiff_t>(cps[c].block);
                        res.divergent_step = static_cast<std::ptrdiff_t>(cps[c].start);
                        std::ostringstream msg;
                        msg << "state after block " << cps[c].block << " (instructions " << cps[c].start << ".."
                            << (cps[c].end == 0 ? 0 : cps[c].end - 1) << ") differs from the target";
                        res.message = msg.str();
                        return false;
                    }
                }
                ++c;
            }
            if (i == seq.ops.size()) break;
            auto it = options.outcomes.find(i);
            int outcome = it == options.outcomes.end() ? +1 : it->second;
            std::string err;
            if (!apply_instruction(state, seq.ops[i], P, outcome, err)) {
                res.divergent_block = static_cast<std::ptrdiff_t>(seq.ops[i].block);
                res.divergent_step = static_cast<std::ptrdiff_t>(i);
                res.message = "instruction " + std::to_string(i) + ": " + err;
                return false;
            }
        }
        return true;
    };

    auto check = [&](bool all) {
        if (method == VerificationMethod::kStateVector) {
            if (P + E > StateVector::kMaxQubits) throw ResourceError("too many qubits for the state-vector check");
            return run(
                StateVector(P + E),
                [&](const StateVector& st, const Checkpoint& cp) {
                    return std::abs(st.overlap(expected_statevector(expected, cp, E)) - 1.0) < 1e-9;
                },
                all);
        }
        StabilizerState st(P + E + expected.num_outer);
        for (std::size_t v = 0; v < expected.num_outer; ++v) st.h(P + E + v);
        return run(
            st, [&](const StabilizerState& s, const Checkpoint& cp) { return s == expected_tableau(expected, cp, E); },
            all);
    };

    if (check(false)) {
        res.ok = true;
        res.message = "ok";
        return res;
    }
    // Locate the first block whose state goes wrong.
    VerificationResult final_failure = res;
    res = VerificationResult{};
    res.method = method;
    if (check(true)) return final_failure;
    return res;
}

GenerationSequence inject_fault(const GenerationSequence& seq, std::size_t index) {
    if (index >= seq.ops.size()) throw RangeError("fault position beyond the sequence");
    GenerationSequence out = seq;
    Instruction extra;
    extra.kind = InstructionKind::kSpinRotation;
    extra.emitter = seq.ops[index].emitter;
    extra.block = seq.ops[index].block;
    out.ops.insert(out.ops.begin() + static_cast<std::ptrdiff_t>(index), extra);
    return out;
}

}  // namespace egc
