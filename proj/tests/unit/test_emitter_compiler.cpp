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

#include <algorithm>

#include <gtest/gtest.h>

#include "egc/emitter_compiler.hpp"
#include "egc/errors.hpp"
#include "egc/statevector.hpp"
#include "oracles.hpp"

namespace egc {
namespace {

std::size_t count_kind(const GenerationSequence& s, InstructionKind k) {
    return static_cast<std::size_t>(
        std::count_if(s.ops.begin(), s.ops.end(), [&](const Instruction& i) { return i.kind == k; }));
}

GraphCode inner_code(const std::string& ops) { return code_from_progenitor(graph_from_generation_ops(parse_generation_ops(ops))); }

// Runs the sequence directly on a dense vector, photons first then the two
// emitters, with every measurement taking the +1 branch.
StateVector run_dense(const GenerationSequence& seq) {
    std::size_t P = seq.num_photons;
    StateVector sv(P + 2);
    for (const auto& ins : seq.ops) {
        std::size_t e = P + ins.emitter;
        switch (ins.kind) {
            case InstructionKind::kInitEmitter: sv.h(e); break;
            case InstructionKind::kSpinRotation: sv.h(e); break;
            case InstructionKind::kEmitPhoton: sv.cnot(e, static_cast<std::size_t>(ins.photon)); break;
            case InstructionKind::kCz: sv.cz(e, P + ins.other); break;
            case InstructionKind::kSwap: sv.swap(e, P + ins.other); break;
            case InstructionKind::kMeasureX: EXPECT_GT(sv.project_x(e, +1), 0.0); break;
            case InstructionKind::kReinit: break;  // already |+> after a +1 outcome
        }
    }
    return sv;
}

// <+|^outer |G> on the photons, leaf photons Hadamard-conjugated, emitters in |+>.
StateVector expected_dense(const GraphState& g, std::size_t photons, const std::vector<bool>& leaf) {
    auto full = oracle::graph_state_vector(g);
    std::vector<std::complex<double>> amp(std::size_t{1} << photons, 0.0);
    for (std::size_t i = 0; i < full.size(); ++i) amp[i & ((std::size_t{1} << photons) - 1)] += full[i];
    std::vector<std::complex<double>> with_emitters(amp.size() * 4);
    for (std::size_t i = 0; i < amp.size(); ++i)
        for (std::size_t e = 0; e < 4; ++e) with_emitters[i | (e << photons)] = amp[i] * 0.5;
    double norm = 0.0;
    for (auto c : with_emitters) norm += std::norm(c);
    for (auto& c : with_emitters) c /= std::sqrt(norm);
    auto sv = StateVector::from_amplitudes(photons + 2, with_emitters);
    for (std::size_t p = 0; p < photons; ++p)
        if (leaf[p]) sv.h(p);
    return sv;
}

TEST(Compiler, TwoChainBareQubit) {
    auto seq = compile(parse_generation_ops("P"), inner_code("L"), EmitterMode::kTwoEmitter);
    EXPECT_EQ(count_kind(seq, InstructionKind::kCz), 1u);
    // One mid-sequence measurement plus the terminal one that releases the last vertex.
    EXPECT_EQ(count_kind(seq, InstructionKind::kMeasureX), 2u);
    EXPECT_EQ(seq.num_photons, 2u);
    auto target = concatenated_graph(seq.outer_ops, inner_code("L"));
    EXPECT_TRUE(verify_sequence(seq, target).ok);
}

TEST(Compiler, ThreeChainOfStarsMatchesHandBuiltGraph) {
    auto inner = inner_code("LL");
    auto seq = compile(parse_generation_ops("PP"), inner, EmitterMode::kTwoEmitter);
    ASSERT_EQ(seq.num_photons, 6u);
    // Photons 2v, 2v+1 hang off outer vertex 6+v; outer vertices form a chain.
    GraphState g(9);
    for (std::size_t v = 0; v < 3; ++v) {
        g.add_edge(6 + v, 2 * v);
        g.add_edge(6 + v, 2 * v + 1);
    }
    g.add_edge(6, 7);
    g.add_edge(7, 8);
    auto expected = expected_dense(g, 6, std::vector<bool>(6, true));
    EXPECT_NEAR(run_dense(seq).overlap(expected), 1.0, 1e-9);
    auto target = concatenated_graph(seq.outer_ops, inner);
    EXPECT_EQ(target.graph.edges(), g.edges());
    EXPECT_TRUE(verify_sequence(seq, target, {VerificationMethod::kStateVector, {}, 12}).ok);
    EXPECT_TRUE(verify_sequence(seq, target, {VerificationMethod::kStabilizer, {}, 12}).ok);
}

TEST(Compiler, AllSmallCombinationsVerify) {
    for (std::size_t inner_n = 1; inner_n <= 4; ++inner_n)
        for (const auto& ig : enumerate_single_emitter_progenitors(inner_n)) {
            auto inner = code_from_progenitor(ig);
            for (std::size_t m = 1; m <= 5; ++m)
                for (std::uint32_t bits = 0; bits < (1U << m); ++bits) {
                    std::vector<GenerationOp> outer;
                    for (std::size_t i = 0; i < m; ++i)
                        outer.push_back((bits >> i) & 1U ? GenerationOp::kPathEdge : GenerationOp::kLeaf);
                    auto target = concatenated_graph(outer, inner);
                    for (auto mode : {EmitterMode::kTwoEmitter, EmitterMode::kEmitterMemory}) {
                        auto seq = compile(outer, inner, mode);
                        auto res = verify_sequence(seq, target);
                        EXPECT_TRUE(res.ok) << inner.id() << " " << generation_ops_str(outer) << " " << res.message;
                    }
                }
        }
}

TEST(Compiler, SpinSpinGatesDependOnlyOnOuter) {
    auto outer = parse_generation_ops("LPLLPLPPL");  // 10 outer vertices
    for (auto mode : {EmitterMode::kTwoEmitter, EmitterMode::kEmitterMemory}) {
        std::size_t ref = 0;
        for (std::size_t n = 2; n <= 8; ++n) {
            auto inner = code_from_progenitor(enumerate_single_emitter_progenitors(n).back());
            auto rc = count_resources(compile(outer, inner, mode));
            if (n == 2) ref = rc.spin_spin_gates;
            EXPECT_EQ(rc.spin_spin_gates, ref);
            EXPECT_EQ(rc.photons, 10 * n);
        }
    }
}

TEST(Compiler, MemoryModeSwaps) {
    auto outer = parse_generation_ops("LPLLPLPPL");
    auto seq = compile(outer, inner_code("LP"), EmitterMode::kEmitterMemory);
    std::size_t path_edges = static_cast<std::size_t>(std::count(outer.begin(), outer.end(), GenerationOp::kPathEdge));
    // One SWAP parks the first vertex in memory, then one per path edge.
    EXPECT_EQ(count_kind(seq, InstructionKind::kSwap), path_edges + 1);
    EXPECT_EQ(count_kind(compile(outer, inner_code("LP"), EmitterMode::kTwoEmitter), InstructionKind::kSwap), 0u);
}

TEST(Compiler, EmptySequenceResources) {
    GenerationSequence empty;
    EXPECT_EQ(count_resources(empty), (ResourceCount{0, 0, 0}));
}

TEST(Compiler, MinusOutcomesAreTrackedAsLogicalSignFlips) {
    auto inner = inner_code("LP");
    auto outer = parse_generation_ops("PLP");
    auto target = concatenated_graph(outer, inner);
    for (auto mode : {EmitterMode::kTwoEmitter, EmitterMode::kEmitterMemory}) {
        auto seq = compile(outer, inner, mode);
        std::vector<std::size_t> measures;
        for (std::size_t i = 0; i < seq.ops.size(); ++i)
            if (seq.ops[i].kind == InstructionKind::kMeasureX) measures.push_back(i);
        for (std::uint32_t mask = 1; mask < (1U << measures.size()); ++mask) {
            VerificationOptions opt;
            for (std::size_t k = 0; k < measures.size(); ++k)
                if ((mask >> k) & 1U) opt.outcomes[measures[k]] = -1;
            for (auto method : {VerificationMethod::kStateVector, VerificationMethod::kStabilizer}) {
                opt.method = method;
                auto res = verify_sequence(seq, target, opt);
                EXPECT_TRUE(res.ok) << mask << " " << res.message;
            }
        }
    }
}

TEST(Compiler, InjectedFaultIsReported) {
    auto inner = inner_code("LL");
    auto outer = parse_generation_ops("LPL");
    auto seq = compile(outer, inner, EmitterMode::kTwoEmitter);
    auto target = concatenated_graph(outer, inner);
    for (std::size_t idx : {std::size_t{3}, seq.ops.size() / 2}) {
        auto bad = inject_fault(seq, idx);
        for (auto method : {VerificationMethod::kStateVector, VerificationMethod::kStabilizer}) {
            auto res = verify_sequence(bad, target, {method, {}, 12});
            EXPECT_FALSE(res.ok);
            EXPECT_GE(res.divergent_step, 0);
            EXPECT_EQ(static_cast<std::size_t>(res.divergent_block), bad.ops[idx].block);
        }
    }
}

TEST(Compiler, WrongTargetFails) {
    auto inner = inner_code("LL");
    auto seq = compile(parse_generation_ops("LL"), inner, EmitterMode::kTwoEmitter);
    auto other = concatenated_graph(parse_generation_ops("PL"), inner);
    EXPECT_FALSE(verify_sequence(seq, other).ok);
}

TEST(Compiler, OuterFromGraph) {
    auto g = graph_from_generation_ops(parse_generation_ops("LPPL"));
    auto plan = outer_from_graph(g);
    EXPECT_EQ(plan.ops.size(), 4u);
    EXPECT_EQ(plan.vertex_of.size(), 5u);
    GraphState tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    EXPECT_THROW(outer_from_graph(tri), ConstructionError);
    EXPECT_EQ(parse_emitter_mode("emitter-memory"), EmitterMode::kEmitterMemory);
}

TEST(Compiler, ScheduleText) {
    auto seq = compile(parse_generation_ops("P"), inner_code("L"), EmitterMode::kEmitterMemory);
    auto text = schedule_text(seq);
    EXPECT_NE(text.find("SWAP"), std::string::npos);
    EXPECT_NE(text.find("EMIT_PHOTON"), std::string::npos);
}

}  // namespace
}  // namespace egc
