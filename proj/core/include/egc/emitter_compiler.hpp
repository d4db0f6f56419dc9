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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "egc/graph_code.hpp"
#include "egc/graph_state.hpp"

namespace egc {

enum class InstructionKind : std::uint8_t {
    kInitEmitter,
    kSpinRotation,  // Hadamard on the emitter
    kEmitPhoton,    // fresh photon in |0>, CNOT emitter -> photon
    kCz,
    kSwap,
    kMeasureX,
    kReinit,  // back to |+>
};

const char* instruction_name(InstructionKind kind);

struct Instruction {
    InstructionKind kind = InstructionKind::kInitEmitter;
    std::size_t emitter = 0;
    std::size_t other = 0;     // second emitter of CZ / SWAP
    std::ptrdiff_t photon = -1;  // EMIT_PHOTON: photon index
    std::ptrdiff_t vertex = -1;  // MEASURE_X: outer vertex being measured out
    std::size_t block = 0;     // 0: first logical vertex, i: outer op i-1, last: final measurement

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

enum class EmitterMode { kTwoEmitter, kEmitterMemory };

const char* emitter_mode_name(EmitterMode mode);
EmitterMode parse_emitter_mode(const std::string& text);

/// Emitter 0 and 1. In emitter-memory mode emitter 0 emits and emitter 1 is
/// the memory.
struct GenerationSequence {
    EmitterMode mode = EmitterMode::kTwoEmitter;
    std::vector<GenerationOp> outer_ops;
    std::vector<GenerationOp> inner_ops;
    std::size_t inner_code_qubits = 0;
    std::size_t num_photons = 0;
    std::size_t emitter_count = 2;
    std::vector<Instruction> ops;

    std::size_t num_outer() const { return outer_ops.size() + 1; }
};

struct ResourceCount {
    std::size_t spin_spin_gates = 0;
    std::size_t max_emitter_depth = 0;
    std::size_t photons = 0;

    friend bool operator==(const ResourceCount&, const ResourceCount&) = default;
};

/// Outer caterpillar as a LEAF/PATH_EDGE sequence. Outer vertex 0 is the
/// starting vertex and op i creates outer vertex i+1; vertex_of maps these
/// labels to the vertices of the graph that was passed in.
struct OuterPlan {
    std::vector<GenerationOp> ops;
    std::vector<std::size_t> vertex_of;
};

/// Throws ConstructionError when g is not a caterpillar.
OuterPlan outer_from_graph(const GraphState& g);

/// Two-emitter or emitter-plus-memory sequence for the outer graph with
/// every vertex replaced by the inner code. Throws ConstructionError when
/// the inner progenitor is outside the single-emitter class.
GenerationSequence compile(const std::vector<GenerationOp>& outer, const GraphCode& inner, EmitterMode mode);

ResourceCount count_resources(const GenerationSequence& seq);

/// Human-readable schedule, one instruction per line.
std::string schedule_text(const GenerationSequence& seq);

/// Target of a compilation. Photons come first, in emission order; outer
/// vertex v is vertex num_photons + v. Each outer vertex doubles as the input
/// of its copy of the inner progenitor.
struct ConcatenatedGraph {
    std::vector<GenerationOp> outer_ops;
    GraphState inner_progenitor;
    GenerationPlan inner_plan;
    GraphState graph;
    std::size_t num_photons = 0;
    std::size_t num_outer = 0;
    std::size_t photons_per_vertex = 0;
    /// Leaf photons come out with an extra Hadamard relative to the graph.
    std::vector<bool> leaf_frame;
};

ConcatenatedGraph concatenated_graph(const std::vector<GenerationOp>& outer, const GraphCode& inner);

enum class VerificationMethod { kAuto, kStateVector, kStabilizer };

struct VerificationOptions {
    VerificationMethod method = VerificationMethod::kAuto;
    /// Instruction index -> forced outcome of that MEASURE_X (default +1).
    std::map<std::size_t, int> outcomes;
    /// Total-qubit bound (photons + emitters) for the state-vector method.
    std::size_t statevector_limit = 12;
};

struct VerificationResult {
    bool ok = false;
    VerificationMethod method = VerificationMethod::kStabilizer;
    std::ptrdiff_t divergent_block = -1;
    std::ptrdiff_t divergent_step = -1;  // first instruction of that block
    std::string message;
};

/// Simulates the sequence and compares with the target, block by block on
/// failure. A -1 outcome on outer vertex v is accounted for by the logical
/// Z of v's inner code (equivalently, a sign flip of its logical X).
VerificationResult verify_sequence(const GenerationSequence& seq, const ConcatenatedGraph& expected,
                                   const VerificationOptions& options = {});

/// Test hook: an extra SPIN_ROTATION inserted before instruction `index`
/// on the emitter that instruction uses.
GenerationSequence inject_fault(const GenerationSequence& seq, std::size_t index);

}  // namespace egc
