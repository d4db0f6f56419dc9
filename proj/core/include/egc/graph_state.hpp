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
#include <string>
#include <vector>

#include "egc/pauli.hpp"

namespace egc {

/// Simple undirected graph with one marked vertex (the emitter spin).
class GraphState {
  public:
    GraphState() = default;
    explicit GraphState(std::size_t num_vertices, std::size_t emitter_vertex = 0);

    std::size_t num_vertices() const { return n_; }
    std::size_t emitter_vertex() const { return emitter_; }
    void set_emitter_vertex(std::size_t v);

    bool has_edge(std::size_t a, std::size_t b) const;
    void add_edge(std::size_t a, std::size_t b);
    void remove_edge(std::size_t a, std::size_t b);
    void toggle_edge(std::size_t a, std::size_t b);

    /// Appends an isolated vertex and returns its index.
    std::size_t add_vertex();

    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    std::size_t num_edges() const;
    /// Edges as (a, b) with a < b, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool is_tree() const;

    /// Copy with vertex v of this graph placed at position perm[v].
    GraphState relabeled(const std::vector<std::size_t>& perm) const;

    friend bool operator==(const GraphState&, const GraphState&) = default;

  private:
    void check_vertex(std::size_t v) const;

    std::size_t n_ = 0;
    std::size_t emitter_ = 0;
    std::vector<std::uint8_t> adj_;  // row-major n x n
};

/// Path a - b - c ... on n vertices, emitter at vertex `emitter`.
GraphState path_graph(std::size_t n, std::size_t emitter = 0);
/// Star with centre 0 and leaves 1..n-1, emitter at `emitter`.
GraphState star_graph(std::size_t n, std::size_t emitter = 0);
GraphState complete_graph(std::size_t n, std::size_t emitter = 0);

/// S_i = X_i prod_{j in N(i)} Z_j, one generator per vertex.
StabilizerGroup stabilizer_generators(const GraphState& g);
PauliOperator graph_stabilizer(const GraphState& g, std::size_t vertex);

/// Toggles every edge inside N(q).
GraphState local_complement(const GraphState& g, std::size_t q);

/// Image of p under conjugation by the local Clifford that realises
/// local_complement(g, q): on q, X->X, Y->-Z, Z->Y; on neighbours of q,
/// X->-Y, Y->X, Z->Z; identity elsewhere.
PauliOperator lc_pauli_transform(const PauliOperator& p, std::size_t q, const GraphState& g);

enum class GenerationOp : std::uint8_t { kLeaf, kPathEdge };

char generation_op_char(GenerationOp op);  // 'L' or 'P'
std::string generation_ops_str(const std::vector<GenerationOp>& ops);
std::vector<GenerationOp> parse_generation_ops(const std::string& text);

/// LEAF attaches a new vertex to the emitter. PATH_EDGE does the same and
/// then moves the emitter mark onto the new vertex.
GraphState apply_generation_op(const GraphState& g, GenerationOp op);
/// Lone emitter vertex followed by `ops`.
GraphState graph_from_generation_ops(const std::vector<GenerationOp>& ops);

/// A way to grow a marked caterpillar from a lone emitter.
///
/// `photon_vertices[k]` is the vertex of the target graph occupied by the
/// k-th emitted photon under the physical emission convention: a leaf
/// photon sits on the new leaf, while a path-edge photon takes over the
/// emitter's previous position and the emitter moves on. The emitter ends on
/// the marked vertex.
struct GenerationPlan {
    std::vector<GenerationOp> ops;
    std::vector<std::size_t> photon_vertices;
    std::vector<bool> photon_is_leaf;
};

/// Lexicographically smallest generating plan for a marked graph, or throws
/// ConstructionError if the graph is not in the single-emitter class.
GenerationPlan generation_plan(const GraphState& g);
bool is_single_emitter_generatable(const GraphState& g);

/// Rooted-tree certificate with the emitter as root (AHU encoding).
/// Only valid for trees.
std::string rooted_tree_key(const GraphState& g);
/// Canonical relabeling of a marked tree: emitter first, then breadth-first
/// with children ordered by subtree key.
GraphState canonical_tree(const GraphState& g);

/// Isomorphism of graphs with the emitter vertex pinned.
bool marked_isomorphic(const GraphState& a, const GraphState& b);

/// Default cap on photons for progenitor enumeration.
inline constexpr std::size_t kDefaultPhotonCap = 8;

/// All marked graphs reachable by {LEAF, PATH_EDGE}^n_photons from a lone
/// emitter, one canonical representative per isomorphism class, in order of
/// first appearance when sequences are enumerated as binary counters
/// (LEAF = 0, first op in the most significant position).
std::vector<GraphState> enumerate_single_emitter_progenitors(std::size_t n_photons,
                                                             std::size_t cap = kDefaultPhotonCap);

/// True iff g is a tree whose non-leaf vertices form a path (stars and
/// chains included).
bool is_caterpillar(const GraphState& g);

/// Graphviz rendering; the emitter vertex is filled red.
std::string to_dot(const GraphState& g, const std::string& name = "G");

}  // namespace egc
