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

#include "egc/graph_state.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "egc/errors.hpp"

namespace egc {

GraphState::GraphState(std::size_t num_vertices, std::size_t emitter_vertex)
    : n_(num_vertices), emitter_(emitter_vertex), adj_(num_vertices * num_vertices, 0) {
    if (num_vertices > 0 && emitter_vertex >= num_vertices) {
        throw ConstructionError("emitter vertex " + std::to_string(emitter_vertex) + " out of range");
    }
}

void GraphState::check_vertex(std::size_t v) const {
    if (v >= n_) throw ConstructionError("vertex " + std::to_string(v) + " out of range");
}

void GraphState::set_emitter_vertex(std::size_t v) {
    check_vertex(v);
    emitter_ = v;
}

bool GraphState::has_edge(std::size_t a, std::size_t b) const {
    check_vertex(a);
    check_vertex(b);
    return adj_[a * n_ + b] != 0;
}

void GraphState::add_edge(std::size_t a, std::size_t b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw ConstructionError("self-loops are not allowed");
    adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
}

void GraphState::remove_edge(std::size_t a, std::size_t b) {
    check_vertex(a);
    check_vertex(b);
    adj_[a * n_ + b] = adj_[b * n_ + a] = 0;
}

void GraphState::toggle_edge(std::size_t a, std::size_t b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw ConstructionError("self-loops are not allowed");
    adj_[a * n_ + b] ^= 1;
    adj_[b * n_ + a] ^= 1;
}

std::size_t GraphState::add_vertex() {
    std::size_t m = n_ + 1;
    std::vector<std::uint8_t> next(m * m, 0);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) next[a * m + b] = adj_[a * n_ + b];
    }
    adj_ = std::move(next);
    n_ = m;
    return m - 1;
}

std::vector<std::size_t> GraphState::neighbors(std::size_t v) const {
    check_vertex(v);
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u) {
        if (adj_[v * n_ + u]) out.push_back(u);
    }
    return out;
}

std::size_t GraphState::degree(std::size_t v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u) d += adj_[v * n_ + u];
    return d;
}

std::size_t GraphState::num_edges() const {
    std::size_t total = 0;
    for (auto a : adj_) total += a;
    return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> GraphState::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = a + 1; b < n_; ++b) {
            if (adj_[a * n_ + b]) out.emplace_back(a, b);
        }
    }
    return out;
}

bool GraphState::is_tree() const {
    if (n_ == 0) return false;
    if (num_edges() != n_ - 1) return false;
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto u : neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

GraphState GraphState::relabeled(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) throw ConstructionError("permutation size mismatch");
    GraphState out(n_, n_ ? perm[emitter_] : 0);
    for (auto [a, b] : edges()) out.add_edge(perm[a], perm[b]);
    return out;
}

GraphState path_graph(std::size_t n, std::size_t emitter) {
    GraphState g(n, emitter);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

GraphState star_graph(std::size_t n, std::size_t emitter) {
    GraphState g(n, emitter);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

GraphState complete_graph(std::size_t n, std::size_t emitter) {
    GraphState g(n, emitter);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
    }
    return g;
}

PauliOperator graph_stabilizer(const GraphState& g, std::size_t vertex) {
    PauliOperator s = PauliOperator::single(g.num_vertices(), vertex, Pauli::X);
    for (auto u : g.neighbors(vertex)) s.set(u, Pauli::Z);
    return s;
}

StabilizerGroup stabilizer_generators(const GraphState& g) {
    std::vector<PauliOperator> gens;
    gens.reserve(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) gens.push_back(graph_stabilizer(g, v));
    return StabilizerGroup(g.num_vertices(), std::move(gens));
}

GraphState local_complement(const GraphState& g, std::size_t q) {
    auto nbrs = g.neighbors(q);
    GraphState out = g;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) out.toggle_edge(nbrs[i], nbrs[j]);
    }
    return out;
}

PauliOperator lc_pauli_transform(const PauliOperator& p, std::size_t q, const GraphState& g) {
    if (p.num_qubits() != g.num_vertices()) throw DimensionError("operator and graph sizes differ");
    if (q >= g.num_vertices()) throw ConstructionError("vertex " + std::to_string(q) + " out of range");
    PauliOperator out = p;
    int flips = 0;
    // Vertex q: X -> X, Y -> -Z, Z -> Y.
    switch (p.at(q)) {
        case Pauli::Y: out.set(q, Pauli::Z); ++flips; break;
        case Pauli::Z: out.set(q, Pauli::Y); break;
        default: break;
    }
    // Neighbours: X -> -Y, Y -> X, Z -> Z.
    for (auto j : g.neighbors(q)) {
        switch (p.at(j)) {
            case Pauli::X: out.set(j, Pauli::Y); ++flips; break;
            case Pauli::Y: out.set(j, Pauli::X); break;
            default: break;
        }
    }
    return (flips & 1) ? out.negated() : out;
}

char generation_op_char(GenerationOp op) { return op == GenerationOp::kLeaf ? 'L' : 'P'; }

std::string generation_ops_str(const std::vector<GenerationOp>& ops) {
    std::string s;
    for (auto op : ops) s.push_back(generation_op_char(op));
    return s;
}

std::vector<GenerationOp> parse_generation_ops(const std::string& text) {
    std::vector<GenerationOp> ops;
    for (char c : text) {
        if (c == 'L' || c == 'l') ops.push_back(GenerationOp::kLeaf);
        else if (c == 'P' || c == 'p') ops.push_back(GenerationOp::kPathEdge);
        else throw ConstructionError(std::string("unknown generation op '") + c + "'");
    }
    return ops;
}

GraphState apply_generation_op(const GraphState& g, GenerationOp op) {
    if (g.num_vertices() == 0) throw ConstructionError("graph has no emitter vertex");
    GraphState out = g;
    std::size_t e = out.emitter_vertex();
    std::size_t v = out.add_vertex();
    out.add_edge(e, v);
    if (op == GenerationOp::kPathEdge) out.set_emitter_vertex(v);
    return out;
}

GraphState graph_from_generation_ops(const std::vector<GenerationOp>& ops) {
    GraphState g(1, 0);
    for (auto op : ops) g = apply_generation_op(g, op);
    return g;
}

namespace {

// Unique tree path from `from` to `to`, inclusive.
std::vector<std::size_t> tree_path(const GraphState& g, std::size_t from, std::size_t to) {
    std::vector<std::size_t> parent(g.num_vertices(), g.num_vertices());
    std::queue<std::size_t> queue;
    queue.push(from);
    parent[from] = from;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop();
        for (auto u : g.neighbors(v)) {
            if (parent[u] == g.num_vertices()) {
                parent[u] = v;
                queue.push(u);
            }
        }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<GenerationPlan> plan_from_spine(const GraphState& g, const std::vector<std::size_t>& spine) {
    std::vector<bool> on_spine(g.num_vertices(), false);
    for (auto v : spine) on_spine[v] = true;
    GenerationPlan plan;
    std::size_t covered = spine.size();
    for (std::size_t i = 0; i < spine.size(); ++i) {
        for (auto u : g.neighbors(spine[i])) {
            if (on_spine[u]) continue;
            if (g.degree(u) != 1) return std::nullopt;
            plan.ops.push_back(GenerationOp::kLeaf);
            plan.photon_vertices.push_back(u);
            plan.photon_is_leaf.push_back(true);
            ++covered;
        }
        if (i + 1 < spine.size()) {
            plan.ops.push_back(GenerationOp::kPathEdge);
            plan.photon_vertices.push_back(spine[i]);
            plan.photon_is_leaf.push_back(false);
        }
    }
    if (covered != g.num_vertices()) return std::nullopt;
    return plan;
}

}  // namespace

GenerationPlan generation_plan(const GraphState& g) {
    if (g.num_vertices() == 0) throw ConstructionError("empty graph");
    if (!g.is_tree()) throw ConstructionError("graph is not a tree, so no single emitter can grow it");
    std::optional<GenerationPlan> best;
    for (std::size_t start = 0; start < g.num_vertices(); ++start) {
        auto spine = tree_path(g, start, g.emitter_vertex());
        auto plan = plan_from_spine(g, spine);
        if (!plan) continue;
        if (!best || generation_ops_str(plan->ops) < generation_ops_str(best->ops)) best = std::move(plan);
    }
    if (!best) throw ConstructionError("marked graph is not reachable with leaf and path-edge creations");
    return *best;
}

bool is_single_emitter_generatable(const GraphState& g) {
    try {
        generation_plan(g);
        return true;
    } catch (const ConstructionError&) {
        return false;
    }
}

namespace {

std::string subtree_key(const GraphState& g, std::size_t v, std::size_t parent) {
    std::vector<std::string> keys;
    for (auto u : g.neighbors(v)) {
        if (u != parent) keys.push_back(subtree_key(g, u, v));
    }
    std::sort(keys.begin(), keys.end());
    std::string out = "(";
    for (auto& k : keys) out += k;
    out += ")";
    return out;
}

}  // namespace

std::string rooted_tree_key(const GraphState& g) {
    if (!g.is_tree()) throw ConstructionError("rooted_tree_key needs a tree");
    return subtree_key(g, g.emitter_vertex(), g.num_vertices());
}

GraphState canonical_tree(const GraphState& g) {
    if (!g.is_tree()) throw ConstructionError("canonical_tree needs a tree");
    std::size_t n = g.num_vertices();
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent(n, n);
    std::queue<std::size_t> queue;
    queue.push(g.emitter_vertex());
    parent[g.emitter_vertex()] = g.emitter_vertex();
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop();
        order.push_back(v);
        std::vector<std::pair<std::string, std::size_t>> kids;
        for (auto u : g.neighbors(v)) {
            if (parent[u] == n) {
                parent[u] = v;
                kids.emplace_back(subtree_key(g, u, v), u);
            }
        }
        std::sort(kids.begin(), kids.end());
        for (auto& [key, u] : kids) queue.push(u);
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[order[i]] = i;
    return g.relabeled(perm);
}

bool marked_isomorphic(const GraphState& a, const GraphState& b) {
    std::size_t n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    if (n == 0) return true;
    if (a.degree(a.emitter_vertex()) != b.degree(b.emitter_vertex())) return false;

    // Breadth-first order over a keeps the partial map connected.
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    auto visit_from = [&](std::size_t root) {
        std::queue<std::size_t> queue;
        queue.push(root);
        seen[root] = true;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop();
            order.push_back(v);
            for (auto u : a.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
    };
    visit_from(a.emitter_vertex());
    for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v]) visit_from(v);
    }

    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
        if (k == n) return true;
        std::size_t v = order[k];
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || a.degree(v) != b.degree(c)) continue;
            if ((v == a.emitter_vertex()) != (c == b.emitter_vertex())) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                ok = a.has_edge(v, order[j]) == b.has_edge(c, map[order[j]]);
            }
            if (!ok) continue;
            map[v] = c;
            used[c] = true;
            if (extend(k + 1)) return true;
            used[c] = false;
            map[v] = n;
        }
        return false;
    };
    return extend(0);
}

std::vector<GraphState> enumerate_single_emitter_progenitors(std::size_t n_photons, std::size_t cap) {
    if (n_photons < 1) throw RangeError("need at least one photon");
    if (n_photons > cap) {
        throw ResourceError("n_photons " + std::to_string(n_photons) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<GraphState> out;
    std::set<std::string> seen;
    for (std::uint64_t seq = 0; seq < (std::uint64_t{1} << n_photons); ++seq) {
        std::vector<GenerationOp> ops(n_photons);
        for (std::size_t i = 0; i < n_photons; ++i) {
            bool bit = (seq >> (n_photons - 1 - i)) & 1;
            ops[i] = bit ? GenerationOp::kPathEdge : GenerationOp::kLeaf;
        }
        GraphState g = graph_from_generation_ops(ops);
        if (seen.insert(rooted_tree_key(g)).second) out.push_back(canonical_tree(g));
    }
    return out;
}

bool is_caterpillar(const GraphState& g) {
    if (!g.is_tree()) return false;
    std::vector<std::size_t> inner;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) > 1) inner.push_back(v);
    }
    for (auto v : inner) {
        std::size_t inner_degree = 0;
        for (auto u : g.neighbors(v)) inner_degree += g.degree(u) > 1 ? 1 : 0;
        if (inner_degree > 2) return false;
    }
    return true;
}

std::string to_dot(const GraphState& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v;
        if (v == g.emitter_vertex()) out << " [style=filled, fillcolor=red]";
        else out << " [style=filled, fillcolor=lightblue]";
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace egc
