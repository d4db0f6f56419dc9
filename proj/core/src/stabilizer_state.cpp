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

#include "egc/stabilizer_state.hpp"

#include <utility>

#include "egc/errors.hpp"

namespace egc {

StabilizerState::StabilizerState(std::size_t num_qubits) : n_(num_qubits) {
    rows_.reserve(n_);
    for (std::size_t q = 0; q < n_; ++q) rows_.push_back(PauliOperator::single(n_, q, Pauli::Z));
}

StabilizerState StabilizerState::from_graph(const GraphState& g) {
    StabilizerState st(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) st.rows_[v] = graph_stabilizer(g, v);
    return st;
}

namespace {

void check_qubit(std::size_t q, std::size_t n) {
    if (q >= n) throw RangeError("qubit " + std::to_string(q) + " out of range");
}

}  // namespace

void StabilizerState::h(std::size_t q) {
    check_qubit(q, n_);
    for (auto& r : rows_) {
        Pauli p = r.at(q);
        if (p == Pauli::X) r.set(q, Pauli::Z);
        else if (p == Pauli::Z) r.set(q, Pauli::X);
        else if (p == Pauli::Y) flip(r);
    }
}

void StabilizerState::s(std::size_t q) {
    check_qubit(q, n_);
    for (auto& r : rows_) {
        Pauli p = r.at(q);
        if (p == Pauli::X) {
            r.set(q, Pauli::Y);
        } else if (p == Pauli::Y) {
            r.set(q, Pauli::X);
            flip(r);
        }
    }
}

void StabilizerState::x(std::size_t q) {
    check_qubit(q, n_);
    for (auto& r : rows_) {
        if (r.z(q)) flip(r);
    }
}

void StabilizerState::z(std::size_t q) {
    check_qubit(q, n_);
    for (auto& r : rows_) {
        if (r.x(q)) flip(r);
    }
}

void StabilizerState::cnot(std::size_t a, std::size_t b) {
    check_qubit(a, n_);
    check_qubit(b, n_);
    if (a == b) throw DimensionError("CNOT needs two distinct qubits");
    for (auto& r : rows_) {
        bool xa = r.x(a), za = r.z(a), xb = r.x(b), zb = r.z(b);
        if (xa && zb && (xb == za)) flip(r);
        xb ^= xa;
        za ^= zb;
        r.set(a, static_cast<Pauli>((xa ? 1 : 0) | (za ? 2 : 0)));
        r.set(b, static_cast<Pauli>((xb ? 1 : 0) | (zb ? 2 : 0)));
    }
}

void StabilizerState::cz(std::size_t a, std::size_t b) {
    h(b);
    cnot(a, b);
    h(b);
}

void StabilizerState::swap(std::size_t a, std::size_t b) {
    check_qubit(a, n_);
    check_qubit(b, n_);
    for (auto& r : rows_) {
        Pauli pa = r.at(a), pb = r.at(b);
        r.set(a, pb);
        r.set(b, pa);
    }
}

namespace {

// Product of generator rows equal to +-p (letters), or nullopt-like empty
// operator when p is not in the group up to sign.
bool reduce_into_group(const std::vector<PauliOperator>& rows, const PauliOperator& p, PauliOperator& acc) {
    std::size_t n = p.num_qubits();
    std::vector<PauliOperator> work = rows;
    PauliOperator target = p;
    acc = PauliOperator(n);
    // Eliminate column by column; `target` tracks what is left to explain.
    std::size_t next = 0;
    for (std::size_t col = 0; col < 2 * n && next < work.size(); ++col) {
        auto bit = [&](const PauliOperator& r) { return col < n ? r.x(col) : r.z(col - n); };
        std::size_t piv = next;
        while (piv < work.size() && !bit(work[piv])) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[piv], work[next]);
        for (std::size_t k = next + 1; k < work.size(); ++k) {
            if (bit(work[k])) work[k] *= work[next];
        }
        if (bit(target)) {
            target *= work[next];
            acc *= work[next];
        }
        ++next;
    }
    return target.is_identity();
}

}  // namespace

MeasurementResult StabilizerState::measure(const PauliOperator& p, int forced) {
    if (p.num_qubits() != n_) throw DimensionError("measured Pauli has the wrong size");
    if (!p.is_hermitian()) throw DimensionError("measured Pauli is not Hermitian");
    if (forced != 1 && forced != -1) throw RangeError("outcome must be +1 or -1");
    std::size_t first = rows_.size();
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (!commutes(rows_[k], p)) {
            if (first == rows_.size()) {
                first = k;
            } else {
                rows_[k] *= rows_[first];
            }
        }
    }
    if (first < rows_.size()) {
        rows_[first] = p;
        if (p.sign() != forced) flip(rows_[first]);
        return {forced, false};
    }
    return {expectation(p), true};
}

MeasurementResult StabilizerState::measure_x(std::size_t q, int forced) {
    check_qubit(q, n_);
    return measure(PauliOperator::single(n_, q, Pauli::X), forced);
}

void StabilizerState::reset_plus(std::size_t q) {
    auto r = measure_x(q, +1);
    if (r.outcome == -1) z(q);
}

int StabilizerState::expectation(const PauliOperator& p) const {
    for (const auto& r : rows_) {
        if (!commutes(r, p)) return 0;
    }
    PauliOperator acc;
    if (!reduce_into_group(rows_, p, acc)) return 0;
    // acc has the letters of p; compare signs.
    return acc.sign() == p.sign() ? +1 : -1;
}

std::vector<PauliOperator> StabilizerState::canonical_generators() const {
    std::vector<PauliOperator> work = rows_;
    std::size_t next = 0;
    for (std::size_t col = 0; col < 2 * n_ && next < work.size(); ++col) {
        // Columns interleave as x0, z0, x1, z1, ...
        std::size_t q = col / 2;
        bool is_x = (col % 2) == 0;
        auto bit = [&](const PauliOperator& r) { return is_x ? r.x(q) : r.z(q); };
        std::size_t piv = next;
        while (piv < work.size() && !bit(work[piv])) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[piv], work[next]);
        for (std::size_t k = 0; k < work.size(); ++k) {
            if (k != next && bit(work[k])) work[k] *= work[next];
        }
        ++next;
    }
    return work;
}

bool operator==(const StabilizerState& a, const StabilizerState& b) {
    return a.n_ == b.n_ && a.canonical_generators() == b.canonical_generators();
}

}  // namespace egc
