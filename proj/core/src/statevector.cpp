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

#include "egc/statevector.hpp"

#include <cmath>

#include "egc/errors.hpp"

namespace egc {

namespace {

void check(std::size_t q, std::size_t n) {
    if (q >= n) throw RangeError("qubit " + std::to_string(q) + " out of range");
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : n_(num_qubits) {
    if (n_ > kMaxQubits) throw ResourceError("state vector limited to " + std::to_string(kMaxQubits) + " qubits");
    amp_.assign(std::size_t{1} << n_, Amplitude{0.0, 0.0});
    amp_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::vector<Amplitude> amplitudes) {
    StateVector s(num_qubits);
    if (amplitudes.size() != s.amp_.size()) throw DimensionError("amplitude count does not match qubit count");
    s.amp_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::from_graph(const GraphState& g) {
    std::size_t n = g.num_vertices();
    StateVector s(n);
    double a = std::pow(2.0, -0.5 * static_cast<double>(n));
    auto edges = g.edges();
    for (std::size_t idx = 0; idx < s.amp_.size(); ++idx) {
        int parity = 0;
        for (auto [u, v] : edges) parity ^= static_cast<int>(((idx >> u) & (idx >> v)) & 1U);
        s.amp_[idx] = parity ? -a : a;
    }
    return s;
}

void StateVector::h(std::size_t q) {
    check(q, n_);
    const double r = 1.0 / std::sqrt(2.0);
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) continue;
        Amplitude a0 = amp_[i], a1 = amp_[i | bit];
        amp_[i] = r * (a0 + a1);
        amp_[i | bit] = r * (a0 - a1);
    }
}

void StateVector::x(std::size_t q) {
    check(q, n_);
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
    }
}

void StateVector::z(std::size_t q) {
    check(q, n_);
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) amp_[i] = -amp_[i];
    }
}

void StateVector::cnot(std::size_t c, std::size_t t) {
    check(c, n_);
    check(t, n_);
    if (c == t) throw DimensionError("CNOT needs two distinct qubits");
    std::size_t cb = std::size_t{1} << c, tb = std::size_t{1} << t;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
    }
}

void StateVector::cz(std::size_t a, std::size_t b) {
    check(a, n_);
    check(b, n_);
    std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & ab) && (i & bb)) amp_[i] = -amp_[i];
    }
}

void StateVector::swap(std::size_t a, std::size_t b) {
    check(a, n_);
    check(b, n_);
    if (a == b) return;
    std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & ab) && !(i & bb)) std::swap(amp_[i], amp_[(i & ~ab) | bb]);
    }
}

void StateVector::apply(const PauliOperator& p) {
    if (p.num_qubits() != n_) throw DimensionError("Pauli size does not match the state");
    // Y = i X Z in the symplectic convention; apply Z first, then X.
    for (std::size_t q = 0; q < n_; ++q) {
        if (p.z(q)) z(q);
        if (p.x(q)) x(q);
    }
    static const Amplitude kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::size_t ys = 0;
    for (std::size_t q = 0; q < n_; ++q) ys += (p.x(q) && p.z(q)) ? 1 : 0;
    Amplitude f = kPhase[(p.phase() + ys) & 3];
    for (auto& a : amp_) a *= f;
}

double StateVector::project_x(std::size_t q, int outcome) {
    check(q, n_);
    if (outcome != 1 && outcome != -1) throw RangeError("outcome must be +1 or -1");
    std::size_t bit = std::size_t{1} << q;
    std::vector<Amplitude> out = amp_;
    double prob = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) continue;
        Amplitude c = 0.5 * (amp_[i] + static_cast<double>(outcome) * amp_[i | bit]);
        out[i] = c;
        out[i | bit] = static_cast<double>(outcome) * c;
        prob += 2.0 * std::norm(c);
    }
    if (prob <= 1e-300) return 0.0;
    double s = 1.0 / std::sqrt(prob);
    for (auto& a : out) a *= s;
    amp_ = std::move(out);
    return prob;
}

double StateVector::norm() const {
    double s = 0.0;
    for (auto a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

double StateVector::expectation(const PauliOperator& p) const {
    StateVector t = *this;
    t.apply(p);
    Amplitude s = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * t.amp_[i];
    return s.real();
}

double StateVector::overlap(const StateVector& other) const {
    if (other.n_ != n_) throw DimensionError("states have different sizes");
    Amplitude s = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * other.amp_[i];
    return std::abs(s);
}

}  // namespace egc
