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

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace egc::oracle {

Matrix identity(std::size_t dim) {
    Matrix m{dim, std::vector<Complex>(dim * dim, 0.0)};
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
    Matrix m{x.dim, std::vector<Complex>(x.dim * x.dim, 0.0)};
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t k = 0; k < x.dim; ++k)
            for (std::size_t j = 0; j < x.dim; ++j) m(i, j) += x(i, k) * y(k, j);
    return m;
}

Matrix scaled(const Matrix& x, Complex s) {
    Matrix m = x;
    for (auto& v : m.a) v *= s;
    return m;
}

bool approx_equal(const Matrix& x, const Matrix& y, double tol) {
    if (x.dim != y.dim) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        if (std::abs(x.a[i] - y.a[i]) > tol) return false;
    }
    return true;
}

Matrix pauli_matrix(const std::string& text) {
    Complex phase = 1.0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') phase = -1.0;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase *= Complex(0.0, 1.0);
        ++pos;
    }
    std::string letters = text.substr(pos);
    std::size_t n = letters.size();
    std::size_t dim = std::size_t{1} << n;
    const Complex i(0.0, 1.0);
    auto single = [&](char c, int r, int col) -> Complex {
        switch (c) {
            case 'I':
            case '_':
                return r == col ? 1.0 : 0.0;
            case 'X':
                return r != col ? 1.0 : 0.0;
            case 'Z':
                return r == col ? (r == 0 ? 1.0 : -1.0) : 0.0;
            case 'Y':
                if (r == col) return 0.0;
                return r == 0 ? -i : i;
        }
        throw std::invalid_argument("bad Pauli letter");
    };
    Matrix m{dim, std::vector<Complex>(dim * dim, 0.0)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex v = phase;
            for (std::size_t k = 0; k < n && v != 0.0; ++k) {
                v *= single(letters[k], static_cast<int>((r >> k) & 1U), static_cast<int>((c >> k) & 1U));
            }
            m(r, c) = v;
        }
    }
    return m;
}

Vec apply_letters(const std::vector<int>& letters, const Vec& v) {
    std::size_t xmask = 0, zmask = 0, ys = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (letters[k] == 1 || letters[k] == 3) xmask |= std::size_t{1} << k;
        if (letters[k] == 2 || letters[k] == 3) zmask |= std::size_t{1} << k;
        if (letters[k] == 3) ++ys;
    }
    static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex f = kI[ys % 4];
    Vec out(v.size(), 0.0);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        int sgn = (__builtin_popcountll(idx & zmask) & 1) ? -1 : 1;
        out[idx ^ xmask] += f * static_cast<double>(sgn) * v[idx];
    }
    return out;
}

Vec graph_state_vector(const GraphState& g) {
    std::size_t n = g.num_vertices();
    Vec v(std::size_t{1} << n);
    double a = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        int parity = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (g.has_edge(x, y) && ((idx >> x) & 1U) && ((idx >> y) & 1U)) parity ^= 1;
        v[idx] = parity ? -a : a;
    }
    return v;
}

Codespace codespace(const GraphState& g) {
    std::size_t q = g.emitter_vertex();
    std::size_t n = g.num_vertices() - 1;
    Vec full = graph_state_vector(g);
    Codespace cs;
    cs.n = n;
    cs.plus.assign(std::size_t{1} << n, 0.0);
    cs.minus.assign(std::size_t{1} << n, 0.0);
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
        // Drop bit q.
        std::size_t low = idx & ((std::size_t{1} << q) - 1);
        std::size_t high = (idx >> (q + 1)) << q;
        std::size_t r = low | high;
        bool one = (idx >> q) & 1U;
        cs.plus[r] += full[idx];
        cs.minus[r] += one ? -full[idx] : full[idx];
    }
    for (Vec* v : {&cs.plus, &cs.minus}) {
        double s = 0.0;
        for (auto c : *v) s += std::norm(c);
        for (auto& c : *v) c /= std::sqrt(s);
    }
    return cs;
}

namespace {

Complex inner(const Vec& a, const Vec& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Vec kron(const Vec& low, const Vec& high) {
    Vec out(low.size() * high.size());
    for (std::size_t h = 0; h < high.size(); ++h)
        for (std::size_t l = 0; l < low.size(); ++l) out[l + h * low.size()] = low[l] * high[h];
    return out;
}

// Measured pair parities of a pattern, as letters on 2n qubits.
std::vector<std::vector<int>> pattern_generators(std::size_t n, std::uint32_t index, std::uint32_t w_bits) {
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        int outcome = static_cast<int>(index % 3);
        index /= 3;
        auto parity = [&](int letter) {
            std::vector<int> g(2 * n, 0);
            g[i] = g[n + i] = letter;
            gens.push_back(g);
        };
        if (outcome == 0) {
            parity(1);
            parity(2);
        } else if (outcome == 1) {
            parity(((w_bits >> i) & 1U) ? 1 : 2);
        }
    }
    return gens;
}

enum class Action { kNone, kIdentity, kXX, kZZ };

// Action of the product of the selected generators on codespace (x) codespace.
Action classify(const std::vector<Vec>& basis, const std::vector<std::vector<int>>& gens, std::uint32_t subset) {
    double m[4][4];
    for (std::size_t c = 0; c < 4; ++c) {
        Vec v = basis[c];
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if ((subset >> j) & 1U) v = apply_letters(gens[j], v);
        }
        for (std::size_t r = 0; r < 4; ++r) {
            Complex e = inner(basis[r], v);
            if (std::abs(e.imag()) > 1e-9) return Action::kNone;
            m[r][c] = e.real();
        }
    }
    auto matches = [&](auto entry) {
        for (int s : {1, -1}) {
            bool ok = true;
            for (std::size_t r = 0; r < 4 && ok; ++r)
                for (std::size_t c = 0; c < 4 && ok; ++c) ok = std::abs(m[r][c] - s * entry(r, c)) < 1e-9;
            if (ok) return true;
        }
        return false;
    };
    // Basis index r = a | (b << 1) with a, b = 0 for psi_plus, 1 for psi_minus.
    if (matches([](std::size_t r, std::size_t c) { return r == c ? 1.0 : 0.0; })) return Action::kIdentity;
    if (matches([](std::size_t r, std::size_t c) {
            if (r != c) return 0.0;
            return (__builtin_popcountll(r) & 1) ? -1.0 : 1.0;
        }))
        return Action::kXX;
    if (matches([](std::size_t r, std::size_t c) { return r == (c ^ 3U) ? 1.0 : 0.0; })) return Action::kZZ;
    return Action::kNone;
}

std::vector<Vec> two_block_basis(const Codespace& cs) {
    const Vec* s[2] = {&cs.plus, &cs.minus};
    std::vector<Vec> basis;
    for (std::size_t r = 0; r < 4; ++r) basis.push_back(kron(*s[r & 1U], *s[(r >> 1) & 1U]));
    return basis;
}

std::uint32_t num_patterns(std::size_t n) {
    std::uint32_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= 3;
    return c;
}

}  // namespace

Matrix logical_action(const Codespace& cs, const std::vector<int>& letters) {
    const Vec* s[2] = {&cs.plus, &cs.minus};
    Matrix m{2, std::vector<Complex>(4, 0.0)};
    for (std::size_t c = 0; c < 2; ++c) {
        Vec v = apply_letters(letters, *s[c]);
        for (std::size_t r = 0; r < 2; ++r) m(r, c) = inner(*s[r], v);
    }
    return m;
}

ErasureOracle erasure_oracle(const GraphState& progenitor, std::uint32_t w_bits) {
    Codespace cs = codespace(progenitor);
    std::vector<Vec> basis = two_block_basis(cs);
    ErasureOracle o;
    o.n = cs.n;
    std::uint32_t np = num_patterns(cs.n);
    o.xx.assign(np, false);
    o.zz.assign(np, false);
    for (std::uint32_t idx = 0; idx < np; ++idx) {
        auto gens = pattern_generators(cs.n, idx, w_bits);
        for (std::uint32_t subset = 0; subset < (1U << gens.size()); ++subset) {
            Action a = classify(basis, gens, subset);
            if (a == Action::kXX) o.xx[idx] = true;
            if (a == Action::kZZ) o.zz[idx] = true;
        }
    }
    return o;
}

double pattern_weight(std::size_t n, std::uint32_t index, double eta, double p_fail) {
    double t = eta * eta;
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        switch (index % 3) {
            case 0:
                p *= (1.0 - p_fail) * t;
                break;
            case 1:
                p *= p_fail * t;
                break;
            default:
                p *= 1.0 - t;
        }
        index /= 3;
    }
    return p;
}

double success_probability(const ErasureOracle& o, bool xx, double eta, double p_fail) {
    const auto& ok = xx ? o.xx : o.zz;
    double s = 0.0;
    for (std::uint32_t idx = 0; idx < ok.size(); ++idx) {
        if (ok[idx]) s += pattern_weight(o.n, idx, eta, p_fail);
    }
    return s;
}

ErrorOracle error_oracle(const GraphState& progenitor, std::uint32_t w_bits, bool xx, double epsilon) {
    Codespace cs = codespace(progenitor);
    std::vector<Vec> basis = two_block_basis(cs);
    std::size_t n = cs.n;
    std::uint32_t np = num_patterns(n);
    ErrorOracle o;
    o.corrected.assign(np, std::numeric_limits<double>::quiet_NaN());
    o.uncorrected = o.corrected;
    std::size_t num_errors = std::size_t{1} << (4 * n);
    for (std::uint32_t idx = 0; idx < np; ++idx) {
        auto gens = pattern_generators(n, idx, w_bits);
        std::vector<std::uint32_t> syndromes;
        std::int64_t logical = -1;
        for (std::uint32_t subset = 0; subset < (1U << gens.size()); ++subset) {
            Action a = classify(basis, gens, subset);
            if (a == Action::kIdentity) syndromes.push_back(subset);
            if (logical < 0 && a == (xx ? Action::kXX : Action::kZZ)) logical = subset;
        }
        if (logical < 0) continue;
        std::map<std::vector<bool>, std::array<double, 2>> table;
        double raw = 0.0;
        for (std::size_t e = 0; e < num_errors; ++e) {
            // Two bits per photon: 0 I, 1 X, 2 Z, 3 Y.
            double prob = 1.0;
            std::vector<int> letters(2 * n);
            for (std::size_t k = 0; k < 2 * n; ++k) {
                letters[k] = static_cast<int>((e >> (2 * k)) & 3U);
                prob *= letters[k] == 0 ? 1.0 - epsilon : epsilon / 3.0;
            }
            if (prob == 0.0) continue;
            std::uint32_t flips = 0;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                int anti = 0;
                for (std::size_t k = 0; k < 2 * n; ++k) {
                    if (letters[k] != 0 && gens[j][k] != 0 && letters[k] != gens[j][k]) anti ^= 1;
                }
                if (anti) flips |= 1U << j;
            }
            std::vector<bool> key;
            for (auto s : syndromes) key.push_back(__builtin_popcount(flips & s) & 1);
            int lf = __builtin_popcount(flips & static_cast<std::uint32_t>(logical)) & 1;
            table[key][lf] += prob;
            if (lf) raw += prob;
        }
        double err = 0.0;
        for (const auto& [key, p] : table) err += std::min(p[0], p[1]);
        o.corrected[idx] = err;
        o.uncorrected[idx] = raw;
    }
    return o;
}

double average_error(const ErrorOracle& o, std::size_t n, double eta, double p_fail, bool corrected) {
    const auto& e = corrected ? o.corrected : o.uncorrected;
    double num = 0.0, den = 0.0;
    for (std::uint32_t idx = 0; idx < e.size(); ++idx) {
        if (std::isnan(e[idx])) continue;
        double p = pattern_weight(n, idx, eta, p_fail);
        num += p * e[idx];
        den += p;
    }
    return den > 0.0 ? num / den : 0.0;
}

double paired_flip_rate(const std::vector<int>& letters, double epsilon) {
    std::size_t m = 2 * letters.size();
    double flip = 0.0;
    for (std::size_t e = 0; e < (std::size_t{1} << (2 * m)); ++e) {
        double prob = 1.0;
        int anti = 0;
        for (std::size_t k = 0; k < m; ++k) {
            int l = static_cast<int>((e >> (2 * k)) & 3U);
            int p = letters[k % letters.size()];
            prob *= l == 0 ? 1.0 - epsilon : epsilon / 3.0;
            if (l != 0 && p != 0 && l != p) anti ^= 1;
        }
        if (anti) flip += prob;
    }
    return flip;
}

void pair_flip_table(double epsilon, double p[2][2]) {
    p[0][0] = p[0][1] = p[1][0] = p[1][1] = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            double pr = (a == 0 ? 1.0 - epsilon : epsilon / 3.0) * (b == 0 ? 1.0 - epsilon : epsilon / 3.0);
            // Letters 1 X, 2 Z, 3 Y. XX flips on Z or Y; ZZ flips on X or Y.
            auto zlike = [](int l) { return l == 2 || l == 3 ? 1 : 0; };
            auto xlike = [](int l) { return l == 1 || l == 3 ? 1 : 0; };
            int fx = zlike(a) ^ zlike(b);
            int fz = xlike(a) ^ xlike(b);
            p[fx][fz] += pr;
        }
    }
}

namespace {

struct Small {
    std::vector<std::vector<bool>> adj;
    std::size_t emitter = 0;
};

std::string canonical(const Small& g) {
    std::size_t n = g.adj.size();
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < n; ++v) {
        if (v != g.emitter) rest.push_back(v);
    }
    std::string best;
    do {
        std::vector<std::size_t> order{g.emitter};
        order.insert(order.end(), rest.begin(), rest.end());
        std::string s;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s.push_back(g.adj[order[i]][order[j]] ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

Small to_small(const GraphState& g) {
    Small s;
    s.adj.assign(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
    for (std::size_t a = 0; a < g.num_vertices(); ++a)
        for (std::size_t b = 0; b < g.num_vertices(); ++b) s.adj[a][b] = g.has_edge(a, b);
    s.emitter = g.emitter_vertex();
    return s;
}

}  // namespace

std::size_t count_generatable_classes(std::size_t n_photons) {
    std::set<std::string> classes;
    for (std::uint32_t seq = 0; seq < (1U << n_photons); ++seq) {
        Small g;
        g.adj.assign(1, std::vector<bool>(1, false));
        for (std::size_t k = 0; k < n_photons; ++k) {
            std::size_t v = g.adj.size();
            for (auto& row : g.adj) row.push_back(false);
            g.adj.emplace_back(v + 1, false);
            g.adj[g.emitter][v] = g.adj[v][g.emitter] = true;
            if ((seq >> k) & 1U) g.emitter = v;
        }
        classes.insert(canonical(g));
    }
    return classes.size();
}

bool brute_marked_isomorphic(const GraphState& a, const GraphState& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    return canonical(to_small(a)) == canonical(to_small(b));
}

}  // namespace egc::oracle
