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
#include <bit>
#include <cmath>
#include <limits>

#include "egc/errors.hpp"
#include "egc/fusion.hpp"

namespace egc {

double pauli_flip_probability(double epsilon) {
    return 4.0 * (epsilon / 3.0 * (1.0 - epsilon) + epsilon * epsilon / 9.0);
}

FlipDistribution joint_flip_distribution(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw RangeError("epsilon must lie in [0, 1]");
    // One photon: I -> (0,0), X -> (0,1), Z -> (1,0), Y -> (1,1).
    double single[2][2] = {{1.0 - epsilon, epsilon / 3.0}, {epsilon / 3.0, epsilon / 3.0}};
    FlipDistribution d;
    d.p[0][0] = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            int fx = (a >> 1) ^ (b >> 1);
            int fz = (a & 1) ^ (b & 1);
            d.p[fx][fz] += single[a >> 1][a & 1] * single[b >> 1][b & 1];
        }
    }
    return d;
}

namespace {

std::uint32_t pattern_count(std::size_t n) {
    std::uint32_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= 3;
    return c;
}

// Reduced GF(2) basis of packed (x | z << n) vectors.
std::vector<std::uint64_t> gf2_basis(const std::vector<std::uint64_t>& vectors) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t v : vectors) {
        for (std::uint64_t b : basis) v = std::min(v, v ^ b);
        if (v != 0) basis.push_back(v);
    }
    return basis;
}

}  // namespace

ErrorModel::ErrorModel(const GraphCode& code, const FailureBasis& w, std::size_t cap)
    : n_(code.num_code_qubits()), w_(w) {
    if (w.size() != n_) throw DimensionError("failure basis size does not match the code");
    FusionAnalyzer analyzer(code, cap);
    ErasureReport erasure = analyzer.analyze(w, 0.5, true);
    std::uint32_t num_patterns = pattern_count(n_);
    std::uint32_t all = (1U << n_) - 1;

    std::vector<std::uint64_t> stab;
    for (const auto& s : code.stabilizer_elements()) stab.push_back(s.x_mask() | (s.z_mask() << n_));

    auto build = [&](LogicalBasis basis, const std::vector<std::int32_t>& reps) {
        const auto& set = code.logical_set(basis);
        std::vector<PatternMap> maps(num_patterns);
        for (std::uint32_t idx = 0; idx < num_patterns; ++idx) {
            MeasurementPattern pat = MeasurementPattern::from_index(n_, idx);
            std::uint32_t s_mask = pat.success_mask(), f_mask = pat.fail_mask();
            PatternMap& m = maps[idx];
            m.successes = static_cast<std::uint8_t>(std::popcount(s_mask));
            m.failures = static_cast<std::uint8_t>(std::popcount(f_mask));
            if (reps[idx] < 0) continue;
            std::uint32_t xa = s_mask | (f_mask & w.bits());
            std::uint32_t za = s_mask | (f_mask & ~w.bits() & all);
            std::vector<std::uint64_t> avail;
            for (std::uint64_t s : stab) {
                auto sx = static_cast<std::uint32_t>(s & all);
                auto sz = static_cast<std::uint32_t>(s >> n_);
                if ((sx & ~xa) == 0 && (sz & ~za) == 0) avail.push_back(s);
            }
            std::vector<std::uint64_t> basis_vecs = gf2_basis(avail);
            m.rank = static_cast<std::int8_t>(basis_vecs.size());
            const PauliOperator& rep = set[static_cast<std::size_t>(reps[idx])];
            std::uint64_t lx = rep.x_mask(), lz = rep.z_mask();
            m.x_contrib.assign(n_, 0);
            m.z_contrib.assign(n_, 0);
            // Bit 0 is the logical parity, bit j+1 the j-th syndrome.
            for (std::size_t i = 0; i < n_; ++i) {
                std::uint32_t cx = 0, cz = 0;
                // An XX flip on pair i hits every measured operator with X or Y there.
                if ((lx >> i) & 1U) cx |= 1U;
                if ((lz >> i) & 1U) cz |= 1U;
                for (std::size_t j = 0; j < basis_vecs.size(); ++j) {
                    if ((basis_vecs[j] >> i) & 1U) cx |= 2U << j;
                    if ((basis_vecs[j] >> (i + n_)) & 1U) cz |= 2U << j;
                }
                m.x_contrib[i] = cx;
                m.z_contrib[i] = cz;
            }
        }
        return maps;
    };
    maps_x_ = build(LogicalBasis::kX, erasure.representative_xx);
    maps_z_ = build(LogicalBasis::kZ, erasure.representative_zz);
}

std::pair<double, double> ErrorModel::decode(const PatternMap& m, const FlipDistribution& d) const {
    std::size_t states = std::size_t{2} << m.rank;
    std::vector<double> cur(states, 0.0), next(states);
    cur[0] = 1.0;
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint32_t cx = m.x_contrib[i], cz = m.z_contrib[i];
        if (cx == 0 && cz == 0) continue;
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t s = 0; s < states; ++s) {
            double v = cur[s];
            if (v == 0.0) continue;
            next[s] += v * d.p[0][0];
            next[s ^ cz] += v * d.p[0][1];
            next[s ^ cx] += v * d.p[1][0];
            next[s ^ cx ^ cz] += v * d.p[1][1];
        }
        cur.swap(next);
    }
    double corrected = 0.0, raw = 0.0;
    for (std::size_t s = 0; s < states; s += 2) {
        corrected += std::min(cur[s], cur[s + 1]);
        raw += cur[s + 1];
    }
    return {corrected, raw};
}

std::vector<double> ErrorModel::pattern_errors(LogicalBasis basis, double epsilon, bool corrected) const {
    FlipDistribution d = joint_flip_distribution(epsilon);
    const auto& maps = basis == LogicalBasis::kX ? maps_x_ : maps_z_;
    std::vector<double> out(maps.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t idx = 0; idx < maps.size(); ++idx) {
        if (maps[idx].rank < 0) continue;
        auto [c, r] = decode(maps[idx], d);
        out[idx] = corrected ? c : r;
    }
    return out;
}

ErrorReport ErrorModel::evaluate(double eta, double p_fail, double epsilon, bool keep_patterns) const {
    if (!(eta >= 0.0 && eta <= 1.0)) throw RangeError("transmission eta must lie in [0, 1]");
    if (!(p_fail >= 0.0 && p_fail <= 1.0)) throw RangeError("p_fail must lie in [0, 1]");
    FlipDistribution d = joint_flip_distribution(epsilon);
    double t = eta * eta;
    ErrorReport report;
    auto run = [&](const std::vector<PatternMap>& maps, double& err, double& raw, std::vector<double>* per) {
        double num = 0.0, num_raw = 0.0, den = 0.0;
        if (per) per->assign(maps.size(), std::numeric_limits<double>::quiet_NaN());
        for (std::size_t idx = 0; idx < maps.size(); ++idx) {
            const PatternMap& m = maps[idx];
            if (m.rank < 0) continue;
            std::size_t l = n_ - m.successes - m.failures;
            double p = std::pow(1.0 - p_fail, m.successes) * std::pow(p_fail, m.failures) *
                       std::pow(t, m.successes + m.failures) * std::pow(1.0 - t, static_cast<double>(l));
            auto [c, r] = decode(m, d);
            if (per) (*per)[idx] = c;
            num += p * c;
            num_raw += p * r;
            den += p;
        }
        err = den > 0.0 ? num / den : 0.0;
        raw = den > 0.0 ? num_raw / den : 0.0;
    };
    run(maps_x_, report.error_xx, report.uncorrected_xx, keep_patterns ? &report.pattern_error_xx : nullptr);
    run(maps_z_, report.error_zz, report.uncorrected_zz, keep_patterns ? &report.pattern_error_zz : nullptr);
    return report;
}

int ErrorModel::syndrome_rank(LogicalBasis basis, std::uint32_t pattern_index) const {
    const auto& maps = basis == LogicalBasis::kX ? maps_x_ : maps_z_;
    if (pattern_index >= maps.size()) throw RangeError("pattern index out of range");
    return maps[pattern_index].rank;
}

ErrorReport error_analysis(const GraphCode& code, const FusionSpec& spec, double epsilon, std::size_t cap) {
    spec.validate(code.num_code_qubits());
    ErrorModel model(code, spec.w, cap);
    return model.evaluate(spec.eta, spec.p_fail, epsilon);
}

}  // namespace egc
