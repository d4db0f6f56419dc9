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

#include "egc/fusion.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "egc/errors.hpp"

namespace egc {

FailureBasis::FailureBasis(std::size_t size, std::uint32_t bits) : size_(size), bits_(bits) {
    if (size > 32) throw ResourceError("failure basis longer than 32 pairs");
    if (size < 32 && (bits >> size) != 0) throw RangeError("failure basis bits beyond its size");
}

FailureBasis FailureBasis::from_string(const std::string& text) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') bits |= 1U << i;
        else if (text[i] != '0') throw ConfigError("failure basis must be a string of 0/1, got \"" + text + "\"");
    }
    return FailureBasis(text.size(), bits);
}

FailureBasis FailureBasis::flipped() const {
    std::uint32_t all = size_ == 32 ? ~0U : ((1U << size_) - 1);
    return FailureBasis(size_, ~bits_ & all);
}

std::string FailureBasis::str() const {
    std::string s;
    for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] ? '1' : '0');
    return s;
}

void FusionSpec::validate(std::size_t n_code) const {
    if (!(eta >= 0.0 && eta <= 1.0)) throw RangeError("transmission eta must lie in [0, 1]");
    if (!(p_fail >= 0.0 && p_fail <= 1.0)) throw RangeError("p_fail must lie in [0, 1]");
    if (w.size() != n_code) {
        throw DimensionError("failure basis has " + std::to_string(w.size()) + " entries for a " +
                             std::to_string(n_code) + "-qubit code");
    }
}

MeasurementPattern MeasurementPattern::from_index(std::size_t n, std::uint32_t index) {
    MeasurementPattern p;
    p.outcomes.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.outcomes[i] = static_cast<FusionOutcome>(index % 3);
        index /= 3;
    }
    if (index != 0) throw RangeError("pattern index out of range");
    return p;
}

std::uint32_t MeasurementPattern::index() const {
    std::uint32_t idx = 0;
    for (std::size_t i = outcomes.size(); i-- > 0;) idx = idx * 3 + static_cast<std::uint32_t>(outcomes[i]);
    return idx;
}

std::uint32_t MeasurementPattern::success_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i] == FusionOutcome::kSuccess) m |= 1U << i;
    }
    return m;
}

std::uint32_t MeasurementPattern::fail_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i] == FusionOutcome::kFail) m |= 1U << i;
    }
    return m;
}

AvailableParities MeasurementPattern::available(const FailureBasis& w) const {
    if (w.size() != outcomes.size()) throw DimensionError("failure basis and pattern sizes differ");
    AvailableParities a = AvailableParities::none(outcomes.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        switch (outcomes[i]) {
            case FusionOutcome::kSuccess:
                a.x_available[i] = a.z_available[i] = true;
                break;
            case FusionOutcome::kFail:
                (w[i] ? a.x_available[i] : a.z_available[i]) = true;
                break;
            case FusionOutcome::kLoss:
                break;
        }
    }
    return a;
}

double ProbabilityMonomial::evaluate(double eta) const {
    double t = eta * eta;
    return coefficient * std::pow(t, eta_sq_power) * std::pow(1.0 - t, loss_power);
}

ProbabilityMonomial pattern_probability(const MeasurementPattern& pattern, const FusionSpec& spec) {
    ProbabilityMonomial m;
    for (auto o : pattern.outcomes) {
        switch (o) {
            case FusionOutcome::kSuccess:
                m.coefficient *= 1.0 - spec.p_fail;
                ++m.eta_sq_power;
                break;
            case FusionOutcome::kFail:
                m.coefficient *= spec.p_fail;
                ++m.eta_sq_power;
                break;
            case FusionOutcome::kLoss:
                ++m.loss_power;
                break;
        }
    }
    return m;
}

PatternPolynomial::PatternPolynomial(std::size_t n) : n_(n), counts_((n + 1) * (n + 1), 0) {}

PatternPolynomial PatternPolynomial::all_patterns(std::size_t n) {
    PatternPolynomial p(n);
    // Multinomial n! / (a! b! l!) via binomials.
    std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
    }
    for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; a + b <= n; ++b) p.add(a, b, binom[n][a] * binom[n - a][b]);
    }
    return p;
}

std::uint64_t PatternPolynomial::count(std::size_t successes, std::size_t failures) const {
    if (successes + failures > n_) return 0;
    return counts_[successes * (n_ + 1) + failures];
}

void PatternPolynomial::add(std::size_t successes, std::size_t failures, std::uint64_t k) {
    if (successes + failures > n_) throw RangeError("outcome counts exceed the number of pairs");
    counts_[successes * (n_ + 1) + failures] += k;
}

std::uint64_t PatternPolynomial::total() const {
    std::uint64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
}

double PatternPolynomial::evaluate(double eta, double p_fail) const {
    double t = eta * eta;
    // Power tables keep this cheap inside bisection loops.
    std::array<double, 33> ps{}, pf{}, pt{}, pl{};
    if (n_ > 32) throw ResourceError("polynomial over more than 32 pairs");
    ps[0] = pf[0] = pt[0] = pl[0] = 1.0;
    for (std::size_t i = 1; i <= n_; ++i) {
        ps[i] = ps[i - 1] * (1.0 - p_fail);
        pf[i] = pf[i - 1] * p_fail;
        pt[i] = pt[i - 1] * t;
        pl[i] = pl[i - 1] * (1.0 - t);
    }
    double total = 0.0;
    for (std::size_t a = 0; a <= n_; ++a) {
        for (std::size_t b = 0; a + b <= n_; ++b) {
            std::uint64_t c = counts_[a * (n_ + 1) + b];
            if (c == 0) continue;
            total += static_cast<double>(c) * ps[a] * pf[b] * pt[a + b] * pl[n_ - a - b];
        }
    }
    return total;
}

std::vector<double> PatternPolynomial::eta_coefficients(double p_fail) const {
    // Expand (1 - t)^l with t = eta^2.
    std::vector<double> out(2 * n_ + 1, 0.0);
    for (std::size_t a = 0; a <= n_; ++a) {
        for (std::size_t b = 0; a + b <= n_; ++b) {
            std::uint64_t c = count(a, b);
            if (c == 0) continue;
            double base = static_cast<double>(c) * std::pow(1.0 - p_fail, a) * std::pow(p_fail, b);
            std::size_t l = n_ - a - b;
            double binom = 1.0;
            for (std::size_t j = 0; j <= l; ++j) {
                double term = base * binom * ((j & 1) ? -1.0 : 1.0);
                out[2 * (a + b + j)] += term;
                binom = binom * static_cast<double>(l - j) / static_cast<double>(j + 1);
            }
        }
    }
    return out;
}

PatternPolynomial& PatternPolynomial::operator+=(const PatternPolynomial& other) {
    if (other.n_ != n_) throw DimensionError("polynomials over different pair counts");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    return *this;
}

bool recoverable(const PauliOperator& logical, const MeasurementPattern& pattern, const FailureBasis& w) {
    return qubitwise_commutes(logical, pattern.available(w));
}

namespace {

std::vector<std::int32_t> build_table(const std::vector<PauliOperator>& set, std::size_t n) {
    std::size_t size = std::size_t{1} << (2 * n);
    std::vector<std::int32_t> table(size, -1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
    masks.reserve(set.size());
    for (const auto& p : set) {
        masks.emplace_back(static_cast<std::uint32_t>(p.x_mask()), static_cast<std::uint32_t>(p.z_mask()));
    }
    std::uint32_t low = (1U << n) - 1;
    for (std::size_t idx = 0; idx < size; ++idx) {
        std::uint32_t xa = static_cast<std::uint32_t>(idx) & low;
        std::uint32_t za = static_cast<std::uint32_t>(idx >> n);
        for (std::size_t k = 0; k < masks.size(); ++k) {
            if ((masks[k].first & ~xa) == 0 && (masks[k].second & ~za) == 0) {
                table[idx] = static_cast<std::int32_t>(k);
                break;
            }
        }
    }
    return table;
}

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw ResourceError("code with " + std::to_string(n) + " qubits exceeds the fusion-analysis cap " +
                            std::to_string(cap));
    }
    if (n > 15) throw ResourceError("fusion analysis supports at most 15 code qubits");
}

}  // namespace

FusionAnalyzer::FusionAnalyzer(const GraphCode& code, std::size_t cap) : code_(&code), n_(code.num_code_qubits()) {
    check_cap(n_, cap);
    table_x_ = build_table(code.logical_set(LogicalBasis::kX), n_);
    table_z_ = build_table(code.logical_set(LogicalBasis::kZ), n_);
}

std::int32_t FusionAnalyzer::representative(LogicalBasis basis, std::uint32_t x_avail, std::uint32_t z_avail) const {
    std::size_t idx = static_cast<std::size_t>(x_avail) | (static_cast<std::size_t>(z_avail) << n_);
    return basis == LogicalBasis::kX ? table_x_[idx] : table_z_[idx];
}

ErasureReport FusionAnalyzer::analyze(const FailureBasis& w, double p_fail, bool keep_representatives) const {
    if (w.size() != n_) throw DimensionError("failure basis size does not match the code");
    ErasureReport r;
    r.code_id = code_->id();
    r.n = n_;
    r.p_fail = p_fail;
    r.w = w;
    r.success_xx = PatternPolynomial(n_);
    r.success_zz = PatternPolynomial(n_);
    std::uint32_t num_patterns = 1;
    for (std::size_t i = 0; i < n_; ++i) num_patterns *= 3;
    if (keep_representatives) {
        r.representative_xx.assign(num_patterns, -1);
        r.representative_zz.assign(num_patterns, -1);
    }
    std::uint32_t wbits = w.bits();
    std::uint32_t all = (1U << n_) - 1;
    std::vector<std::uint8_t> digits(n_, 0);
    std::uint32_t s_mask = 0, f_mask = 0;
    for (std::uint32_t idx = 0; idx < num_patterns; ++idx) {
        if (idx > 0) {
            // Base-3 increment, least significant pair first.
            for (std::size_t i = 0; i < n_; ++i) {
                std::uint32_t bit = 1U << i;
                if (digits[i] == 0) {
                    digits[i] = 1;
                    s_mask &= ~bit;
                    f_mask |= bit;
                    break;
                }
                if (digits[i] == 1) {
                    digits[i] = 2;
                    f_mask &= ~bit;
                    break;
                }
                digits[i] = 0;
                s_mask |= bit;
            }
        } else {
            s_mask = all;
        }
        std::uint32_t xa = s_mask | (f_mask & wbits);
        std::uint32_t za = s_mask | (f_mask & ~wbits & all);
        auto a = static_cast<std::size_t>(std::popcount(s_mask));
        auto b = static_cast<std::size_t>(std::popcount(f_mask));
        std::int32_t rx = representative(LogicalBasis::kX, xa, za);
        std::int32_t rz = representative(LogicalBasis::kZ, xa, za);
        if (rx >= 0) r.success_xx.add(a, b);
        if (rz >= 0) r.success_zz.add(a, b);
        if (keep_representatives) {
            r.representative_xx[idx] = rx;
            r.representative_zz[idx] = rz;
        }
    }
    return r;
}

ErasureReport erasure_analysis(const GraphCode& code, const FusionSpec& spec, std::size_t cap) {
    spec.validate(code.num_code_qubits());
    FusionAnalyzer analyzer(code, cap);
    return analyzer.analyze(spec.w, spec.p_fail);
}

OptimizationResult optimize_failure_bases(const GraphCode& code, const FailureBasisObjective& objective,
                                          double p_fail, std::size_t cap) {
    FusionAnalyzer analyzer(code, cap);
    std::size_t n = code.num_code_qubits();
    std::optional<OptimizationResult> best;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
        FailureBasis w(n, bits);
        ErasureReport report = analyzer.analyze(w, p_fail, false);
        double value = objective(report);
        if (!best || value > best->value) best = OptimizationResult{w, std::move(report), value};
    }
    best->report = analyzer.analyze(best->w, p_fail, true);
    return *best;
}

std::optional<FailureBasis> dual_failure_basis(const GraphCode& code, const FailureBasis& w) {
    auto actions = dual_basis_actions(code);
    if (actions.size() != w.size()) throw DimensionError("failure basis size does not match the code");
    std::uint32_t bits = w.bits();
    for (std::size_t i = 0; i < actions.size(); ++i) {
        if (actions[i] == QubitBasisAction::kMixesY) return std::nullopt;
        if (actions[i] == QubitBasisAction::kSwap) bits ^= 1U << i;
    }
    return FailureBasis(w.size(), bits);
}

}  // namespace egc
