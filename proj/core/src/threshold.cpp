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

#include "egc/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "egc/errors.hpp"

namespace egc {

const char* bias_mode_name(BiasMode mode) { return mode == BiasMode::kRandomized ? "randomized" : "passive"; }

BiasMode parse_bias_mode(const std::string& text) {
    if (text == "randomized") return BiasMode::kRandomized;
    if (text == "passive") return BiasMode::kPassive;
    throw ConfigError("unknown bias mode \"" + text + "\" (expected randomized or passive)");
}

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> knots) : knots_(std::move(knots)) {
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i].first) || !std::isfinite(knots_[i].second)) {
            throw ConfigError("table entries must be finite");
        }
        if (i > 0 && !(knots_[i].first > knots_[i - 1].first)) {
            throw ConfigError("table abscissae must be strictly increasing");
        }
    }
}

double PiecewiseLinear::operator()(double x) const {
    if (knots_.empty()) throw ConfigError("empty interpolation table");
    if (x <= knots_.front().first) return knots_.front().second;
    if (x >= knots_.back().first) return knots_.back().second;
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                               [](double v, const std::pair<double, double>& k) { return v < k.first; });
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

void BiasConfig::validate() const {
    if (!(p_tilde_randomized > 0.0 && p_tilde_randomized < 1.0)) {
        throw ConfigError("p_tilde_randomized must lie in (0, 1)");
    }
    if (mode == BiasMode::kPassive && p_tilde_biased.empty()) {
        throw ConfigError("passive bias needs a p_tilde_biased table");
    }
    for (const auto& [b, p] : p_tilde_biased.knots()) {
        if (b < 0.0 || b > 1.0) throw ConfigError("p_tilde_biased: bias ratio outside [0, 1]");
        if (!(p > 0.0 && p < 1.0)) throw ConfigError("p_tilde_biased: threshold outside (0, 1)");
    }
}

void ErrorThresholdConfig::validate(double p_tilde) const {
    if (epsilon_m.empty()) throw ConfigError("epsilon_M table is empty");
    for (const auto& [p, e] : epsilon_m.knots()) {
        if (p < 0.0 || p > p_tilde + 1e-12) throw ConfigError("epsilon_M: erasure rate outside [0, p_tilde]");
        if (e < 0.0) throw ConfigError("epsilon_M: negative tolerable error");
    }
}

double randomized_bias_rate(double p_xx, double p_zz) {
    if (p_xx < 0.0 || p_xx > 1.0 || p_zz < 0.0 || p_zz > 1.0) throw RangeError("erasure rates must lie in [0, 1]");
    return 0.5 * (p_xx + p_zz);
}

double bias_ratio(double p_xx, double p_zz) {
    if (p_xx < 0.0 || p_xx > 1.0 || p_zz < 0.0 || p_zz > 1.0) throw RangeError("erasure rates must lie in [0, 1]");
    double hi = std::max(p_xx, p_zz);
    if (hi == 0.0) return 1.0;
    return std::min(p_xx, p_zz) / hi;
}

bool erasure_feasible(const BiasConfig& bias, double p_xx, double p_zz) {
    if (bias.mode == BiasMode::kRandomized) return randomized_bias_rate(p_xx, p_zz) <= bias.p_tilde_randomized;
    return std::max(p_xx, p_zz) <= bias.p_tilde_biased(bias_ratio(p_xx, p_zz));
}

namespace {

constexpr std::size_t kMonotonicityGrid = 100;
constexpr double kMonotonicitySlack = 1e-12;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

ThresholdResult loss_threshold_for(const ErasureReport& report, const BiasConfig& bias) {
    auto rates = [&](double gamma) {
        double eta = 1.0 - gamma;
        return std::pair{clamp01(report.p_erase_xx(eta)), clamp01(report.p_erase_zz(eta))};
    };
    double prev_xx = -1.0, prev_zz = -1.0;
    for (std::size_t i = 0; i < kMonotonicityGrid; ++i) {
        double gamma = static_cast<double>(i) / static_cast<double>(kMonotonicityGrid - 1);
        auto [pxx, pzz] = rates(gamma);
        if (pxx + kMonotonicitySlack < prev_xx || pzz + kMonotonicitySlack < prev_zz) {
            std::ostringstream msg;
            msg << "erasure rate decreases in gamma near " << gamma << " for code " << report.code_id
                << " w=" << report.w.str();
            throw VerificationError(msg.str());
        }
        prev_xx = pxx;
        prev_zz = pzz;
    }

    ThresholdResult r;
    r.code_id = report.code_id;
    r.n = report.n;
    r.w = report.w;
    r.mode = bias.mode;
    double g = bisect_largest([&](double gamma) {
        auto [pxx, pzz] = rates(gamma);
        return erasure_feasible(bias, pxx, pzz);
    });
    if (g < 0.0) {
        r.feasible = false;
        r.gamma_star = 0.0;
        std::tie(r.erase_xx, r.erase_zz) = rates(0.0);
        r.diagnostic = "infeasible even without loss";
        return r;
    }
    r.feasible = true;
    r.gamma_star = std::min(g, 1.0 - kBisectionTolerance);
    std::tie(r.erase_xx, r.erase_zz) = rates(r.gamma_star);
    return r;
}

ThresholdResult loss_threshold(const GraphCode& code, const BiasConfig& bias, double p_fail, std::size_t cap) {
    bias.validate();
    FusionAnalyzer analyzer(code, cap);
    std::size_t n = code.num_code_qubits();
    std::optional<ThresholdResult> best;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
        ErasureReport report = analyzer.analyze(FailureBasis(n, bits), p_fail, false);
        ThresholdResult r = loss_threshold_for(report, bias);
        if (!best || (r.feasible && !best->feasible) ||
            (r.feasible == best->feasible && r.gamma_star > best->gamma_star)) {
            best = std::move(r);
        }
    }
    return *best;
}

Region correctable_region(const GraphCode& code, const BiasConfig& bias, const ErrorThresholdConfig& err,
                          std::size_t grid_points, double gamma_max, double p_fail, std::size_t cap) {
    if (bias.mode != BiasMode::kRandomized) throw ConfigError("correctable regions use randomized bias");
    if (grid_points < 2) throw RangeError("region grid needs at least two points");
    bias.validate();
    err.validate(bias.p_tilde_randomized);
    Region region;
    region.threshold = loss_threshold(code, bias, p_fail, cap);
    if (!region.threshold.feasible) {
        region.diagnostic = "no loss-tolerant operating point";
        return region;
    }
    FusionAnalyzer analyzer(code, cap);
    ErasureReport erasure = analyzer.analyze(region.threshold.w, p_fail, false);
    ErrorModel model(code, region.threshold.w, cap);
    double gamma_star = region.threshold.gamma_star;
    bool clipped = gamma_max < gamma_star;
    double gamma_end = clipped ? std::max(gamma_max, 0.0) : gamma_star;
    for (std::size_t i = 0; i < grid_points; ++i) {
        double gamma = gamma_end * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        double eta = 1.0 - gamma;
        double p_erase = randomized_bias_rate(clamp01(erasure.p_erase_xx(eta)), clamp01(erasure.p_erase_zz(eta)));
        double eps_m = err.epsilon_m(p_erase);
        if (i + 1 == grid_points && !clipped) {
            // The region closes at the loss threshold.
            if (!region.boundary.empty()) region.boundary.push_back({gamma, 0.0});
            break;
        }
        if (eps_m <= 0.0) continue;
        auto pred = [&](double x) { return model.evaluate(eta, p_fail, x * kMaxRegionEpsilon).average() < eps_m; };
        double e = bisect_largest(pred) * kMaxRegionEpsilon;
        if (e <= 0.0) continue;
        region.boundary.push_back({gamma, e});
    }
    if (region.boundary.empty()) region.diagnostic = "empty correctable region";
    return region;
}

std::vector<ThresholdResult> search_best_code(std::size_t n_code, const BiasConfig& bias, unsigned threads,
                                              double p_fail) {
    if (n_code < 1 || n_code > kDefaultFusionCap) {
        throw ResourceError("code size must lie in 1.." + std::to_string(kDefaultFusionCap));
    }
    bias.validate();
    std::vector<GraphState> progenitors = enumerate_single_emitter_progenitors(n_code);
    std::vector<ThresholdResult> results(progenitors.size());
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= progenitors.size()) return;
                i = next++;
            }
            GraphCode code = code_from_progenitor(progenitors[i]);
            results[i] = loss_threshold(code, bias, p_fail);
        }
    };
    unsigned t = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(progenitors.size())));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::stable_sort(results.begin(), results.end(), [](const ThresholdResult& a, const ThresholdResult& b) {
        if (a.gamma_star != b.gamma_star) return a.gamma_star > b.gamma_star;
        return a.code_id < b.code_id;
    });
    return results;
}

double boosted_p_fail(unsigned level) { return std::ldexp(1.0, -static_cast<int>(level) - 1); }

std::size_t boosted_ancilla_photons(unsigned level) { return (std::size_t{1} << (level + 1)) - 2; }

double boosted_erasure_rate(double p_fail, std::size_t n_ancilla, double eta) {
    return 1.0 - (1.0 - p_fail / 2.0) * std::pow(eta, static_cast<double>(2 + n_ancilla));
}

ThresholdResult boosted_baseline(double p_fail, std::size_t n_ancilla, double p_tilde) {
    if (!(p_fail >= 0.0 && p_fail <= 1.0)) throw RangeError("p_fail must lie in [0, 1]");
    if (!(p_tilde > 0.0 && p_tilde < 1.0)) throw RangeError("p_tilde must lie in (0, 1)");
    ThresholdResult r;
    r.code_id = "boosted";
    r.n = 1;
    r.w = FailureBasis(1, 0);
    r.mode = BiasMode::kRandomized;
    double g = bisect_largest(
        [&](double gamma) { return boosted_erasure_rate(p_fail, n_ancilla, 1.0 - gamma) <= p_tilde; });
    r.feasible = g >= 0.0;
    r.gamma_star = r.feasible ? g : 0.0;
    if (!r.feasible) r.diagnostic = "infeasible even without loss";
    r.erase_xx = r.erase_zz = boosted_erasure_rate(p_fail, n_ancilla, 1.0 - r.gamma_star);
    return r;
}

double invert_boosted_threshold(double p_fail, std::size_t n_ancilla, double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw RangeError("gamma must lie in [0, 1)");
    return boosted_erasure_rate(p_fail, n_ancilla, 1.0 - gamma);
}

}  // namespace egc
