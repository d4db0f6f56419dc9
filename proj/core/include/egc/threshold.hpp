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
#include <string>
#include <utility>
#include <vector>

#include "egc/fusion.hpp"
#include "egc/graph_code.hpp"

namespace egc {

enum class BiasMode { kRandomized, kPassive };

const char* bias_mode_name(BiasMode mode);
BiasMode parse_bias_mode(const std::string& text);

/// Linear interpolation over sorted, unique knots; clamps outside the range.
class PiecewiseLinear {
  public:
    PiecewiseLinear() = default;
    explicit PiecewiseLinear(std::vector<std::pair<double, double>> knots);

    double operator()(double x) const;
    bool empty() const { return knots_.empty(); }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }

  private:
    std::vector<std::pair<double, double>> knots_;
};

struct BiasConfig {
    BiasMode mode = BiasMode::kRandomized;
    double p_tilde_randomized = 0.0;
    PiecewiseLinear p_tilde_biased;  // B -> threshold on the worse parity

    void validate() const;
};

struct ErrorThresholdConfig {
    PiecewiseLinear epsilon_m;  // logical erasure rate -> tolerable eps_M

    void validate(double p_tilde) const;
};

struct ThresholdResult {
    std::string code_id;
    std::size_t n = 0;
    FailureBasis w;
    double gamma_star = 0.0;
    BiasMode mode = BiasMode::kRandomized;
    bool feasible = false;
    double erase_xx = 0.0;  // rates at gamma_star
    double erase_zz = 0.0;
    std::string diagnostic;
};

inline constexpr double kBisectionTolerance = 1e-9;

double randomized_bias_rate(double p_xx, double p_zz);
/// min/max of the two rates; 0/0 is taken as 1.
double bias_ratio(double p_xx, double p_zz);

/// Whether rates (p_xx, p_zz) are below the outer-code threshold.
bool erasure_feasible(const BiasConfig& bias, double p_xx, double p_zz);

/// Largest gamma in [0, 1] with pred(gamma) true, assuming pred is
/// monotone (true then false). Returns -1 if pred(0) is false.
template <typename Pred>
double bisect_largest(Pred pred, double tol = kBisectionTolerance) {
    if (!pred(0.0)) return -1.0;
    if (pred(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (pred(mid) ? lo : hi) = mid;
    }
    return lo;
}

/// Threshold for one fixed failure basis. Throws VerificationError if the
/// erasure rates are not monotone in gamma on a 100-point grid.
ThresholdResult loss_threshold_for(const ErasureReport& report, const BiasConfig& bias);

/// Best gamma over all 2^n failure bases (ties to the lowest w).
ThresholdResult loss_threshold(const GraphCode& code, const BiasConfig& bias, double p_fail = 0.5,
                               std::size_t cap = kDefaultFusionCap);

struct RegionPoint {
    double gamma = 0.0;
    double epsilon = 0.0;
};

struct Region {
    ThresholdResult threshold;
    std::vector<RegionPoint> boundary;
    std::string diagnostic;
};

inline constexpr double kMaxRegionEpsilon = 0.25;

/// Boundary of the correctable (gamma, eps) region for the code's
/// randomized-bias optimal w, on `grid_points` gammas spanning
/// [0, min(gamma*, gamma_max)]. The curve closes with eps = 0 at gamma*.
Region correctable_region(const GraphCode& code, const BiasConfig& bias, const ErrorThresholdConfig& err,
                          std::size_t grid_points = 21, double gamma_max = 1.0, double p_fail = 0.5,
                          std::size_t cap = kDefaultFusionCap);

/// Thresholds of every single-emitter code with n_code qubits, sorted by
/// descending gamma* then ascending id.
std::vector<ThresholdResult> search_best_code(std::size_t n_code, const BiasConfig& bias, unsigned threads = 1,
                                              double p_fail = 0.5);

/// Boosted fusion without concatenation: p_fail = 2^-(k+1) with
/// 2^(k+1) - 2 ancilla photons.
double boosted_p_fail(unsigned level);
std::size_t boosted_ancilla_photons(unsigned level);
double boosted_erasure_rate(double p_fail, std::size_t n_ancilla, double eta);
ThresholdResult boosted_baseline(double p_fail, std::size_t n_ancilla, double p_tilde);

/// p_tilde such that boosted_baseline(p_fail, n_ancilla, .) has gamma* = gamma.
double invert_boosted_threshold(double p_fail, std::size_t n_ancilla, double gamma);

}  // namespace egc
