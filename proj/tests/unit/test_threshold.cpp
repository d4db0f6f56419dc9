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

#include <cmath>

#include <gtest/gtest.h>

#include "egc/errors.hpp"
#include "egc/threshold.hpp"

namespace egc {
namespace {

BiasConfig randomized(double p_tilde) {
    BiasConfig b;
    b.p_tilde_randomized = p_tilde;
    return b;
}

BiasConfig passive(double p_tilde) {
    BiasConfig b = randomized(p_tilde);
    b.mode = BiasMode::kPassive;
    std::vector<std::pair<double, double>> knots;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) knots.emplace_back(x, 2 * p_tilde / (1 + x));
    b.p_tilde_biased = PiecewiseLinear(knots);
    return b;
}

TEST(Bias, RandomizedRate) {
    EXPECT_DOUBLE_EQ(randomized_bias_rate(0.25, 0.25), 0.25);
    EXPECT_DOUBLE_EQ(randomized_bias_rate(0.1, 0.5), 0.3);
    EXPECT_THROW(randomized_bias_rate(-0.1, 0.5), RangeError);
    auto bare = erasure_analysis(code_from_progenitor(path_graph(2)), {1.0, 0.5, FailureBasis(1, 0)});
    EXPECT_DOUBLE_EQ(randomized_bias_rate(bare.p_erase_xx(1.0), bare.p_erase_zz(1.0)), 0.25);
}

TEST(Bias, Ratio) {
    EXPECT_DOUBLE_EQ(bias_ratio(0.25, 0.5), 0.5);
    EXPECT_DOUBLE_EQ(bias_ratio(0.3, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(bias_ratio(0.0, 0.3), 0.0);
    EXPECT_DOUBLE_EQ(bias_ratio(0.0, 0.0), 1.0);
}

TEST(Bias, PiecewiseLinear) {
    PiecewiseLinear f({{0.0, 1.0}, {1.0, 3.0}});
    EXPECT_DOUBLE_EQ(f(0.5), 2.0);
    EXPECT_DOUBLE_EQ(f(-1.0), 1.0);
    EXPECT_DOUBLE_EQ(f(2.0), 3.0);
    EXPECT_THROW(PiecewiseLinear({{1.0, 0.0}, {0.0, 1.0}}), ConfigError);
    EXPECT_EQ(parse_bias_mode("passive"), BiasMode::kPassive);
    EXPECT_THROW(parse_bias_mode("other"), ConfigError);
}

TEST(Bisection, FindsStep) {
    for (double t : {0.0, 0.1234567, 0.5, 0.999}) {
        double g = bisect_largest([&](double x) { return x <= t; });
        EXPECT_NEAR(g, t, kBisectionTolerance);
        EXPECT_LE(g, t);
    }
    EXPECT_EQ(bisect_largest([](double) { return false; }), -1.0);
    EXPECT_EQ(bisect_largest([](double) { return true; }), 1.0);
}

TEST(Threshold, BareQubit) {
    auto code = code_from_progenitor(path_graph(2));
    auto at_quarter = loss_threshold(code, randomized(0.25));
    EXPECT_TRUE(at_quarter.feasible);
    EXPECT_NEAR(at_quarter.gamma_star, 0.0, 1e-8);
    auto tight = loss_threshold(code, randomized(0.134));
    EXPECT_FALSE(tight.feasible);
    EXPECT_EQ(tight.gamma_star, 0.0);
    EXPECT_FALSE(tight.diagnostic.empty());
    // Closed form: 1 - 0.75 (1-g)^2 = p.
    auto loose = loss_threshold(code, randomized(0.4));
    EXPECT_NEAR(loose.gamma_star, 1 - std::sqrt(0.6 / 0.75), 1e-8);
}

TEST(Threshold, BisectionIsSharp) {
    auto code = code_from_progenitor(graph_from_generation_ops(parse_generation_ops("LPL")));
    auto bias = randomized(0.14306);
    auto r = loss_threshold(code, bias);
    ASSERT_TRUE(r.feasible);
    auto report = erasure_analysis(code, {1.0, 0.5, r.w});
    auto rate = [&](double g) { return randomized_bias_rate(report.p_erase_xx(1 - g), report.p_erase_zz(1 - g)); };
    EXPECT_LE(rate(r.gamma_star), 0.14306);
    EXPECT_GT(rate(r.gamma_star + 1e-8), 0.14306);
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        auto other = loss_threshold_for(erasure_analysis(code, {1.0, 0.5, FailureBasis(3, bits)}), bias);
        EXPECT_LE(other.gamma_star, r.gamma_star);
    }
}

TEST(Threshold, PassiveNeverWorseThanRandomized) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& g : enumerate_single_emitter_progenitors(n)) {
            auto code = code_from_progenitor(g);
            auto r = loss_threshold(code, randomized(0.14306));
            auto p = loss_threshold(code, passive(0.14306));
            EXPECT_GE(p.gamma_star, r.gamma_star - 1e-8) << code.id();
        }
}

TEST(Threshold, SearchIsSortedAndThreadIndependent) {
    auto one = search_best_code(4, randomized(0.14306), 1);
    auto many = search_best_code(4, randomized(0.14306), 4);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].code_id, many[i].code_id);
        EXPECT_EQ(one[i].gamma_star, many[i].gamma_star);
        if (i > 0) { EXPECT_GE(one[i - 1].gamma_star, one[i].gamma_star); }
    }
    auto single = search_best_code(1, randomized(0.14306));
    EXPECT_EQ(single.size(), 1u);
    EXPECT_THROW(search_best_code(9, randomized(0.14306)), ResourceError);
}

TEST(Threshold, ConfigValidation) {
    EXPECT_THROW(loss_threshold(code_from_progenitor(path_graph(2)), randomized(0.0)), ConfigError);
    BiasConfig p = randomized(0.1);
    p.mode = BiasMode::kPassive;
    EXPECT_THROW(p.validate(), ConfigError);
}

TEST(Region, ZeroMapIsEmpty) {
    auto code = code_from_progenitor(graph_from_generation_ops(parse_generation_ops("LPL")));
    ErrorThresholdConfig err;
    err.epsilon_m = PiecewiseLinear({{0.0, 0.0}, {0.14, 0.0}});
    auto region = correctable_region(code, randomized(0.14306), err);
    EXPECT_TRUE(region.boundary.empty());
    EXPECT_FALSE(region.diagnostic.empty());
}

TEST(Region, ClosesAtThresholdAndShrinks) {
    auto code = code_from_progenitor(graph_from_generation_ops(parse_generation_ops("LPLP")));
    ErrorThresholdConfig err;
    err.epsilon_m = PiecewiseLinear({{0.0, 0.01}, {0.14306, 0.0}});
    auto region = correctable_region(code, randomized(0.14306), err, 11);
    ASSERT_GE(region.boundary.size(), 2u);
    EXPECT_NEAR(region.boundary.back().gamma, region.threshold.gamma_star, 1e-12);
    EXPECT_EQ(region.boundary.back().epsilon, 0.0);
    for (std::size_t i = 1; i < region.boundary.size(); ++i) {
        EXPECT_GT(region.boundary[i].gamma, region.boundary[i - 1].gamma);
        EXPECT_LE(region.boundary[i].epsilon, region.boundary[i - 1].epsilon + 1e-9);
    }
    // Points on the boundary sit on the edge of correctability.
    ErrorModel model(code, region.threshold.w);
    auto erasure = erasure_analysis(code, {1.0, 0.5, region.threshold.w});
    const auto& pt = region.boundary.front();
    double eta = 1 - pt.gamma;
    double eps_m = err.epsilon_m(randomized_bias_rate(erasure.p_erase_xx(eta), erasure.p_erase_zz(eta)));
    EXPECT_LT(model.evaluate(eta, 0.5, pt.epsilon).average(), eps_m);
    EXPECT_GE(model.evaluate(eta, 0.5, pt.epsilon + 1e-8).average(), eps_m);
}

TEST(Region, ClippedGrid) {
    auto code = code_from_progenitor(graph_from_generation_ops(parse_generation_ops("LPLP")));
    ErrorThresholdConfig err;
    err.epsilon_m = PiecewiseLinear({{0.0, 0.01}, {0.14306, 0.0}});
    auto region = correctable_region(code, randomized(0.14306), err, 5, 0.01);
    ASSERT_FALSE(region.boundary.empty());
    for (const auto& p : region.boundary) EXPECT_LE(p.gamma, 0.01 + 1e-15);
    auto wide = correctable_region(code, randomized(0.14306), err, 5, 0.9);
    for (const auto& p : wide.boundary) EXPECT_LE(p.gamma, wide.threshold.gamma_star + 1e-15);
}

TEST(Boosted, Levels) {
    EXPECT_DOUBLE_EQ(boosted_p_fail(1), 0.25);
    EXPECT_EQ(boosted_ancilla_photons(1), 2u);
    EXPECT_EQ(boosted_ancilla_photons(2), 6u);
    double p = invert_boosted_threshold(0.25, 2, 0.0052);
    EXPECT_NEAR(boosted_baseline(0.25, 2, p).gamma_star, 0.0052, 1e-8);
    EXPECT_NEAR(boosted_erasure_rate(0.5, 0, 0.9), 1 - 0.75 * 0.81, 1e-15);
}

}  // namespace
}  // namespace egc
