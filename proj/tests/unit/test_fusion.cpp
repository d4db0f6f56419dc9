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
#include "egc/fusion.hpp"
#include "oracles.hpp"

namespace egc {
namespace {

std::vector<GraphCode> codes_of_size(std::size_t n) {
    std::vector<GraphCode> out;
    for (const auto& g : enumerate_single_emitter_progenitors(n)) out.push_back(code_from_progenitor(g));
    return out;
}

TEST(FailureBasis, StringRoundTrip) {
    auto w = FailureBasis::from_string("1010");
    EXPECT_EQ(w.size(), 4u);
    EXPECT_TRUE(w[0]);
    EXPECT_FALSE(w[1]);
    EXPECT_EQ(w.str(), "1010");
    EXPECT_EQ(w.flipped().str(), "0101");
}

TEST(Patterns, IndexRoundTrip) {
    for (std::uint32_t i = 0; i < 81; ++i) EXPECT_EQ(MeasurementPattern::from_index(4, i).index(), i);
    auto p = MeasurementPattern::from_index(2, 1 + 2 * 3);
    EXPECT_EQ(p.outcomes[0], FusionOutcome::kFail);
    EXPECT_EQ(p.outcomes[1], FusionOutcome::kLoss);
}

TEST(Patterns, Probabilities) {
    FusionSpec spec{0.9, 0.5, FailureBasis(2, 0)};
    auto all_success = pattern_probability(MeasurementPattern::from_index(2, 0), spec);
    EXPECT_NEAR(all_success.evaluate(0.9), std::pow(0.9, 4) / 4.0, 1e-15);
    FusionSpec one{0.7, 0.5, FailureBasis(1, 0)};
    EXPECT_NEAR(pattern_probability(MeasurementPattern::from_index(1, 2), one).evaluate(0.7), 1 - 0.49, 1e-15);
}

TEST(Patterns, Normalization) {
    for (std::size_t n = 1; n <= 8; ++n) {
        auto all = PatternPolynomial::all_patterns(n);
        std::uint64_t three_n = 1;
        for (std::size_t i = 0; i < n; ++i) three_n *= 3;
        EXPECT_EQ(all.total(), three_n);
        for (double eta : {0.0, 0.3, 0.97, 1.0})
            for (double pf : {0.125, 0.5}) EXPECT_NEAR(all.evaluate(eta, pf), 1.0, 1e-12);
        // As a polynomial: every eta^k coefficient vanishes except the constant.
        auto c = all.eta_coefficients(0.5);
        EXPECT_NEAR(c[0], 1.0, 1e-12);
        for (std::size_t k = 1; k < c.size(); ++k) EXPECT_NEAR(c[k], 0.0, 1e-9) << n << " " << k;
    }
}

TEST(Recoverable, Examples) {
    FailureBasis w1(1, 1);
    auto success = MeasurementPattern::from_index(1, 0);
    auto fail = MeasurementPattern::from_index(1, 1);
    EXPECT_TRUE(recoverable(PauliOperator(1), fail, w1));
    EXPECT_FALSE(recoverable(PauliOperator::from_string("Z"), fail, w1));
    EXPECT_TRUE(recoverable(PauliOperator::from_string("X"), fail, w1));
    EXPECT_TRUE(recoverable(PauliOperator::from_string("Y"), success, w1));
}

TEST(Erasure, BareQubit) {
    auto code = code_from_progenitor(path_graph(2));
    // Logical X is Z on the photon, so a failure keeping XX only recovers Z-bar Z-bar.
    auto r = erasure_analysis(code, {1.0, 0.5, FailureBasis(1, 1)});
    EXPECT_DOUBLE_EQ(r.p_success_zz(1.0), 1.0);
    EXPECT_DOUBLE_EQ(r.p_success_xx(1.0), 0.5);
    auto r0 = erasure_analysis(code, {1.0, 0.5, FailureBasis(1, 0)});
    EXPECT_DOUBLE_EQ(r0.p_success_xx(1.0), 1.0);
    EXPECT_DOUBLE_EQ(r0.p_success_zz(1.0), 0.5);
    for (double eta : {0.5, 0.9}) EXPECT_NEAR(0.5 * (r0.p_erase_xx(eta) + r0.p_erase_zz(eta)), 1 - 0.75 * eta * eta, 1e-15);
}

TEST(Erasure, ZeroTransmission) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& code : codes_of_size(n)) {
            auto r = erasure_analysis(code, {0.0, 0.5, FailureBasis(n, 0)});
            EXPECT_EQ(r.p_success_xx(0.0), 0.0);
            EXPECT_EQ(r.p_success_zz(0.0), 0.0);
        }
}

TEST(Erasure, MatchesStateVectorOracle) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& code : codes_of_size(n)) {
            FusionAnalyzer analyzer(code);
            for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
                auto o = oracle::erasure_oracle(code.progenitor(), bits);
                auto r = analyzer.analyze(FailureBasis(n, bits), 0.5);
                for (std::uint32_t i = 0; i < o.xx.size(); ++i) {
                    EXPECT_EQ(r.representative_xx[i] >= 0, o.xx[i]) << code.id() << " " << i;
                    EXPECT_EQ(r.representative_zz[i] >= 0, o.zz[i]) << code.id() << " " << i;
                }
                for (double eta : {0.7, 0.9, 1.0}) {
                    EXPECT_NEAR(r.p_success_xx(eta), oracle::success_probability(o, true, eta, 0.5), 1e-12);
                    EXPECT_NEAR(r.p_success_zz(eta), oracle::success_probability(o, false, eta, 0.5), 1e-12);
                }
            }
        }
}

TEST(Erasure, MonotoneInTransmission) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& code : codes_of_size(n)) {
            auto r = erasure_analysis(code, {1.0, 0.5, FailureBasis(n, (1U << n) / 3)});
            double prev_x = -1, prev_z = -1;
            for (int k = 0; k <= 50; ++k) {
                double eta = k / 50.0;
                EXPECT_GE(r.p_success_xx(eta), prev_x - 1e-14);
                EXPECT_GE(r.p_success_zz(eta), prev_z - 1e-14);
                prev_x = r.p_success_xx(eta);
                prev_z = r.p_success_zz(eta);
            }
        }
}

TEST(Erasure, CapAndValidation) {
    auto code = code_from_progenitor(enumerate_single_emitter_progenitors(9, 9).front());
    EXPECT_THROW(FusionAnalyzer(code, 8), ResourceError);
    auto small = code_from_progenitor(star_graph(3));
    EXPECT_THROW(erasure_analysis(small, {1.0, 0.5, FailureBasis(3, 0)}), DimensionError);
    EXPECT_THROW(erasure_analysis(small, {1.5, 0.5, FailureBasis(2, 0)}), RangeError);
}

TEST(Optimize, TieBreakAndConstantObjective) {
    auto bare = code_from_progenitor(path_graph(2));
    auto res = optimize_failure_bases(bare, [](const ErasureReport& r) {
        return -0.5 * (r.p_erase_xx(0.9) + r.p_erase_zz(0.9));
    });
    EXPECT_EQ(res.w.bits(), 0u);
    auto code = code_from_progenitor(path_graph(4));
    auto c = optimize_failure_bases(code, [](const ErasureReport&) { return 1.0; });
    EXPECT_EQ(c.w.bits(), 0u);
}

TEST(Optimize, FindsBestOfScan) {
    auto code = code_from_progenitor(graph_from_generation_ops(parse_generation_ops("LPLP")));
    auto obj = [](const ErasureReport& r) { return r.p_success_xx(0.95) + r.p_success_zz(0.95); };
    auto best = optimize_failure_bases(code, obj);
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        double v = obj(erasure_analysis(code, {1.0, 0.5, FailureBasis(4, bits)}));
        EXPECT_LE(v, best.value + 1e-15);
        if (bits < best.w.bits()) { EXPECT_LT(v, best.value); }
    }
}

}  // namespace
}  // namespace egc
