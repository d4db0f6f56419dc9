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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "egc/graph_code.hpp"
#include "egc/pauli.hpp"

namespace egc {

/// Per-pair failure basis. Bit i set means a failed fusion on pair i still
/// yields X1X2; clear means it yields Z1Z2.
class FailureBasis {
  public:
    FailureBasis() = default;
    FailureBasis(std::size_t size, std::uint32_t bits);
    /// "1010" with character i giving w_i.
    static FailureBasis from_string(const std::string& text);

    std::size_t size() const { return size_; }
    std::uint32_t bits() const { return bits_; }
    bool operator[](std::size_t i) const { return (bits_ >> i) & 1U; }
    FailureBasis flipped() const;
    std::string str() const;

    friend bool operator==(const FailureBasis&, const FailureBasis&) = default;

  private:
    std::size_t size_ = 0;
    std::uint32_t bits_ = 0;
};

/// Largest code the exhaustive fusion analysis accepts by default.
inline constexpr std::size_t kDefaultFusionCap = 8;

struct FusionSpec {
    double eta = 1.0;     // per-photon transmission
    double p_fail = 0.5;  // physical fusion failure probability
    FailureBasis w;

    void validate(std::size_t n_code) const;
};

enum class FusionOutcome : std::uint8_t { kSuccess = 0, kFail = 1, kLoss = 2 };

/// One outcome per fused code-qubit pair.
struct MeasurementPattern {
    std::vector<FusionOutcome> outcomes;

    /// Base-3 decoding; digit i (least significant first) is pair i.
    static MeasurementPattern from_index(std::size_t n, std::uint32_t index);
    std::uint32_t index() const;
    std::size_t size() const { return outcomes.size(); }
    std::uint32_t success_mask() const;
    std::uint32_t fail_mask() const;
    AvailableParities available(const FailureBasis& w) const;
};

/// c * eta^(2*eta_sq_power) * (1 - eta^2)^loss_power.
struct ProbabilityMonomial {
    double coefficient = 1.0;
    unsigned eta_sq_power = 0;
    unsigned loss_power = 0;

    double evaluate(double eta) const;
};

ProbabilityMonomial pattern_probability(const MeasurementPattern& pattern, const FusionSpec& spec);

/// Exact probability polynomial of a set of patterns, kept as integer counts
/// of patterns with a successes, b failures and n-a-b losses:
///   sum_{a,b} count(a,b) (1-p_fail)^a p_fail^b eta^(2(a+b)) (1-eta^2)^(n-a-b).
class PatternPolynomial {
  public:
    PatternPolynomial() = default;
    explicit PatternPolynomial(std::size_t n);

    /// Every one of the 3^n patterns, i.e. the multinomial coefficients.
    static PatternPolynomial all_patterns(std::size_t n);

    std::size_t num_pairs() const { return n_; }
    std::uint64_t count(std::size_t successes, std::size_t failures) const;
    void add(std::size_t successes, std::size_t failures, std::uint64_t k = 1);
    std::uint64_t total() const;

    double evaluate(double eta, double p_fail) const;
    /// Coefficients of eta^k, k = 0..2n, for a fixed p_fail.
    std::vector<double> eta_coefficients(double p_fail) const;

    PatternPolynomial& operator+=(const PatternPolynomial& other);
    friend bool operator==(const PatternPolynomial&, const PatternPolynomial&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> counts_;  // (n+1) x (n+1), index a*(n+1)+b
};

/// True iff the paired operator P (x) P can be rebuilt from the pattern's
/// parities: X needs XX, Z needs ZZ, Y needs both (success only).
bool recoverable(const PauliOperator& logical, const MeasurementPattern& pattern, const FailureBasis& w);

struct ErasureReport {
    std::string code_id;
    std::size_t n = 0;
    double p_fail = 0.5;
    FailureBasis w;
    PatternPolynomial success_xx;
    PatternPolynomial success_zz;
    /// Per pattern index: position in the logical set of the first
    /// recovering representative, or -1.
    std::vector<std::int32_t> representative_xx;
    std::vector<std::int32_t> representative_zz;

    double p_success_xx(double eta) const { return success_xx.evaluate(eta, p_fail); }
    double p_success_zz(double eta) const { return success_zz.evaluate(eta, p_fail); }
    double p_erase_xx(double eta) const { return 1.0 - p_success_xx(eta); }
    double p_erase_zz(double eta) const { return 1.0 - p_success_zz(eta); }
};

/// Precomputed recovery lookup for one code, reusable across failure bases.
class FusionAnalyzer {
  public:
    explicit FusionAnalyzer(const GraphCode& code, std::size_t cap = kDefaultFusionCap);

    const GraphCode& code() const { return *code_; }
    std::size_t num_pairs() const { return n_; }

    /// First representative index (or -1) for the given available X / Z
    /// parity masks.
    std::int32_t representative(LogicalBasis basis, std::uint32_t x_avail, std::uint32_t z_avail) const;

    /// Polynomials only; skips the per-pattern representative tables.
    ErasureReport analyze(const FailureBasis& w, double p_fail, bool keep_representatives = true) const;

  private:
    const GraphCode* code_;
    std::size_t n_;
    std::vector<std::int32_t> table_x_;
    std::vector<std::int32_t> table_z_;
};

ErasureReport erasure_analysis(const GraphCode& code, const FusionSpec& spec, std::size_t cap = kDefaultFusionCap);

struct OptimizationResult {
    FailureBasis w;
    ErasureReport report;
    double value = 0.0;
};

using FailureBasisObjective = std::function<double(const ErasureReport&)>;

/// Exhaustive scan over all 2^n failure bases; ties go to the lowest w.
OptimizationResult optimize_failure_bases(const GraphCode& code, const FailureBasisObjective& objective,
                                          double p_fail = 0.5, std::size_t cap = kDefaultFusionCap);

/// Failure basis for the dual code that mirrors `w`: pairs whose local
/// Clifford swaps X and Z get their bit flipped. Empty if some code qubit
/// is mapped onto Y, which X/Z-only failure bases cannot follow.
std::optional<FailureBasis> dual_failure_basis(const GraphCode& code, const FailureBasis& w);

// ---------------------------------------------------------------------------
// Pauli errors

/// Marginal probability that a fused pair's XX (or ZZ) parity flips under
/// independent depolarizing noise of strength eps on both photons:
/// 4 (eps/3 (1-eps) + eps^2/9).
double pauli_flip_probability(double epsilon);

/// Joint law of (XX flip, ZZ flip) for one fused pair. p[fx][fz].
struct FlipDistribution {
    double p[2][2] = {{1.0, 0.0}, {0.0, 0.0}};

    double flip_xx() const { return p[1][0] + p[1][1]; }
    double flip_zz() const { return p[0][1] + p[1][1]; }
    double both() const { return p[1][1]; }
};

FlipDistribution joint_flip_distribution(double epsilon);

struct ErrorReport {
    double error_xx = 0.0;  // after maximum-likelihood correction
    double error_zz = 0.0;
    double uncorrected_xx = 0.0;  // raw parity flip rate of the representative
    double uncorrected_zz = 0.0;
    /// Conditional error per pattern index; NaN where the parity is erased.
    std::vector<double> pattern_error_xx;
    std::vector<double> pattern_error_zz;

    double average() const { return 0.5 * (error_xx + error_zz); }
};

/// Precomputed syndrome maps for one (code, w). Evaluating at a new eps
/// only redoes the per-pattern convolutions.
class ErrorModel {
  public:
    ErrorModel(const GraphCode& code, const FailureBasis& w, std::size_t cap = kDefaultFusionCap);

    std::size_t num_pairs() const { return n_; }
    const FailureBasis& failure_basis() const { return w_; }

    /// Per-pattern conditional error for the given parity (NaN if erased).
    std::vector<double> pattern_errors(LogicalBasis basis, double epsilon, bool corrected = true) const;

    /// Pattern-probability weighted error given transmission eta.
    ErrorReport evaluate(double eta, double p_fail, double epsilon, bool keep_patterns = false) const;

    /// Size of the available stabilizer subgroup for a pattern (or -1).
    int syndrome_rank(LogicalBasis basis, std::uint32_t pattern_index) const;

  private:
    struct PatternMap {
        std::uint8_t successes = 0;
        std::uint8_t failures = 0;
        std::int8_t rank = -1;  // -1: parity erased
        std::vector<std::uint32_t> x_contrib;  // per pair: bits hit by an XX flip
        std::vector<std::uint32_t> z_contrib;  // per pair: bits hit by a ZZ flip
    };

    std::pair<double, double> decode(const PatternMap& m, const FlipDistribution& d) const;

    std::size_t n_;
    FailureBasis w_;
    std::vector<PatternMap> maps_x_;  // one per pattern index
    std::vector<PatternMap> maps_z_;
};

ErrorReport error_analysis(const GraphCode& code, const FusionSpec& spec, double epsilon,
                           std::size_t cap = kDefaultFusionCap);

}  // namespace egc
