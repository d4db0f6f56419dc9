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

#include <optional>
#include <string>
#include <vector>

#include "egc/emitter_compiler.hpp"
#include "egc/fusion.hpp"
#include "egc/graph_code.hpp"
#include "egc/graph_state.hpp"
#include "egc/threshold.hpp"

namespace egc {

/// {"n": 3, "edges": [[0,1],[1,2]], "emitter": 0}
std::string graph_to_json(const GraphState& g);
/// Throws ConfigError on malformed input.
GraphState graph_from_json(const std::string& text);

std::string code_to_json(const GraphCode& code);

/// Polynomial counts plus rates evaluated on the given eta grid.
std::string erasure_report_to_json(const ErasureReport& report, const std::vector<double>& eta_grid);
std::string error_report_to_json(const ErrorReport& report, double eta, double epsilon);

std::string threshold_csv_header();
std::string threshold_csv_row(const ThresholdResult& r);
std::string region_csv(const Region& region);

std::string sequence_to_json(const GenerationSequence& seq);
std::string resources_csv_header();
std::string resources_csv_row(const GenerationSequence& seq, const ResourceCount& rc);

/// Outer target file: either {"ops": "LPL"} or a graph object as above.
std::vector<GenerationOp> outer_from_json(const std::string& text);

struct RunConfig {
    BiasConfig bias;
    std::optional<ErrorThresholdConfig> error;
};

/// Parses {"p_tilde_randomized": x, "p_tilde_biased": [[B, p]...],
/// "epsilon_M": [[p, eps]...]}. Only p_tilde_randomized is mandatory;
/// errors name the offending key (and line, for syntax errors).
RunConfig parse_config(const std::string& text);

/// Sorted-key compact dump, the input to the config digest.
std::string canonical_json(const std::string& text);

/// Shortest round-tripping decimal form.
std::string format_double(double v);

}  // namespace egc
