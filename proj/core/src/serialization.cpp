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

#include "egc/serialization.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "egc/errors.hpp"
#include "json.hpp"

namespace egc {

using json = nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

json graph_json(const GraphState& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return {{"n", g.num_vertices()}, {"edges", edges}, {"emitter", g.emitter_vertex()}};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line number.
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n' ? 1 : 0;
        throw ConfigError("line " + std::to_string(line) + ": invalid JSON (" + e.what() + ")");
    }
}

GraphState graph_from(const json& j) {
    if (!j.is_object()) throw ConfigError("graph must be a JSON object");
    for (const char* key : {"n", "edges"}) {
        if (!j.contains(key)) throw ConfigError(std::string("graph: missing key '") + key + "'");
    }
    if (!j["n"].is_number_unsigned()) throw ConfigError("graph: 'n' must be a nonnegative integer");
    std::size_t n = j["n"].get<std::size_t>();
    std::size_t emitter = 0;
    if (j.contains("emitter")) {
        if (!j["emitter"].is_number_unsigned()) throw ConfigError("graph: 'emitter' must be a vertex index");
        emitter = j["emitter"].get<std::size_t>();
    }
    if (n == 0) throw ConfigError("graph: 'n' must be positive");
    if (emitter >= n) throw ConfigError("graph: 'emitter' out of range");
    GraphState g(n, emitter);
    if (!j["edges"].is_array()) throw ConfigError("graph: 'edges' must be an array of pairs");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw ConfigError("graph: each edge must be a pair of vertex indices");
        }
        auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
        if (a >= n || b >= n || a == b) throw ConfigError("graph: bad edge [" + std::to_string(a) + ", " +
                                                          std::to_string(b) + "]");
        g.add_edge(a, b);
    }
    return g;
}

std::vector<std::pair<double, double>> table_from(const json& j, const char* key) {
    if (!j.is_array()) throw ConfigError(std::string("'") + key + "' must be an array of [x, y] pairs");
    std::vector<std::pair<double, double>> out;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
            throw ConfigError(std::string("'") + key + "' entries must be [x, y] number pairs");
        }
        out.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    return out;
}

json poly_json(const PatternPolynomial& p) {
    json rows = json::array();
    for (std::size_t a = 0; a <= p.num_pairs(); ++a) {
        for (std::size_t b = 0; a + b <= p.num_pairs(); ++b) {
            if (p.count(a, b) != 0) rows.push_back({a, b, p.count(a, b)});
        }
    }
    return rows;
}

}  // namespace

std::string graph_to_json(const GraphState& g) { return graph_json(g).dump(); }

GraphState graph_from_json(const std::string& text) { return graph_from(parse(text)); }

std::string code_to_json(const GraphCode& code) {
    json stabs = json::array();
    for (const auto& s : code.stabilizers().generators()) stabs.push_back(s.str());
    json verts = code.code_vertices();
    json j = {{"id", code.id()},
              {"n_code", code.num_code_qubits()},
              {"progenitor", graph_json(code.progenitor())},
              {"input", code.input_qubit()},
              {"code_vertices", verts},
              {"logical_x", code.logical_x().str()},
              {"logical_z", code.logical_z().str()},
              {"stabilizers", stabs}};
    return j.dump();
}

std::string erasure_report_to_json(const ErasureReport& r, const std::vector<double>& eta_grid) {
    json rates = json::array();
    for (double eta : eta_grid) {
        rates.push_back({{"eta", eta},
                         {"p_success_xx", r.p_success_xx(eta)},
                         {"p_success_zz", r.p_success_zz(eta)},
                         {"p_erase_xx", r.p_erase_xx(eta)},
                         {"p_erase_zz", r.p_erase_zz(eta)}});
    }
    json j = {{"code_id", r.code_id},
              {"n", r.n},
              {"p_fail", r.p_fail},
              {"w", r.w.str()},
              // Rows are [successes, failures, count].
              {"success_xx", poly_json(r.success_xx)},
              {"success_zz", poly_json(r.success_zz)},
              {"rates", rates}};
    return j.dump();
}

std::string error_report_to_json(const ErrorReport& r, double eta, double epsilon) {
    json j = {{"eta", eta},
              {"epsilon", epsilon},
              {"error_xx", r.error_xx},
              {"error_zz", r.error_zz},
              {"uncorrected_xx", r.uncorrected_xx},
              {"uncorrected_zz", r.uncorrected_zz},
              {"average", r.average()}};
    return j.dump();
}

std::string threshold_csv_header() { return "n,code_id,bias_mode,w,gamma_star,erase_xx,erase_zz,feasible\n"; }

std::string threshold_csv_row(const ThresholdResult& r) {
    std::ostringstream out;
    out << r.n << "," << r.code_id << "," << bias_mode_name(r.mode) << "," << r.w.str() << ","
        << format_double(r.gamma_star) << "," << format_double(r.erase_xx) << "," << format_double(r.erase_zz) << ","
        << (r.feasible ? 1 : 0) << "\n";
    return out.str();
}

std::string region_csv(const Region& region) {
    std::ostringstream out;
    out << "gamma,epsilon_boundary\n";
    for (const auto& p : region.boundary) out << format_double(p.gamma) << "," << format_double(p.epsilon) << "\n";
    return out.str();
}

std::string sequence_to_json(const GenerationSequence& seq) {
    json ops = json::array();
    for (const auto& ins : seq.ops) {
        json o = {{"op", instruction_name(ins.kind)}, {"emitter", ins.emitter}, {"block", ins.block}};
        if (ins.kind == InstructionKind::kCz || ins.kind == InstructionKind::kSwap) o["other"] = ins.other;
        if (ins.kind == InstructionKind::kEmitPhoton) o["photon"] = ins.photon;
        if (ins.kind == InstructionKind::kMeasureX) o["outer_vertex"] = ins.vertex;
        ops.push_back(o);
    }
    json j = {{"mode", emitter_mode_name(seq.mode)},
              {"outer_ops", generation_ops_str(seq.outer_ops)},
              {"inner_ops", generation_ops_str(seq.inner_ops)},
              {"inner_code_qubits", seq.inner_code_qubits},
              {"emitters", seq.emitter_count},
              {"photons", seq.num_photons},
              {"instructions", ops}};
    return j.dump(1);
}

std::string resources_csv_header() { return "n,outer_size,mode,spin_spin_gates,max_emitter_depth,photons\n"; }

std::string resources_csv_row(const GenerationSequence& seq, const ResourceCount& rc) {
    std::ostringstream out;
    out << seq.inner_code_qubits << "," << seq.num_outer() << "," << emitter_mode_name(seq.mode) << ","
        << rc.spin_spin_gates << "," << rc.max_emitter_depth << "," << rc.photons << "\n";
    return out.str();
}

std::vector<GenerationOp> outer_from_json(const std::string& text) {
    json j = parse(text);
    if (j.is_object() && j.contains("ops")) {
        if (!j["ops"].is_string()) throw ConfigError("'ops' must be a string of L/P characters");
        try {
            return parse_generation_ops(j["ops"].get<std::string>());
        } catch (const std::exception& e) {
            throw ConfigError(std::string("'ops': ") + e.what());
        }
    }
    GraphState g = graph_from(j);
    try {
        return outer_from_graph(g).ops;
    } catch (const ConstructionError& e) {
        throw ConfigError(std::string("outer graph: ") + e.what());
    }
}

RunConfig parse_config(const std::string& text) {
    json j = parse(text);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig cfg;
    if (!j.contains("p_tilde_randomized")) throw ConfigError("config: missing key 'p_tilde_randomized'");
    if (!j["p_tilde_randomized"].is_number()) throw ConfigError("config: 'p_tilde_randomized' must be a number");
    cfg.bias.p_tilde_randomized = j["p_tilde_randomized"].get<double>();
    if (j.contains("p_tilde_biased")) cfg.bias.p_tilde_biased = PiecewiseLinear(table_from(j["p_tilde_biased"], "p_tilde_biased"));
    if (j.contains("epsilon_M")) {
        ErrorThresholdConfig e;
        e.epsilon_m = PiecewiseLinear(table_from(j["epsilon_M"], "epsilon_M"));
        cfg.error = e;
    }
    cfg.bias.validate();
    if (cfg.error) cfg.error->validate(cfg.bias.p_tilde_randomized);
    return cfg;
}

std::string canonical_json(const std::string& text) { return parse(text).dump(); }

}  // namespace egc
