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

#include "cli.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "egc/emitter_compiler.hpp"
#include "egc/errors.hpp"
#include "egc/fusion.hpp"
#include "egc/graph_code.hpp"
#include "egc/serialization.hpp"
#include "egc/threshold.hpp"
#include "json.hpp"

#ifndef EGC_VERSION
#define EGC_VERSION "0.0.0"
#endif

namespace egc::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, bool is_config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::string msg = "cannot read '" + path + "'";
        if (is_config) throw ConfigError(msg);
        throw UsageError(msg);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// All files of one command are staged next to their targets and renamed
// only once everything has been produced.
class OutputSet {
  public:
    void add(const fs::path& path, std::string content) { files_.emplace_back(path, std::move(content)); }

    void commit() {
        std::vector<std::pair<fs::path, fs::path>> staged;
        try {
            for (const auto& [path, content] : files_) {
                if (path.has_parent_path()) fs::create_directories(path.parent_path());
                fs::path tmp = path;
                tmp += ".tmp";
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                if (!out) throw IoError("cannot write '" + tmp.string() + "'");
                out << content;
                out.close();
                if (!out) throw IoError("cannot write '" + tmp.string() + "'");
                staged.emplace_back(tmp, path);
            }
            for (const auto& [tmp, path] : staged) fs::rename(tmp, path);
        } catch (...) {
            std::error_code ec;
            for (const auto& [tmp, path] : staged) fs::remove(tmp, ec);
            throw;
        }
    }

  private:
    std::vector<std::pair<fs::path, std::string>> files_;
};

struct Common {
    std::string out;
    std::string config_path;
    std::string bias = "randomized";
    std::string mode = "two-emitter";
    std::string n;
    std::string code;
    std::string graph;
    std::string w;
    std::string outer;
    std::string eta = "0.7,0.8,0.9,1";
    double p_fail = 0.5;
    std::optional<double> epsilon;
    std::optional<double> gamma_max;
    std::size_t grid = 21;
    unsigned threads = 0;
    std::optional<std::size_t> inject_fault;
};

std::string manifest(const std::string& command, const std::map<std::string, std::string>& params,
                     const std::optional<std::string>& config_text, const std::vector<std::string>& outputs) {
    json j;
    j["command"] = command;
    j["parameters"] = params;
    j["config_digest"] = config_text ? json("sha256:" + sha256_hex(canonical_json(*config_text))) : json(nullptr);
    j["tool_version"] = EGC_VERSION;
    j["seed"] = nullptr;
    j["outputs"] = outputs;
    return j.dump(2) + "\n";
}

std::size_t parse_size(const std::string& text, const char* what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    }
    if (pos != text.size()) throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    return v;
}

// "8", "2..8" or "2-8".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    auto sep = text.find("..");
    std::size_t skip = 2;
    if (sep == std::string::npos) {
        sep = text.find('-');
        skip = 1;
    }
    std::size_t lo, hi;
    if (sep == std::string::npos) {
        lo = hi = parse_size(text, "--n");
    } else {
        lo = parse_size(text.substr(0, sep), "--n");
        hi = parse_size(text.substr(sep + skip), "--n");
    }
    if (lo == 0 || hi < lo) throw UsageError("--n must be a positive size or range, got '" + text + "'");
    return {lo, hi};
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("invalid number '" + item + "' in --eta");
        }
    }
    return out;
}

GraphCode resolve_code(const Common& c) {
    if (!c.graph.empty()) {
        GraphState g = graph_from_json(read_file(c.graph, false));
        return code_from_progenitor(g);
    }
    if (c.code.empty()) throw UsageError("one of --code or --graph is required");
    if (c.code.size() < 3 || c.code[0] != 'n') throw UsageError("malformed code id '" + c.code + "'");
    std::size_t k = parse_size(c.code.substr(1, c.code.find('-') - 1), "code id");
    if (k == 0) throw UsageError("malformed code id '" + c.code + "'");
    for (const auto& g : enumerate_single_emitter_progenitors(k)) {
        GraphCode code = code_from_progenitor(g);
        if (code.id() == c.code) return code;
    }
    throw UsageError("no single-emitter code with id '" + c.code + "'");
}

RunConfig load_config(const Common& c, std::optional<std::string>& text) {
    if (c.config_path.empty()) throw UsageError("--config is required");
    text = read_file(c.config_path, true);
    RunConfig cfg = parse_config(*text);
    cfg.bias.mode = parse_bias_mode(c.bias);
    cfg.bias.validate();
    return cfg;
}

unsigned thread_count(const Common& c) {
    if (c.threads > 0) return c.threads;
    return std::max(1U, std::thread::hardware_concurrency());
}

FailureBasis parse_w(const Common& c, std::size_t n) {
    if (c.w.empty()) return FailureBasis(n, 0);
    FailureBasis w = FailureBasis::from_string(c.w);
    if (w.size() != n) throw UsageError("--w has " + std::to_string(w.size()) + " entries, code has " + std::to_string(n));
    return w;
}

int cmd_enumerate(const Common& c, std::ostream& out) {
    auto [lo, hi] = parse_range(c.n);
    if (lo != hi) throw UsageError("enumerate takes a single --n");
    auto graphs = enumerate_single_emitter_progenitors(lo);
    OutputSet files;
    json lib = json::array();
    fs::path dir(c.out);
    std::vector<std::string> outputs{"library.json"};
    for (const auto& g : graphs) {
        std::string id = code_id(g);
        lib.push_back({{"id", id}, {"graph", json::parse(graph_to_json(g))}});
        files.add(dir / (id + ".dot"), to_dot(g, "g"));
        outputs.push_back(id + ".dot");
    }
    files.add(dir / "library.json", lib.dump(1) + "\n");
    files.add(dir / "manifest.json", manifest("enumerate", {{"n", c.n}, {"out", c.out}}, std::nullopt, outputs));
    files.commit();
    out << graphs.size() << " graph" << (graphs.size() == 1 ? "" : "s") << " written to " << c.out << "\n";
    return kOk;
}

int cmd_analyze(const Common& c, std::ostream& out) {
    GraphCode code = resolve_code(c);
    FusionSpec spec;
    spec.p_fail = c.p_fail;
    spec.w = parse_w(c, code.num_code_qubits());
    spec.validate(code.num_code_qubits());
    std::vector<double> etas = parse_list(c.eta);
    for (double e : etas) {
        if (!(e >= 0.0 && e <= 1.0)) throw RangeError("eta values must lie in [0, 1]");
    }
    ErasureReport report = erasure_analysis(code, spec);
    json j;
    j["code"] = json::parse(code_to_json(code));
    j["erasure"] = json::parse(erasure_report_to_json(report, etas));
    if (c.epsilon) {
        ErrorModel model(code, spec.w);
        json errs = json::array();
        for (double e : etas) errs.push_back(json::parse(error_report_to_json(model.evaluate(e, c.p_fail, *c.epsilon), e, *c.epsilon)));
        j["errors"] = errs;
    }
    std::map<std::string, std::string> params{{"code", code.id()}, {"w", spec.w.str()}, {"p_fail", format_double(c.p_fail)},
                                              {"eta", c.eta}, {"out", c.out}};
    if (c.epsilon) params["epsilon"] = format_double(*c.epsilon);
    OutputSet files;
    files.add(c.out, j.dump(1) + "\n");
    files.add(c.out + ".manifest.json", manifest("analyze", params, std::nullopt, {fs::path(c.out).filename().string()}));
    files.commit();
    out << code.id() << " w=" << spec.w.str() << " written to " << c.out << "\n";
    return kOk;
}

int cmd_optimize_w(const Common& c, std::ostream& out) {
    std::optional<std::string> cfg_text;
    RunConfig cfg = load_config(c, cfg_text);
    GraphCode code = resolve_code(c);
    ThresholdResult r = loss_threshold(code, cfg.bias, c.p_fail);
    json j = {{"code_id", r.code_id},      {"n", r.n},
              {"bias_mode", bias_mode_name(r.mode)}, {"w", r.w.str()},
              {"gamma_star", r.gamma_star}, {"feasible", r.feasible},
              {"erase_xx", r.erase_xx},     {"erase_zz", r.erase_zz},
              {"diagnostic", r.diagnostic}};
    OutputSet files;
    files.add(c.out, j.dump(1) + "\n");
    files.add(c.out + ".manifest.json",
              manifest("optimize-w", {{"code", code.id()}, {"bias", c.bias}, {"p_fail", format_double(c.p_fail)}, {"out", c.out}},
                       cfg_text, {fs::path(c.out).filename().string()}));
    files.commit();
    out << r.code_id << " w*=" << r.w.str() << " gamma*=" << format_double(r.gamma_star) << "\n";
    return kOk;
}

int cmd_threshold(const Common& c, std::ostream& out, std::ostream& err) {
    std::optional<std::string> cfg_text;
    RunConfig cfg = load_config(c, cfg_text);
    auto [lo, hi] = parse_range(c.n);
    if (hi > kDefaultFusionCap) throw ResourceError("code size " + std::to_string(hi) + " exceeds the cap " + std::to_string(kDefaultFusionCap));
    std::string csv = threshold_csv_header();
    json codes = json::array();
    for (std::size_t n = lo; n <= hi; ++n) {
        auto results = search_best_code(n, cfg.bias, thread_count(c), c.p_fail);
        const ThresholdResult& best = results.front();
        if (!best.feasible) err << "warning: n=" << n << ": " << best.diagnostic << "\n";
        csv += threshold_csv_row(best);
        for (const auto& g : enumerate_single_emitter_progenitors(n)) {
            if (code_id(g) == best.code_id) {
                codes.push_back(json::parse(code_to_json(code_from_progenitor(g))));
                break;
            }
        }
        out << "n=" << n << " " << best.code_id << " gamma*=" << format_double(best.gamma_star) << "\n";
    }
    std::string codes_path = c.out + ".codes.json";
    OutputSet files;
    files.add(c.out, csv);
    files.add(codes_path, codes.dump(1) + "\n");
    files.add(c.out + ".manifest.json",
              manifest("threshold", {{"n", c.n}, {"bias", c.bias}, {"p_fail", format_double(c.p_fail)}, {"out", c.out}},
                       cfg_text, {fs::path(c.out).filename().string(), fs::path(codes_path).filename().string()}));
    files.commit();
    return kOk;
}

int cmd_region(const Common& c, std::ostream& out, std::ostream& err) {
    std::optional<std::string> cfg_text;
    RunConfig cfg = load_config(c, cfg_text);
    if (!cfg.error) throw ConfigError("config: missing key 'epsilon_M'");
    if (cfg.bias.mode != BiasMode::kRandomized) throw UsageError("region uses randomized bias");
    std::optional<GraphCode> code;
    if (c.code.empty() && c.graph.empty()) {
        if (c.n.empty()) throw UsageError("one of --code, --graph or --n is required");
        auto [lo, hi] = parse_range(c.n);
        if (lo != hi) throw UsageError("region takes a single --n");
        auto best = search_best_code(lo, cfg.bias, thread_count(c), c.p_fail).front();
        for (const auto& g : enumerate_single_emitter_progenitors(lo)) {
            if (code_id(g) == best.code_id) code = code_from_progenitor(g);
        }
    } else {
        code = resolve_code(c);
    }
    if (c.grid < 2) throw UsageError("--grid needs at least two points");
    Region region = correctable_region(*code, cfg.bias, *cfg.error, c.grid, c.gamma_max.value_or(1.0), c.p_fail);
    if (region.boundary.empty()) err << "warning: " << code->id() << ": " << region.diagnostic << "\n";
    std::map<std::string, std::string> params{{"code", code->id()}, {"grid", std::to_string(c.grid)},
                                              {"p_fail", format_double(c.p_fail)}, {"out", c.out}};
    if (c.gamma_max) params["gamma_max"] = format_double(*c.gamma_max);
    OutputSet files;
    files.add(c.out, region_csv(region));
    files.add(c.out + ".manifest.json", manifest("region", params, cfg_text, {fs::path(c.out).filename().string()}));
    files.commit();
    out << code->id() << " gamma*=" << format_double(region.threshold.gamma_star) << " boundary points "
        << region.boundary.size() << "\n";
    return kOk;
}

int cmd_compile(const Common& c, std::ostream& out, std::ostream& err) {
    if (c.outer.empty()) throw UsageError("--outer is required");
    std::vector<GenerationOp> outer = outer_from_json(read_file(c.outer, true));
    GraphCode code = resolve_code(c);
    EmitterMode mode = parse_emitter_mode(c.mode);
    GenerationSequence seq = compile(outer, code, mode);
    if (c.inject_fault) seq = inject_fault(seq, *c.inject_fault);
    VerificationResult v = verify_sequence(seq, concatenated_graph(outer, code));
    if (!v.ok) {
        err << "verification failed: " << v.message;
        if (v.divergent_step >= 0) err << " (first divergent step " << v.divergent_step << ")";
        err << "\n";
        return kVerification;
    }
    ResourceCount rc = count_resources(seq);
    fs::path dir(c.out);
    OutputSet files;
    files.add(dir / "sequence.json", sequence_to_json(seq) + "\n");
    files.add(dir / "schedule.txt", schedule_text(seq));
    files.add(dir / "resources.csv", resources_csv_header() + resources_csv_row(seq, rc));
    files.add(dir / "manifest.json",
              manifest("compile",
                       {{"outer", generation_ops_str(outer)}, {"code", code.id()}, {"mode", c.mode}, {"out", c.out}},
                       std::nullopt, {"sequence.json", "schedule.txt", "resources.csv"}));
    files.commit();
    out << "verified (" << (v.method == VerificationMethod::kStateVector ? "state vector" : "stabilizer")
        << "); spin-spin gates " << rc.spin_spin_gates << ", max emitter depth " << rc.max_emitter_depth
        << ", photons " << rc.photons << "\n";
    return kOk;
}

const char* action_char(QubitBasisAction a) {
    switch (a) {
        case QubitBasisAction::kKeep:
            return "K";
        case QubitBasisAction::kSwap:
            return "S";
        case QubitBasisAction::kMixesY:
            return "Y";
    }
    return "?";
}

int cmd_duals(const Common& c, std::ostream& out) {
    auto [lo, hi] = parse_range(c.n);
    if (lo != hi) throw UsageError("duals takes a single --n");
    if (lo > kDefaultFusionCap) throw ResourceError("code size exceeds the cap " + std::to_string(kDefaultFusionCap));
    json rows = json::array();
    std::size_t swapped = 0, total = 0;
    for (const auto& g : enumerate_single_emitter_progenitors(lo)) {
        GraphCode code = code_from_progenitor(g);
        GraphCode dual = dual_code(code);
        std::string actions;
        for (auto a : dual_basis_actions(code)) actions += action_char(a);
        bool all_swap = true;
        bool mapped = true;
        FusionAnalyzer fa(code), fd(dual);
        std::size_t n = code.num_code_qubits();
        for (std::uint32_t bits = 0; bits < (1U << n) && all_swap; ++bits) {
            FailureBasis w(n, bits);
            auto wd = dual_failure_basis(code, w);
            if (!wd) {
                mapped = false;
                all_swap = false;
                break;
            }
            ErasureReport a = fa.analyze(w, c.p_fail, false), b = fd.analyze(*wd, c.p_fail, false);
            all_swap = a.success_xx == b.success_zz && a.success_zz == b.success_xx;
        }
        ++total;
        swapped += all_swap ? 1 : 0;
        rows.push_back({{"id", code.id()},
                        {"dual_progenitor", json::parse(graph_to_json(dual.progenitor()))},
                        {"dual_id", dual.id()},
                        {"qubit_actions", actions},
                        {"failure_basis_mapped", mapped},
                        {"swap_exact", all_swap}});
    }
    OutputSet files;
    files.add(c.out, rows.dump(1) + "\n");
    files.add(c.out + ".manifest.json",
              manifest("duals", {{"n", c.n}, {"p_fail", format_double(c.p_fail)}, {"out", c.out}}, std::nullopt,
                       {fs::path(c.out).filename().string()}));
    files.commit();
    out << swapped << "/" << total << " codes swap exactly under their dual\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Emitter-generatable graph codes: fusion analysis, thresholds and emitter compilation", "egc"};
    app.require_subcommand(1);
    Common c;

    auto add_out = [&](CLI::App* sub, const char* help) { sub->add_option("--out", c.out, help)->required(); };
    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--code", c.code, "code id, e.g. n3-LLL");
        sub->add_option("--graph", c.graph, "progenitor graph JSON file");
    };
    auto add_pfail = [&](CLI::App* sub) {
        sub->add_option("--p-fail", c.p_fail, "physical fusion failure probability")->check(CLI::Range(0.0, 1.0));
    };
    auto add_bias = [&](CLI::App* sub) {
        sub->add_option("--bias", c.bias, "randomized or passive")
            ->check(CLI::IsMember({"randomized", "passive"}));
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", c.threads, "worker threads (default: all cores)")->check(CLI::Range(1U, 1024U));
    };

    auto* enumerate = app.add_subcommand("enumerate", "write every single-emitter progenitor graph of a size");
    enumerate->add_option("--n", c.n, "number of photons (code qubits)")->required();
    add_out(enumerate, "output directory");

    auto* analyze = app.add_subcommand("analyze", "erasure (and optionally error) analysis of one code");
    add_code(analyze);
    analyze->add_option("--w", c.w, "failure basis, one 0/1 per code qubit");
    analyze->add_option("--eta", c.eta, "comma-separated transmissions");
    analyze->add_option("--epsilon", c.epsilon, "depolarizing strength for the error analysis")
        ->check(CLI::Range(0.0, 1.0));
    add_pfail(analyze);
    add_out(analyze, "output JSON file");

    auto* optimize = app.add_subcommand("optimize-w", "best failure basis of one code");
    add_code(optimize);
    optimize->add_option("--config", c.config_path, "threshold config JSON")->required();
    add_bias(optimize);
    add_pfail(optimize);
    add_out(optimize, "output JSON file");

    auto* threshold = app.add_subcommand("threshold", "best code and loss threshold per size");
    threshold->add_option("--config", c.config_path, "threshold config JSON")->required();
    threshold->add_option("--n", c.n, "size or range, e.g. 8 or 2..8")->required();
    add_bias(threshold);
    add_pfail(threshold);
    add_threads(threshold);
    add_out(threshold, "output CSV file");

    auto* region = app.add_subcommand("region", "correctable (loss, Pauli error) region");
    region->add_option("--config", c.config_path, "threshold config JSON with epsilon_M")->required();
    add_code(region);
    region->add_option("--n", c.n, "use the best code of this size");
    region->add_option("--grid", c.grid, "number of loss values");
    region->add_option("--gamma-max", c.gamma_max, "largest loss to report")->check(CLI::Range(0.0, 1.0));
    add_pfail(region);
    add_threads(region);
    add_out(region, "output CSV file");

    auto* comp = app.add_subcommand("compile", "two-emitter / emitter-memory sequence for a concatenated graph");
    comp->add_option("--outer", c.outer, "outer graph JSON ({\"ops\": \"LPL\"} or a caterpillar graph)")->required();
    add_code(comp);
    comp->add_option("--mode", c.mode, "two-emitter or emitter-memory")
        ->check(CLI::IsMember({"two-emitter", "emitter-memory"}));
    comp->add_option("--inject-fault", c.inject_fault, "testing: corrupt the sequence before this step")->group("");
    add_out(comp, "output directory");

    auto* duals = app.add_subcommand("duals", "dual codes and their erasure swap");
    duals->add_option("--n", c.n, "code size")->required();
    add_pfail(duals);
    add_out(duals, "output JSON file");

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(c, out);
        if (*analyze) return cmd_analyze(c, out);
        if (*optimize) return cmd_optimize_w(c, out);
        if (*threshold) return cmd_threshold(c, out, err);
        if (*region) return cmd_region(c, out, err);
        if (*comp) return cmd_compile(c, out, err);
        if (*duals) return cmd_duals(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << "\n";
        return kResourceCap;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const ConstructionError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DimensionError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const RangeError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv, argv + argc);
    if (args.empty()) args.emplace_back("egc");
    return run(args, out, err);
}

}  // namespace egc::cli
