// Copyright 2026 The paccess Authors
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

// paccess: accessible-set generation, graphs, state-space models and
// verification suites for Pauli-string Hamiltonians.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paccess/errors.h"
#include "paccess/graph.h"
#include "paccess/io.h"
#include "paccess/oracle_sim.h"
#include "paccess/statespace.h"
#include "paccess/verify.h"

namespace {

using namespace paccess;

constexpr int kExitInput = 2;
constexpr int kExitConsistency = 3;

struct Source {
    std::string hamiltonian;
    std::size_t chain = 0;
    std::vector<double> couplings;
    std::vector<std::string> meas;
};

struct Options {
    unsigned threads = 1;
    std::string out;
    std::string format;
    Source source;
    std::string set_path;
    std::string model_path;
    std::string rho0;
    std::string rho0_file;
    std::string times = "0:10:0.01";
    std::string integrator = "expm";
    double step = 1e-3;
    std::string suite;
    std::string range;
    std::uint64_t seed = 1;
    std::size_t n = 0;
    std::size_t m = 1;
    std::string axis = "X";
};

void add_source(CLI::App *cmd, Source &src, bool with_meas) {
    auto *file = cmd->add_option("--hamiltonian", src.hamiltonian, "Spec JSON file (schema pauli-access-spec/1)");
    auto *chain = cmd->add_option("--chain", src.chain, "Exchange chain on N sites instead of a spec file")
                      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    file->excludes(chain);
    cmd->add_option("--couplings", src.couplings, "Chain couplings h_1..h_{N-1} (default all 1)")
        ->delimiter(',')
        ->needs(chain);
    if (with_meas) {
        cmd->add_option("--meas", src.meas, "Measurement operator text; repeatable, overrides the spec file");
    }
}

SpecFile load_source(const Source &src) {
    SpecFile spec;
    if (!src.hamiltonian.empty()) {
        spec = spec_from_json(read_file(src.hamiltonian));
    } else if (src.chain != 0) {
        std::vector<double> h = src.couplings.empty() ? std::vector<double>(src.chain - 1, 1.0) : src.couplings;
        spec.hamiltonian = build_exchange_chain(src.chain, h);
    } else {
        throw InputError("give either --hamiltonian FILE or --chain N");
    }
    if (!src.meas.empty()) {
        spec.measurements = src.meas;
    }
    return spec;
}

MeasurementSpec load_measurements(const SpecFile &spec) {
    if (spec.measurements.empty()) {
        throw InputError("no measurement operators: pass --meas or list them in the spec file");
    }
    return MeasurementSpec::parse(spec.measurements, spec.hamiltonian.num_qubits);
}

void emit(const Options &opt, const std::string &content) {
    if (opt.out.empty()) {
        std::cout << content;
    } else {
        write_file(opt.out, content);
    }
}

// Summary goes to stdout when the artifact is written to a file, else stderr.
std::ostream &summary_stream(const Options &opt) { return opt.out.empty() ? std::cerr : std::cout; }

int cmd_gen(const Options &opt) {
    SpecFile spec = load_source(opt.source);
    MeasurementSpec meas = load_measurements(spec);
    auto digamma = decomposed_digamma(spec.hamiltonian);
    auto set = generate(digamma, meas.decomposed, {opt.threads});
    auto graph = build_graph(set, digamma, opt.threads);
    auto ordered = order_members(set, graph, partition_k_finite(set));
    emit(opt, opt.format == "text" ? set_to_text(ordered.set) : set_to_json(ordered.set));

    std::ostream &log = summary_stream(opt);
    log << "|G| = " << ordered.set.size() << "\nblocks:";
    for (const auto &b : ordered.set.partition) {
        log << " k=" << b.k << ":" << (b.end - b.begin);
    }
    log << "\n";
    if (auto components = connected_components(graph).size(); components > 1) {
        log << "components: " << components << " (blocks listed per component)\n";
    }
    for (const auto &w : ordered.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return 0;
}

AccessibleSet load_set(const Options &opt, std::size_t num_qubits) {
    AccessibleSet set = set_from_json(read_file(opt.set_path));
    if (set.num_qubits != num_qubits) {
        throw DimensionError("accessible set and Hamiltonian act on different qubit counts");
    }
    return set;
}

int cmd_graph(const Options &opt) {
    SpecFile spec = load_source(opt.source);
    auto set = load_set(opt, spec.hamiltonian.num_qubits);
    auto digamma = decomposed_digamma(spec.hamiltonian);
    auto graph = build_graph(set, digamma, opt.threads);
    auto partition = partition_k_finite(set);
    emit(opt, opt.format == "json" ? graph_to_json(set, graph, partition) : export_dot(set, graph, partition));
    return 0;
}

int cmd_model(const Options &opt) {
    SpecFile spec = load_source(opt.source);
    MeasurementSpec meas = load_measurements(spec);
    auto set = load_set(opt, spec.hamiltonian.num_qubits);
    auto model = build_model(set, spec.hamiltonian, meas, opt.threads);
    emit(opt, model_to_json(model));
    return 0;
}

Eigen::MatrixXcd load_density(const std::string &path) {
    auto j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || !j.contains("real")) {
        throw InputError("density matrix file needs a \"real\" array and an optional \"imag\" array");
    }
    auto re = j.at("real").get<std::vector<std::vector<double>>>();
    std::vector<std::vector<double>> im;
    if (j.contains("imag")) {
        im = j.at("imag").get<std::vector<std::vector<double>>>();
    }
    auto dim = static_cast<Eigen::Index>(re.size());
    Eigen::MatrixXcd rho(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        if (static_cast<Eigen::Index>(re[r].size()) != dim ||
            (!im.empty() && (im.size() != re.size() || static_cast<Eigen::Index>(im[r].size()) != dim))) {
            throw DimensionError("density matrix must be square");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            rho(r, c) = {re[r][c], im.empty() ? 0.0 : im[r][c]};
        }
    }
    return rho;
}

int cmd_simulate(const Options &opt) {
    auto model = model_from_json(read_file(opt.model_path));
    std::vector<double> x0;
    if (!opt.rho0_file.empty()) {
        x0 = initial_state_vector(load_density(opt.rho0_file), model.ordering);
    } else if (!opt.rho0.empty()) {
        x0 = initial_state_vector(ProductState::parse(opt.rho0), model.ordering);
    } else {
        throw InputError("give --rho0 STATES or --rho0-file FILE");
    }
    auto times = parse_time_grid(opt.times);
    SimulateOptions sim;
    sim.integrator = opt.integrator == "rk4" ? Integrator::RungeKutta4 : Integrator::MatrixExponential;
    sim.step = opt.step;
    auto trajectory = simulate_reduced(model, x0, times, sim);
    for (const auto &d : trajectory.diagnostics) {
        std::cerr << "diagnostic: " << d << "\n";
    }
    emit(opt, trajectory_to_csv(trajectory));
    return 0;
}

int cmd_verify(const Options &opt) {
    std::string range = opt.range;
    if (range.empty()) {
        range = opt.suite == "prop2" ? "2..12" : opt.suite == "case-d-count" ? "2..10" : "2..4";
    }
    auto report = run_suite(opt.suite, parse_size_range(range), opt.threads, opt.seed);
    std::string text;
    for (const auto &line : report.lines) {
        text += line + "\n";
    }
    text += report.name + ": " + (report.pass() ? "pass" : "FAIL (" + std::to_string(report.failures) + ")") + "\n";
    emit(opt, text);
    return report.pass() ? 0 : kExitConsistency;
}

int cmd_chain(const Options &opt) {
    auto set = chain_closed_form(opt.n, opt.m, opt.axis == "Y" ? ChainAxis::Y : ChainAxis::X);
    emit(opt, opt.format == "text" ? set_to_text(set) : set_to_json(set));
    return 0;
}

// Flags from a --config JSON object are appended unless given on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }
    auto j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw InputError("config file must hold a JSON object of flag values");
    }
    auto given = [&](const std::string &flag) {
        for (const auto &a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) {
                return true;
            }
        }
        return false;
    };
    auto scalar = [](const nlohmann::json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::vector<std::string> extra;
    for (const auto &[key, value] : j.items()) {
        std::string flag = "--" + key;
        if (key == "config" || given(flag)) {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                extra.push_back(flag);
            }
        } else if (value.is_array()) {
            for (const auto &v : value) {
                extra.push_back(flag);
                extra.push_back(scalar(v));
            }
        } else {
            extra.push_back(flag);
            extra.push_back(scalar(value));
        }
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

}  // namespace

int main(int argc, char **argv) {
    Options opt;
    CLI::App app{"Accessible sets, access graphs and state-space models for Pauli-string Hamiltonians", "paccess"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--threads", opt.threads, "Worker threads for generation and model building")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--config", config_path, "JSON object of flag values; command-line flags take precedence");

    auto add_out = [&](CLI::App *cmd, std::vector<std::string> formats) {
        cmd->add_option("--out", opt.out, "Output file (default stdout)");
        cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto *gen = app.add_subcommand("gen", "Generate, partition and order an accessible set");
    add_source(gen, opt.source, true);
    add_out(gen, {"json", "text"});

    auto *graph = app.add_subcommand("graph", "Export the access graph of an ordered set");
    add_source(graph, opt.source, false);
    graph->add_option("--set", opt.set_path, "Accessible set JSON")->required();
    add_out(graph, {"dot", "json"});

    auto *model = app.add_subcommand("model", "Build the state-space model (A, B, C)");
    add_source(model, opt.source, true);
    model->add_option("--set", opt.set_path, "Ordered accessible set JSON")->required();
    add_out(model, {"json"});

    auto *simulate = app.add_subcommand("simulate", "Integrate a model and write the trajectory");
    simulate->add_option("--model", opt.model_path, "Model JSON")->required();
    auto *rho = simulate->add_option("--rho0", opt.rho0, "Product state, one ket per site from 0,1,+,-,i+,i-");
    simulate->add_option("--rho0-file", opt.rho0_file, "Density matrix JSON {real, imag}")->excludes(rho);
    simulate->add_option("--times", opt.times, "Time grid start:stop:step");
    simulate->add_option("--integrator", opt.integrator, "expm or rk4")->check(CLI::IsMember({"expm", "rk4"}));
    simulate->add_option("--step", opt.step, "Step size for rk4")->check(CLI::PositiveNumber);
    add_out(simulate, {"csv"});

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", opt.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--n", opt.range, "Chain sizes, e.g. 2..12");
    verify->add_option("--seed", opt.seed, "Seed for randomized suites");
    add_out(verify, {"text"});

    auto *chain = app.add_subcommand("chain", "Closed-form accessible set of Z..Z X_m or Z..Z Y_m on the chain");
    chain->add_option("--n", opt.n, "Chain length")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    chain->add_option("--m", opt.m, "Seed site (1-based)");
    chain->add_option("--axis", opt.axis, "X or Y")->check(CLI::IsMember({"X", "Y"}));
    add_out(chain, {"json", "text"});

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (gen->parsed()) return cmd_gen(opt);
        if (graph->parsed()) return cmd_graph(opt);
        if (model->parsed()) return cmd_model(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (chain->parsed()) return cmd_chain(opt);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error &e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    }
    return kExitInput;
}
