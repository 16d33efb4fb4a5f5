// Copyright 2026 The tricorr Authors
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

// Command-line front end: prepare, classify, canonicalize, entanglement,
// batch and report.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tricorr/canonical.hpp"
#include "tricorr/circuits.hpp"
#include "tricorr/classify.hpp"
#include "tricorr/entanglement.hpp"
#include "tricorr/error.hpp"
#include "tricorr/experiment.hpp"
#include "tricorr/io.hpp"
#include "tricorr/noise.hpp"
#include "tricorr/states.hpp"

namespace {

using namespace tricorr;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnclassified = 2;

struct ToleranceFlags {
    bool exact = false;
    bool noisy = false;
    std::optional<double> rank_tol;

    void attach(CLI::App *cmd) {
        auto *e = cmd->add_flag("--exact", exact, "Exact-arithmetic tolerances (default)");
        auto *n = cmd->add_flag("--noisy", noisy, "Experimental tolerances (rank threshold 0.09)");
        e->excludes(n);
        cmd->add_option("--rank-tol", rank_tol, "Singular values at or below this count as zero")
            ->check(CLI::PositiveNumber);
    }

    ToleranceConfig resolve() const {
        ToleranceConfig t = noisy ? ToleranceConfig::noisy() : ToleranceConfig::exact();
        if (rank_tol) {
            t.rank_threshold = *rank_tol;
            t.exact_threshold = std::min(t.exact_threshold, *rank_tol);
        }
        t.validate();
        return t;
    }
};

struct NoiseFlags {
    double epsilon = 1.0;
    double mixing = 0.0;
    std::optional<double> fidelity;
    double sigma = 0.0;

    void attach(CLI::App *cmd) {
        cmd->add_option("--epsilon", epsilon, "Pseudo-pure polarization")->check(CLI::Range(0.0, 1.0));
        auto *m = cmd->add_option("--mixing", mixing, "Depolarizing weight")->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--fidelity", fidelity, "Depolarize to this fidelity instead of --mixing")
            ->excludes(m);
        cmd->add_option("--sigma", sigma, "Gaussian noise on each observable")
            ->check(CLI::NonNegativeNumber);
    }

    NoiseConfig resolve(std::uint64_t seed) const {
        NoiseConfig n{epsilon, mixing, sigma, seed};
        if (fidelity) {
            n.mixing = mix_to_fidelity(PureState{}, *fidelity).mixing;
        }
        n.validate();
        return n;
    }
};

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

std::string read_input(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    return read_text_file(path);
}

StateClass require_class(const std::string &name) {
    const auto c = parse_state_class(name);
    if (!c) {
        throw InvalidArgument("unknown state class \"" + name + "\"");
    }
    return *c;
}

CanonicalForm parse_canonical(const std::vector<std::string> &items) {
    CanonicalForm f;
    f.a = {0.0, 0.0, 0.0, 0.0, 0.0};
    const std::map<std::string, double *> slots{{"a0", &f.a[0]}, {"a1", &f.a[1]}, {"a2", &f.a[2]},
                                                {"a3", &f.a[3]}, {"a4", &f.a[4]}, {"theta", &f.theta}};
    for (const auto &item : items) {
        const auto eq = item.find('=');
        const auto it = eq == std::string::npos ? slots.end() : slots.find(item.substr(0, eq));
        if (it == slots.end()) {
            throw InvalidArgument("--canonical expects a0..a4=value or theta=value, got \"" + item + "\"");
        }
        try {
            *it->second = std::stod(item.substr(eq + 1));
        } catch (const std::exception &) {
            throw InvalidArgument("--canonical: bad number in \"" + item + "\"");
        }
    }
    f.validate(1e-6);
    return f;
}

int cmd_prepare(const std::string &cls, const std::vector<std::string> &canonical, bool random,
                std::uint64_t seed, bool via_circuit, const std::string &output, bool json) {
    if (cls.empty() == canonical.empty()) {
        throw InvalidArgument("give exactly one of --class and --canonical");
    }
    std::optional<CircuitProvenance> prov;
    PureState psi;
    if (!canonical.empty()) {
        if (via_circuit || random) {
            throw InvalidArgument("--via-circuit and --random need --class");
        }
        psi = from_canonical(parse_canonical(canonical));
    } else {
        const StateClass c = require_class(cls);
        if (random) {
            if (via_circuit) {
                throw InvalidArgument("--via-circuit prepares the standard states only");
            }
            psi = random_state(c, seed);
        } else if (via_circuit) {
            const Circuit circuit = preparation_circuit(c);
            psi = apply(circuit, PureState{});
            const double f = fidelity(DensityOperator::from_pure(psi),
                                      DensityOperator::from_pure(standard_state(c)));
            prov = CircuitProvenance{circuit, f};
        } else {
            psi = standard_state(c);
        }
    }
    emit(format_state(psi, prov), output);
    if (prov) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f", prov->fidelity_to_direct);
        if (json) {
            std::cerr << "{\"schema\":\"tricorr/1\",\"fidelity_to_direct\":" << buf << "}\n";
        } else {
            std::cerr << "circuit fidelity to direct state: " << buf << "\n";
        }
    }
    return kExitOk;
}

int cmd_classify(const std::string &input, const ToleranceConfig &tol, bool renormalize) {
    const std::string text = read_input(input);
    Classification c;
    EntanglementReport e;
    if (detect_document(text) == DocumentKind::State) {
        const PureState psi = parse_state(text, renormalize).state;
        c = classify_state(psi, tol);
        e = concurrence_oracle(psi);
    } else {
        const ObservableSet13 obs = parse_observables(text);
        c = classify_observables(obs, tol);
        e = concurrence_from_observables(obs);
    }
    std::cout << format_classification(c, tol, e);
    return c.label == ClassLabel::Unclassified ? kExitUnclassified : kExitOk;
}

int cmd_canonicalize(const std::string &input, bool renormalize) {
    const PureState psi = parse_state(read_input(input), renormalize).state;
    std::cout << format_canonical(canonicalize(psi));
    return kExitOk;
}

int cmd_entanglement(const std::string &input, bool renormalize, const std::string &claim, Mode mode) {
    const std::string text = read_input(input);
    const EntanglementReport e = detect_document(text) == DocumentKind::State
                                     ? concurrence_oracle(parse_state(text, renormalize).state)
                                     : concurrence_from_observables(parse_observables(text));
    std::optional<BoundCheck> bound;
    if (!claim.empty()) {
        const auto label = parse_class_label(claim);
        if (!label) {
            throw InvalidArgument("unknown class label \"" + claim + "\"");
        }
        bound = bound_check(e, *label, mode);
    }
    std::cout << format_entanglement(e, bound);
    return bound && !bound->pass ? kExitError : kExitOk;
}

int cmd_batch(BatchConfig cfg, const std::string &output, bool json, unsigned threads) {
    const BatchResult r = run_batch(cfg, threads);
    emit(batch_csv(cfg, r), output);
    if (output.empty() || output == "-") {
        return kExitOk;
    }
    if (json) {
        std::cout << "{\"schema\":\"tricorr/1\",\"agree\":" << r.agreements
                  << ",\"total\":" << r.rows.size() << ",\"accuracy\":" << r.accuracy() << "}\n";
    } else {
        std::cout << r.agreements << "/" << r.rows.size() << " labels agree with the oracle\n";
    }
    return kExitOk;
}

int cmd_report(const std::vector<std::string> &files, const std::vector<std::string> &classes,
               const NoiseConfig &noise, bool renormalize, const std::string &output) {
    std::vector<ReportInput> inputs;
    for (const auto &c : classes) {
        const StateClass sc = require_class(c);
        inputs.push_back({to_string(sc), standard_state(sc)});
    }
    for (const auto &f : files) {
        inputs.push_back({f, parse_state(read_text_file(f), renormalize).state});
    }
    if (inputs.empty()) {
        throw InvalidArgument("report: give state files or --classes");
    }
    emit(report_csv(noise, run_report(inputs, noise)), output);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Three-qubit entanglement classification from correlation-tensor ranks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    bool renormalize = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", json, "Machine-readable summaries for prepare, batch and report");
    app.add_flag("--renormalize", renormalize, "Accept state files whose norm is off and rescale");
    app.add_option("--seed", seed, "Seed for sampling and noise");

    // prepare
    auto *prepare = app.add_subcommand("prepare", "Write a state file");
    std::string p_class;
    std::vector<std::string> p_canonical;
    bool p_random = false;
    bool p_via_circuit = false;
    std::string p_output;
    prepare->add_option("--class", p_class, "GHZ, W, BS-1, BS-2, BS-3, SEP or HAAR (with --random)");
    prepare->add_option("--canonical", p_canonical, "a0=..,a1=..,..,theta=..")->delimiter(',');
    prepare->add_flag("--random", p_random, "Sample a random member of the class using --seed");
    prepare->add_flag("--via-circuit", p_via_circuit, "Build the state with its preparation circuit");
    prepare->add_option("-o,--output", p_output, "Output path (default stdout)");

    // classify
    auto *classify = app.add_subcommand("classify", "Classify a state or observables file");
    std::string c_input;
    ToleranceFlags c_tol;
    classify->add_option("input", c_input, "State or observables JSON ('-' for stdin)")->required();
    c_tol.attach(classify);

    auto *canon = app.add_subcommand("canonicalize", "Local-unitary canonical form of a state");
    std::string k_input;
    canon->add_option("input", k_input, "State JSON")->required();

    auto *ent = app.add_subcommand("entanglement", "Concurrences and global entanglement");
    std::string e_input;
    std::string e_claim;
    ToleranceFlags e_tol;
    ent->add_option("input", e_input, "State or observables JSON")->required();
    ent->add_option("--claim", e_claim, "Check the bound implied by this class label");
    e_tol.attach(ent);

    auto *batch = app.add_subcommand("batch", "Random-state experiment, CSV output");
    std::string b_config;
    std::string b_output;
    int b_per_class = 20;
    std::vector<std::string> b_classes;
    unsigned b_threads = 0;
    ToleranceFlags b_tol;
    NoiseFlags b_noise;
    batch->add_option("--config", b_config, "Batch config JSON; flags below are ignored when set");
    batch->add_option("-o,--output", b_output, "CSV path (default stdout)");
    batch->add_option("--per-class", b_per_class, "States per class")->check(CLI::PositiveNumber);
    batch->add_option("--classes", b_classes, "Comma-separated class list")->delimiter(',');
    batch->add_option("--threads", b_threads, "Worker threads (0 = all cores)");
    b_tol.attach(batch);
    b_noise.attach(batch);

    auto *report = app.add_subcommand("report", "Theoretical vs noisy global entanglement, CSV output");
    std::vector<std::string> r_files;
    std::vector<std::string> r_classes;
    std::string r_output;
    NoiseFlags r_noise;
    report->add_option("inputs", r_files, "State files");
    report->add_option("--classes", r_classes, "Standard states to include")->delimiter(',');
    report->add_option("-o,--output", r_output, "CSV path (default stdout)");
    r_noise.attach(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (prepare->parsed()) {
            return cmd_prepare(p_class, p_canonical, p_random, seed, p_via_circuit, p_output, json);
        }
        if (classify->parsed()) {
            return cmd_classify(c_input, c_tol.resolve(), renormalize);
        }
        if (canon->parsed()) {
            return cmd_canonicalize(k_input, renormalize);
        }
        if (ent->parsed()) {
            return cmd_entanglement(e_input, renormalize, e_claim, e_tol.resolve().mode);
        }
        if (batch->parsed()) {
            BatchConfig cfg;
            if (!b_config.empty()) {
                cfg = parse_batch_config(read_text_file(b_config));
            } else {
                cfg.per_class = b_per_class;
                if (!b_classes.empty()) {
                    cfg.classes.clear();
                    for (const auto &c : b_classes) {
                        cfg.classes.push_back(require_class(c));
                    }
                }
                cfg.seed = seed;
                cfg.noise = b_noise.resolve(seed);
                cfg.tolerances = b_tol.resolve();
            }
            return cmd_batch(cfg, b_output, json, b_threads);
        }
        if (report->parsed()) {
            return cmd_report(r_files, r_classes, r_noise.resolve(seed), renormalize, r_output);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
