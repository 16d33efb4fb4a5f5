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

#include "tricorr/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <set>
#include <thread>

#include "json.hpp"

#include "tricorr/canonical.hpp"
#include "tricorr/entanglement.hpp"
#include "tricorr/error.hpp"
#include "tricorr/io.hpp"
#include "tricorr/rng.hpp"

namespace tricorr {
namespace {

using nlohmann::json;

// Stream tags for derive_seed; states and noise draw from disjoint streams.
constexpr std::uint64_t kStateStream = 0;
constexpr std::uint64_t kNoiseStream = 1;

std::string fmt(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string metadata(const NoiseConfig &noise) {
    return "# epsilon_pps=" + fmt(noise.epsilon_pps) + "\n# mixing=" + fmt(noise.mixing) +
           "\n# sigma_obs=" + fmt(noise.sigma_obs) + "\n# noise_seed=" +
           std::to_string(noise.seed) + "\n";
}

template <typename F>
void parallel_for(std::size_t n, unsigned threads, F &&body) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true)) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

ObservableSet13 rescale(const ObservableSet13 &obs, double factor) {
    auto v = obs.values();
    for (double &x : v) {
        x = std::clamp(x * factor, -1.0, 1.0);
    }
    return ObservableSet13(v);
}

} // namespace

void BatchConfig::validate() const {
    if (per_class < 1) {
        throw InvalidArgument("per_class must be >= 1");
    }
    if (classes.empty()) {
        throw InvalidArgument("class set must not be empty");
    }
    noise.validate();
    tolerances.validate();
    if (!(noise.epsilon_pps > 0.0)) {
        throw InvalidArgument("epsilon_pps must be > 0 for a batch");
    }
}

BatchConfig parse_batch_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("top level: expected an object");
    }
    if (!doc.contains("schema") || doc["schema"] != std::string(kSchema)) {
        throw SchemaError("schema: expected \"" + std::string(kSchema) + "\"");
    }
    const std::set<std::string> top{"schema", "per_class", "classes", "seed", "noise", "tolerances"};
    for (const auto &[k, v] : doc.items()) {
        if (!top.count(k)) {
            throw SchemaError(k + ": unexpected key");
        }
    }
    auto num = [](const json &obj, const char *key, const std::string &where, double fallback) {
        const auto it = obj.find(key);
        if (it == obj.end()) {
            return fallback;
        }
        if (!it->is_number()) {
            throw SchemaError(where + key + ": expected a number");
        }
        return it->get<double>();
    };
    auto seed_of = [](const json &obj, const char *key, const std::string &where, std::uint64_t fallback) {
        const auto it = obj.find(key);
        if (it == obj.end()) {
            return fallback;
        }
        if (!it->is_number_unsigned()) {
            throw SchemaError(where + key + ": expected a non-negative integer");
        }
        return it->get<std::uint64_t>();
    };

    BatchConfig cfg;
    cfg.seed = seed_of(doc, "seed", "", 0);
    cfg.noise.seed = cfg.seed;
    if (const auto it = doc.find("per_class"); it != doc.end()) {
        if (!it->is_number_integer()) {
            throw SchemaError("per_class: expected an integer");
        }
        cfg.per_class = it->get<int>();
    }
    if (const auto it = doc.find("classes"); it != doc.end()) {
        if (!it->is_array()) {
            throw SchemaError("classes: expected an array of class names");
        }
        cfg.classes.clear();
        for (const auto &c : *it) {
            const auto parsed = c.is_string() ? parse_state_class(c.get<std::string>()) : std::nullopt;
            if (!parsed) {
                throw SchemaError("classes: unknown class " + c.dump());
            }
            cfg.classes.push_back(*parsed);
        }
    }
    if (const auto it = doc.find("noise"); it != doc.end()) {
        if (!it->is_object()) {
            throw SchemaError("noise: expected an object");
        }
        for (const auto &[k, v] : it->items()) {
            if (k != "epsilon_pps" && k != "mixing" && k != "sigma_obs" && k != "seed") {
                throw SchemaError("noise." + k + ": unexpected key");
            }
        }
        cfg.noise.epsilon_pps = num(*it, "epsilon_pps", "noise.", cfg.noise.epsilon_pps);
        cfg.noise.mixing = num(*it, "mixing", "noise.", cfg.noise.mixing);
        cfg.noise.sigma_obs = num(*it, "sigma_obs", "noise.", cfg.noise.sigma_obs);
        cfg.noise.seed = seed_of(*it, "seed", "noise.", cfg.noise.seed);
    }
    if (const auto it = doc.find("tolerances"); it != doc.end()) {
        if (!it->is_object()) {
            throw SchemaError("tolerances: expected an object");
        }
        for (const auto &[k, v] : it->items()) {
            if (k != "mode" && k != "rank_threshold" && k != "exact_threshold" && k != "purity_epsilon") {
                throw SchemaError("tolerances." + k + ": unexpected key");
            }
        }
        if (const auto m = it->find("mode"); m != it->end()) {
            if (*m == "exact") {
                cfg.tolerances = ToleranceConfig::exact();
            } else if (*m == "noisy") {
                cfg.tolerances = ToleranceConfig::noisy();
            } else {
                throw SchemaError("tolerances.mode: expected \"exact\" or \"noisy\"");
            }
        }
        auto &t = cfg.tolerances;
        t.rank_threshold = num(*it, "rank_threshold", "tolerances.", t.rank_threshold);
        t.exact_threshold = num(*it, "exact_threshold", "tolerances.", t.exact_threshold);
        t.purity_epsilon = num(*it, "purity_epsilon", "tolerances.", t.purity_epsilon);
    }
    try {
        cfg.validate();
    } catch (const InvalidArgument &e) {
        throw SchemaError(e.what());
    }
    return cfg;
}

Measurement simulate_measurement(const PureState &psi, const NoiseConfig &noise,
                                 std::uint64_t noise_seed) {
    noise.validate();
    if (!(noise.epsilon_pps > 0.0)) {
        throw InvalidArgument("epsilon_pps must be > 0 to measure a signal");
    }
    const CanonicalResult canon = canonicalize(psi);
    const auto &u = canon.local_unitaries;
    const ComplexMatrix full = kron(kron(u[0], u[1]), u[2]);

    const double eps = noise.epsilon_pps;
    ComplexMatrix rho = ComplexMatrix::outer(psi.span());
    rho *= cplx{eps * (1.0 - noise.mixing)};
    const double background = (1.0 - eps * (1.0 - noise.mixing)) / 8.0;
    for (std::size_t i = 0; i < 8; ++i) {
        rho(i, i) += background;
    }
    Measurement out{measure13(full * rho * full.adjoint()), 0.0};
    out.fidelity = fidelity(rho, ComplexMatrix::outer(psi.span()));
    out.observables =
        noisy_observables(rescale(out.observables, 1.0 / eps), noise.sigma_obs, noise_seed);
    return out;
}

double BatchResult::accuracy() const {
    return rows.empty() ? 0.0 : static_cast<double>(agreements) / static_cast<double>(rows.size());
}

BatchResult run_batch(const BatchConfig &cfg, unsigned threads) {
    cfg.validate();
    const std::size_t per = static_cast<std::size_t>(cfg.per_class);
    const std::size_t n = cfg.classes.size() * per;
    BatchResult result;
    result.rows.resize(n);
    const ToleranceConfig oracle_tol = ToleranceConfig::exact();

    parallel_for(n, threads, [&](std::size_t i) {
        BatchRow &row = result.rows[i];
        row.constructed = cfg.classes[i / per];
        row.id = "R" + std::to_string(i + 1);
        const PureState psi = random_state(row.constructed, derive_seed(cfg.seed, 2 * i + kStateStream));
        row.oracle = oracle_classify(psi, oracle_tol);
        const Measurement m = simulate_measurement(psi, cfg.noise, derive_seed(cfg.noise.seed, 2 * i + kNoiseStream));
        row.fidelity = m.fidelity;
        try {
            const Classification c = classify_observables(m.observables, cfg.tolerances);
            row.ranks = c.ranks;
            row.label = c.label;
            row.q_global = concurrence_from_observables(m.observables).q_global;
        } catch (const InconsistentData &e) {
            row.label = ClassLabel::Unclassified;
            row.q_global = std::numeric_limits<double>::quiet_NaN();
            row.error = e.what();
        }
        row.agree = row.label == row.oracle;
    });
    for (const auto &r : result.rows) {
        result.agreements += r.agree ? 1 : 0;
    }
    return result;
}

std::string batch_csv(const BatchConfig &cfg, const BatchResult &result) {
    const auto &t = cfg.tolerances;
    std::string out = "# schema=" + std::string(kSchema) + "\n# seed=" + std::to_string(cfg.seed) +
                      "\n# per_class=" + std::to_string(cfg.per_class) + "\n# mode=" +
                      (t.mode == Mode::Exact ? "exact" : "noisy") + "\n# rank_threshold=" +
                      fmt(t.rank_threshold) + "\n# purity_epsilon=" + fmt(t.purity_epsilon) + "\n" +
                      metadata(cfg.noise);
    out += "id,constructed,fidelity,r1,r2,r3,label,q_global,oracle,agree\n";
    for (const auto &r : result.rows) {
        out += r.id + "," + to_string(r.constructed) + "," + fmt(r.fidelity) + "," +
               std::to_string(r.ranks.r1) + "," + std::to_string(r.ranks.r2) + "," +
               std::to_string(r.ranks.r3) + "," + to_string(r.label) + "," + fmt(r.q_global) +
               "," + to_string(r.oracle) + "," + (r.agree ? "1" : "0") + "\n";
    }
    out += "# summary,agree=" + std::to_string(result.agreements) +
           ",total=" + std::to_string(result.rows.size()) + ",accuracy=" + fmt(result.accuracy()) + "\n";
    return out;
}

std::vector<ReportRow> run_report(const std::vector<ReportInput> &inputs, const NoiseConfig &noise) {
    if (inputs.empty()) {
        throw InvalidArgument("report needs at least one input");
    }
    std::vector<ReportRow> rows;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        ReportRow row{inputs[i].id, concurrence_oracle(inputs[i].state).q_global, 0.0};
        const Measurement m = simulate_measurement(inputs[i].state, noise, derive_seed(noise.seed, i));
        try {
            row.q_noisy = concurrence_from_observables(m.observables).q_global;
        } catch (const InconsistentData &) {
            row.q_noisy = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(row);
    }
    return rows;
}

std::string report_csv(const NoiseConfig &noise, const std::vector<ReportRow> &rows) {
    std::string out = "# schema=" + std::string(kSchema) + "\n" + metadata(noise);
    out += "state_id,q_theory,q_noisy\n";
    for (const auto &r : rows) {
        out += r.id + "," + fmt(r.q_theory) + "," + fmt(r.q_noisy) + "\n";
    }
    return out;
}

} // namespace tricorr
