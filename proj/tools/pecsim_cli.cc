// Copyright 2026 The pecsim Authors
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

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pecsim/bias.h"
#include "pecsim/channel.h"
#include "pecsim/errors.h"
#include "pecsim/experiments.h"
#include "pecsim/implementability.h"
#include "pecsim/io.h"
#include "pecsim/measures.h"
#include "pecsim/noise_map.h"
#include "pecsim/sampler.h"

using namespace pecsim;

namespace {

struct Globals {
    uint64_t seed = 42;
    std::string out;
    std::string format;
    std::string config;
};

void emit(const Globals &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(g.out, text);
    }
}

void emit_json(const Globals &g, const json &j) {
    emit(g, j.dump(2) + "\n");
}

bool want_csv(const Globals &g, bool default_csv) {
    if (g.format.empty()) {
        return default_csv;
    }
    return g.format == "csv";
}

std::vector<double> parse_reals(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad number '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("bad number '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

NoiseMap load_noise_or_identity(const std::string &path, size_t n) {
    if (path.empty()) {
        return NoiseMap::identity(n);
    }
    auto m = noise_map_from_json(read_json_file(path));
    if (m.num_qubits() != n) {
        throw std::invalid_argument("noise map and error channel have different qubit counts");
    }
    return m;
}

// Experiment settings: defaults, then the config file, then any flag given explicitly.
struct ExperimentFlags {
    ExperimentConfig values;
    std::vector<std::pair<CLI::Option *, std::function<void(ExperimentConfig &)>>> overrides;

    template <typename T>
    CLI::Option *add(CLI::App *app, const std::string &name, T ExperimentConfig::*field, const std::string &help) {
        auto holder = std::make_shared<T>(values.*field);
        auto *opt = app->add_option(name, *holder, help)->default_val(values.*field);
        overrides.push_back({opt, [holder, field](ExperimentConfig &c) {
                                 c.*field = *holder;
                             }});
        return opt;
    }

    ExperimentConfig resolve(const Globals &g, CLI::App &root) const {
        ExperimentConfig c;
        if (!g.config.empty()) {
            c = config_from_json(read_json_file(g.config));
        }
        for (const auto &[opt, apply] : overrides) {
            if (opt->count() > 0) {
                apply(c);
            }
        }
        if (root.get_option("--seed")->count() > 0) {
            c.master_seed = g.seed;
        }
        if (!g.out.empty()) {
            c.out = g.out;
        }
        if (!g.format.empty()) {
            c.format = g.format;
        }
        c.validate();
        return c;
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"pecsim: probabilistic error cancellation with noisy cancellation gates"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Master seed");
    app.add_option("--out", g.out, "Output path (default stdout)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--config", g.config, "Experiment config file (JSON)")->check(CLI::ExistingFile);

    // channel
    auto *channel = app.add_subcommand("channel", "Inspect or transform a Pauli channel");
    std::string channel_action, channel_in, channel_in2;
    channel->add_option("action", channel_action, "eig | invert | compose | info")
        ->required()
        ->check(CLI::IsMember({"eig", "invert", "compose", "info"}));
    channel->add_option("--in", channel_in, "Channel file")->required();
    channel->add_option("--in2", channel_in2, "Second channel file (compose)");

    // decompose
    auto *decompose = app.add_subcommand("decompose", "Quasiprobability program cancelling an error with noisy gates");
    std::string dec_error, dec_noise;
    decompose->add_option("--error", dec_error, "Error channel file")->required();
    decompose->add_option("--noise", dec_noise, "Noise map file (default: noiseless gates)");

    // bias
    auto *bias = app.add_subcommand("bias", "Bias report for one cancellation scenario");
    std::string bias_error, bias_noise, bias_method = "separate";
    size_t bias_layers = 1;
    bias->add_option("--error", bias_error, "Error channel file")->required();
    bias->add_option("--noise", bias_noise, "Noise map file")->required();
    bias->add_option("--layers", bias_layers, "Layer count")->check(CLI::PositiveNumber);
    bias->add_option("--method", bias_method, "separate | direct")->check(CLI::IsMember({"separate", "direct"}));

    // fig3 / fig4 / invertibility
    auto *fig3 = app.add_subcommand("fig3", "Noisy-cancellation bias study");
    ExperimentFlags fig3_flags;
    fig3_flags.add(fig3, "--n", &ExperimentConfig::num_qubits, "Qubit count");
    fig3_flags.add(fig3, "--layers", &ExperimentConfig::layers, "Maximum layer count");
    fig3_flags.add(fig3, "--rate", &ExperimentConfig::rate, "Single-layer error rate");
    fig3_flags.add(fig3, "--seeds", &ExperimentConfig::seeds, "Number of random scenarios");
    fig3_flags.add(fig3, "--method", &ExperimentConfig::method, "separate | direct | both");

    auto *fig4 = app.add_subcommand("fig4", "Under- and over-mitigation bias study");
    ExperimentFlags fig4_flags;
    fig4_flags.add(fig4, "--n", &ExperimentConfig::num_qubits, "Qubit count");
    fig4_flags.add(fig4, "--layers", &ExperimentConfig::layers, "Maximum layer count");
    fig4_flags.add(fig4, "--residual", &ExperimentConfig::residual, "Single-layer mitigation residual");
    fig4_flags.add(fig4, "--seeds", &ExperimentConfig::seeds, "Number of random scenarios");

    auto *inv = app.add_subcommand("invertibility", "Finite-shot invertibility criterion study");
    ExperimentFlags inv_flags;
    inv_flags.add(inv, "--n", &ExperimentConfig::num_qubits, "Qubit count");
    inv_flags.add(inv, "--rate", &ExperimentConfig::rate, "Gate error rate of the true map");
    inv_flags.add(inv, "--seeds", &ExperimentConfig::seeds, "Estimates per grid point");
    inv_flags.add(inv, "--delta", &ExperimentConfig::delta, "Failure probability");
    inv_flags.add(inv, "--shots", &ExperimentConfig::shot_grid, "Shot grid")->delimiter(',');

    // sample
    auto *sample = app.add_subcommand("sample", "Monte Carlo PEC estimate of a Pauli observable");
    std::string smp_error, smp_noise, smp_observable;
    uint64_t smp_shots = 100000;
    size_t smp_seeds = 1;
    double smp_ideal = 1;
    sample->add_option("--error", smp_error, "Error channel file")->required();
    sample->add_option("--noise", smp_noise, "Noise map of the realized gates");
    sample->add_option("--observable", smp_observable, "Pauli label (default Z...Z)");
    sample->add_option("--ideal", smp_ideal, "Ideal expectation of the observable")->default_val(1.0);
    sample->add_option("--shots", smp_shots, "Shots per estimate")->check(CLI::PositiveNumber);
    sample->add_option("--seeds", smp_seeds, "Number of independent estimates")->check(CLI::PositiveNumber);

    // implementability
    auto *impl = app.add_subcommand("implementability", "Implementability LP over a finite free set");
    std::string impl_free, impl_target;
    bool impl_span = false;
    impl->add_option("--freeset", impl_free, "Free set file")->required();
    impl->add_option("--target", impl_target, "Comma-separated target vector")->required();
    impl->add_flag("--span", impl_span, "Use the linear span (gauge) instead of the affine hull");

    // measures
    auto *meas = app.add_subcommand("measures", "Dense operator measures");
    std::string meas_action, meas_in;
    std::vector<size_t> meas_sub;
    meas->add_option("action", meas_action, "trace-norm | negativity | purity")
        ->required()
        ->check(CLI::IsMember({"trace-norm", "negativity", "purity"}));
    meas->add_option("--in", meas_in, "Operator file")->required();
    meas->add_option("--subsystem", meas_sub, "Qubits of subsystem B (default: second half)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (channel->parsed()) {
            auto c = channel_from_json(read_json_file(channel_in));
            if (channel_action == "eig") {
                auto chi = eigenvalues(c);
                if (want_csv(g, false)) {
                    std::string text = "pauli,eigenvalue\n";
                    for (size_t k = 0; k < chi.size(); k++) {
                        text += PauliString(c.num_qubits(), k).str() + "," + format_real(chi[k]) + "\n";
                    }
                    emit(g, text);
                } else {
                    emit_json(g, {{"n", c.num_qubits()}, {"eigenvalues", chi}});
                }
            } else if (channel_action == "invert") {
                emit_json(g, channel_to_json(inverse(c)));
            } else if (channel_action == "compose") {
                if (channel_in2.empty()) {
                    throw std::invalid_argument("compose needs --in2");
                }
                emit_json(g, channel_to_json(compose(c, channel_from_json(read_json_file(channel_in2)))));
            } else {
                double p = p_pauli(c);
                emit_json(g, {{"n", c.num_qubits()},
                              {"cptp", is_cptp(c)},
                              {"nu0", identity_component(c)},
                              {"p_Q", p},
                              {"robustness", std::max(0.0, robustness(p))}});
            }
        } else if (decompose->parsed()) {
            auto e = channel_from_json(read_json_file(dec_error));
            auto m = load_noise_or_identity(dec_noise, e.num_qubits());
            auto r = inverse(e);
            auto q = modified_quasiprobability(m, r.coeffs());
            auto program = QuasiProgram::from_dense(e.num_qubits(), q);
            auto realized = compose(apply_noise(m, PauliChannel(e.num_qubits(), q)), e);
            double residual = std::abs(realized[0] - 1);
            for (size_t k = 1; k < realized.dim(); k++) {
                residual = std::max(residual, std::abs(realized[k]));
            }
            json entries = json::array();
            for (const auto &en : program.entries()) {
                entries.push_back({{"gate", PauliString(e.num_qubits(), en.index).str()}, {"quasi", en.quasi}});
            }
            emit_json(g, {{"n", e.num_qubits()},
                          {"q", q},
                          {"entries", entries},
                          {"Z", program.cost()},
                          {"residual", residual}});
        } else if (bias->parsed()) {
            auto e = channel_from_json(read_json_file(bias_error));
            auto m = load_noise_or_identity(bias_noise, e.num_qubits());
            auto rep = analyze_cancellation(e, m, bias_layers, parse_method(bias_method));
            emit_json(g, bias_report_to_json(rep));
        } else if (fig3->parsed()) {
            auto c = fig3_flags.resolve(g, app);
            emit(g, run_fig3(c).render(c.format));
        } else if (fig4->parsed()) {
            auto c = fig4_flags.resolve(g, app);
            emit(g, run_fig4(c).render(c.format));
        } else if (inv->parsed()) {
            auto c = inv_flags.resolve(g, app);
            auto study = run_invertibility_study(c);
            emit(g, study.render(c.format));
            for (const auto &[shots, rate] : study.pass_rates()) {
                std::cerr << "N=" << shots << " pass rate " << format_real(rate) << "\n";
            }
        } else if (sample->parsed()) {
            auto e = channel_from_json(read_json_file(smp_error));
            const size_t n = e.num_qubits();
            std::optional<NoiseMap> realized;
            if (!smp_noise.empty()) {
                realized = load_noise_or_identity(smp_noise, n);
            }
            auto r = inverse(e);
            auto program = realized ? QuasiProgram::from_dense(n, modified_quasiprobability(*realized, r.coeffs()))
                                    : quasi_program(r);
            auto obs = smp_observable.empty() ? PauliString(n, pauli_dim(n) - 1)
                                              : PauliString::from_label(smp_observable);
            std::vector<double> ideal(pauli_dim(n), 0);
            ideal[0] = 1;
            ideal[obs.index()] = smp_ideal;
            auto results = run_sampler_study(program, realized, e, ideal, obs, smp_shots, smp_seeds, g.seed);
            if (want_csv(g, true)) {
                std::string text = "observable,mean,stderr,shots,Z,seed\n";
                for (const auto &est : results) {
                    text += est.observable.str() + "," + format_real(est.mean) + "," + format_real(est.std_error) +
                            "," + std::to_string(est.shots) + "," + format_real(est.cost) + "," +
                            std::to_string(est.seed) + "\n";
                }
                emit(g, text);
            } else {
                json arr = json::array();
                for (const auto &est : results) {
                    arr.push_back(estimate_to_json(est));
                }
                emit_json(g, arr);
            }
        } else if (impl->parsed()) {
            auto fs = free_set_from_json(read_json_file(impl_free));
            auto target = parse_reals(impl_target);
            LpOptions opts;
            opts.affine = !impl_span;
            auto rep = implementability_lp(fs, target, opts);
            auto j = lp_report_to_json(rep);
            if (opts.affine) {
                j["robustness"] = std::max(0.0, robustness(rep.p));
            }
            emit_json(g, j);
        } else if (meas->parsed()) {
            auto h = operator_from_json(read_json_file(meas_in));
            json j;
            if (meas_action == "trace-norm") {
                j = {{"trace_norm", trace_norm(h)}};
            } else if (meas_action == "purity") {
                j = {{"purity", purity(h)}};
            } else {
                size_t qubits = 0;
                while ((size_t{1} << qubits) < h.rows()) {
                    qubits++;
                }
                if (meas_sub.empty()) {
                    for (size_t q = qubits / 2; q < qubits; q++) {
                        meas_sub.push_back(q);
                    }
                }
                j = {{"log_negativity", log_negativity(h, meas_sub)}, {"subsystem", meas_sub}};
            }
            emit_json(g, j);
        }
    } catch (const NumericalError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
