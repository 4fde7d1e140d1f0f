// irssec - secrecy optimization for IRS-assisted UAV links
// Copyright (C) 2026 The irssec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: single runs, the two parameter sweeps and the oracle check.
// Exit codes: 0 success, 2 usage or configuration error, 1 failed oracle check.

#include "irssec/config.hpp"
#include "irssec/csv.hpp"
#include "irssec/montecarlo.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <list>
#include <memory>
#include <string>
#include <vector>

using namespace irssec;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_oracle_failed = 1;
    constexpr int exit_usage = 2;

    // Every flag maps onto one ScenarioConfig field and is applied only when given,
    // after the subcommand defaults and the --config file.
    class FieldFlags
    {
    public:
        template <typename T, typename Access>
        void add(CLI::App *app, const std::string &flag, const std::string &help, const ScenarioConfig &defaults,
                 Access access)
        {
            ScenarioConfig copy = defaults;
            auto value = std::make_shared<T>(access(copy));
            CLI::Option *opt = app->add_option(flag, *value, help)->capture_default_str();
            bindings_.push_back({opt, [value, access](ScenarioConfig &c) { access(c) = *value; }});
        }

        void apply(ScenarioConfig &cfg) const
        {
            for (const auto &b : bindings_)
                if (b.option->count() > 0)
                    b.assign(cfg);
        }

    private:
        struct Binding
        {
            CLI::Option *option;
            std::function<void(ScenarioConfig &)> assign;
        };
        std::vector<Binding> bindings_;
    };

    struct Command
    {
        CLI::App *app = nullptr;
        ScenarioConfig defaults;
        FieldFlags flags;
        std::string config_path;
        std::string out = "-";
        std::size_t jobs = 1;
        bool verbose_trace = false;

        ScenarioConfig resolve() const
        {
            ScenarioConfig cfg = defaults;
            if (!config_path.empty())
                cfg = load_config(config_path, cfg);
            flags.apply(cfg);
            cfg.validate();
            return cfg;
        }
    };

    void add_scenario_flags(Command &cmd, bool with_m_elements, bool with_trials)
    {
        auto *app = cmd.app;
        const auto &d = cmd.defaults;
        app->add_option("--config", cmd.config_path, "YAML scenario file (flags override its values)");
        app->add_option("--jobs", cmd.jobs, "Worker threads; output does not depend on it")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);

        cmd.flags.add<std::uint64_t>(app, "--seed", "Master RNG seed (master_seed)", d,
                                     [](ScenarioConfig &c) -> auto & { return c.master_seed; });
        if (with_trials)
            cmd.flags.add<std::size_t>(app, "--trials", "Monte Carlo trials (trials)", d,
                                       [](ScenarioConfig &c) -> auto & { return c.trials; });
        if (with_m_elements)
            cmd.flags.add<std::size_t>(app, "--m-elements", "IRS reflecting elements M (m_elements)", d,
                                       [](ScenarioConfig &c) -> auto & { return c.m_elements; });
        cmd.flags.add<std::size_t>(app, "--k-eves", "Non-colluding eavesdroppers K (k_eves)", d,
                                   [](ScenarioConfig &c) -> auto & { return c.k_eves; });
        cmd.flags.add<double>(app, "--power-max", "UAV transmit power budget in W (power_max)", d,
                              [](ScenarioConfig &c) -> auto & { return c.power_max; });
        cmd.flags.add<double>(app, "--pathloss-exponent", "Path-loss exponent (fading.pathloss_exponent)", d,
                              [](ScenarioConfig &c) -> auto & { return c.fading.pathloss_exponent; });
        cmd.flags.add<double>(app, "--noise-variance", "Noise variance in W (fading.noise_variance)", d,
                              [](ScenarioConfig &c) -> auto & { return c.fading.noise_variance; });
        cmd.flags.add<double>(app, "--reference-gain", "Path-loss gain at 1 m (fading.reference_gain)", d,
                              [](ScenarioConfig &c) -> auto & { return c.fading.reference_gain; });
        cmd.flags.add<double>(app, "--uav-height", "UAV altitude in m (topology.uav z)", d,
                              [](ScenarioConfig &c) -> auto & { return c.topology.uav.z; });
        cmd.flags.add<std::size_t>(app, "--restarts", "Random phase restarts (optimizer.restarts)", d,
                                   [](ScenarioConfig &c) -> auto & { return c.optimizer.restarts; });
        cmd.flags.add<std::size_t>(app, "--max-outer-iters", "Alternation rounds (optimizer.max_outer_iters)", d,
                                   [](ScenarioConfig &c) -> auto & { return c.optimizer.max_outer_iters; });
        cmd.flags.add<std::size_t>(app, "--max-inner-iters", "Gradient steps per phase block (optimizer.max_inner_iters)",
                                   d, [](ScenarioConfig &c) -> auto & { return c.optimizer.max_inner_iters; });
        cmd.flags.add<double>(app, "--step-size", "Initial phase step in rad (optimizer.step_size)", d,
                              [](ScenarioConfig &c) -> auto & { return c.optimizer.step_size; });
        cmd.flags.add<double>(app, "--tol", "Relative improvement stop (optimizer.tol)", d,
                              [](ScenarioConfig &c) -> auto & { return c.optimizer.tol; });
        cmd.flags.add<bool>(app, "--optimize-amplitudes", "Optimize amplitudes in [0,1] (optimizer.optimize_amplitudes)",
                            d, [](ScenarioConfig &c) -> auto & { return c.optimizer.optimize_amplitudes; });
        cmd.flags.add<double>(app, "--smoothing-temperature",
                              "Log-sum-exp temperature over eve rates, 0 = hard max (optimizer.smoothing_temperature)",
                              d, [](ScenarioConfig &c) -> auto & { return c.optimizer.smoothing_temperature; });
    }

    void add_output_flags(Command &cmd, bool with_trace)
    {
        cmd.app->add_option("--out", cmd.out, "CSV output path, '-' for stdout")->capture_default_str();
        if (with_trace)
            cmd.app->add_flag("--verbose-trace", cmd.verbose_trace,
                              "Also write per-iteration optimizer objectives to <out>.trace.csv");
    }

    // Opens --out, or returns std::cout for "-".
    class Output
    {
    public:
        explicit Output(const std::string &path)
        {
            if (path != "-")
            {
                file_.open(path);
                if (!file_)
                    throw ConfigError("--out", "cannot write '" + path + "'");
            }
        }
        std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }
        // Human-readable summaries go to stderr when the CSV occupies stdout.
        std::ostream &log() { return file_.is_open() ? std::cout : std::cerr; }

    private:
        std::ofstream file_;
    };

    int run_single(const Command &cmd)
    {
        const auto cfg = cmd.resolve();
        if (cmd.verbose_trace && cmd.out == "-")
            throw ConfigError("--verbose-trace", "requires --out <file>");
        const auto trials = run_trials(cfg, all_baselines, cmd.jobs, cmd.verbose_trace);
        Output out(cmd.out);
        csv::write_trials(out.stream(), trials);
        if (cmd.verbose_trace)
        {
            std::ofstream trace(cmd.out + ".trace.csv");
            if (!trace)
                throw ConfigError("--out", "cannot write trace file");
            csv::write_traces(trace, trials);
        }
        for (std::size_t j = 0; j < all_baselines.size(); ++j)
        {
            std::vector<double> values;
            values.reserve(trials.size());
            for (const auto &t : trials)
                values.push_back(t.outcomes[j].secrecy_capacity);
            const auto s = summarize(values);
            out.log() << fmt::format("{:<14} mean secrecy {} +/- {} bits/s/Hz over {} trials (zero fraction {})\n",
                                     to_string(all_baselines[j]), csv::number(s.mean), csv::number(s.stderr_mean),
                                     s.trials, csv::number(s.zero_fraction));
        }
        return exit_ok;
    }

    int run_sweep_command(const Command &cmd, SweptParameter swept, const std::vector<double> &values)
    {
        const auto cfg = cmd.resolve();
        SweepSpec spec;
        spec.swept = swept;
        spec.values = values;
        spec.trials = cfg.trials;
        spec.validate();
        const auto result = run_sweep(cfg, spec, cmd.jobs);
        Output out(cmd.out);
        csv::write_sweep(out.stream(), result);
        for (std::size_t i = 0; i < result.values.size(); ++i)
        {
            const auto &opt = result.row(i, Baseline::optimized_irs).stats;
            const auto &base = result.row(i, Baseline::no_irs).stats;
            out.log() << fmt::format("{} = {}: optimized_irs {} +/- {}, no_irs {} +/- {}\n",
                                     swept == SweptParameter::power_max ? "power_max" : "m_elements",
                                     csv::number(result.values[i]), csv::number(opt.mean),
                                     csv::number(opt.stderr_mean), csv::number(base.mean),
                                     csv::number(base.stderr_mean));
        }
        return exit_ok;
    }

    struct OracleOptions
    {
        std::size_t instances = 100;
        std::size_t levels = 64;
    };

    int run_oracle(const Command &cmd, const OracleOptions &opts)
    {
        const auto cfg = cmd.resolve();
        if (cfg.m_elements > 3)
            throw ConfigError("--m", "oracle restricted to desk scale (m <= 3)");
        if (opts.levels < 2)
            throw ConfigError("--levels", "must be >= 2");
        const auto report = run_oracle_check(opts.instances, cfg.m_elements, cfg.k_eves, opts.levels, cfg.master_seed,
                                             cfg.fading, cfg.solver(), cmd.jobs);
        Output out(cmd.out);
        csv::write_oracle(out.stream(), report);
        for (const auto &r : report.rows)
            out.log() << fmt::format("instance {}: achieved {} oracle {} ratio {} {}\n", r.instance,
                                     csv::number(r.achieved), csv::number(r.oracle), csv::number(r.ratio),
                                     r.pass ? "pass" : "FAIL");
        const bool ok = report.pass_fraction >= 0.95;
        out.log() << fmt::format("pass fraction {} at ratio threshold {} (required 0.95): {}\n",
                                 csv::number(report.pass_fraction), csv::number(report.threshold),
                                 ok ? "PASS" : "FAIL");
        return ok ? exit_ok : exit_oracle_failed;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy capacity of IRS-assisted UAV-to-vehicle links with non-colluding eavesdroppers.\n"
                 "Defaults: transmit power 3 W, 10 IRS elements, 8 eves, path-loss exponent 3, "
                 "UAV height 80 m, noise variance 0.01, 10000 trials.",
                 "irssec"};
    app.require_subcommand(1);

    std::list<Command> commands;
    auto make = [&](const std::string &name, const std::string &desc, ScenarioConfig defaults) -> Command & {
        auto &cmd = commands.emplace_back();
        cmd.defaults = std::move(defaults);
        cmd.app = app.add_subcommand(name, desc);
        return cmd;
    };

    auto &single = make("single", "Paired trials of every baseline at one operating point", ScenarioConfig{});
    add_scenario_flags(single, true, true);
    add_output_flags(single, true);

    ScenarioConfig power_defaults;
    power_defaults.m_elements = 10;
    power_defaults.k_eves = 3;
    auto &power = make("power-sweep", "Secrecy vs transmit power budget (M = 10, K = 3 by default)", power_defaults);
    std::vector<double> powers{0.5, 1.0, 2.0, 3.0, 4.0};
    power.app->add_option("--powers", powers, "Strictly increasing power budgets in W")
        ->delimiter(',')
        ->capture_default_str();
    add_scenario_flags(power, true, true);
    add_output_flags(power, false);

    ScenarioConfig element_defaults;
    element_defaults.power_max = 3.0;
    element_defaults.k_eves = 3;
    auto &elements = make("elements-sweep", "Secrecy vs IRS size (P = 3 W, K = 3 by default)", element_defaults);
    std::vector<double> element_counts{0, 2, 4, 6, 8, 10};
    elements.app->add_option("--elements", element_counts, "Strictly increasing element counts")
        ->delimiter(',')
        ->capture_default_str();
    add_scenario_flags(elements, false, true);
    add_output_flags(elements, false);

    ScenarioConfig oracle_defaults;
    oracle_defaults.m_elements = 2;
    oracle_defaults.k_eves = 1;
    auto &oracle = make("oracle-check", "Optimizer vs exhaustive phase grid on random unit-gain instances",
                        oracle_defaults);
    OracleOptions oracle_opts;
    oracle.app->add_option("--instances", oracle_opts.instances, "Random instances")->capture_default_str();
    oracle.app->add_option("--levels", oracle_opts.levels, "Grid levels per phase")->capture_default_str();
    oracle.flags.add<std::size_t>(oracle.app, "--m", "IRS elements M, at most 3 (m_elements)", oracle.defaults,
                                  [](ScenarioConfig &c) -> auto & { return c.m_elements; });
    add_scenario_flags(oracle, false, false);
    add_output_flags(oracle, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (single.app->parsed())
            return run_single(single);
        if (power.app->parsed())
            return run_sweep_command(power, SweptParameter::power_max, powers);
        if (elements.app->parsed())
            return run_sweep_command(elements, SweptParameter::m_elements, element_counts);
        if (oracle.app->parsed())
            return run_oracle(oracle, oracle_opts);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
