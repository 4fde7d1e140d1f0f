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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "irssec/csv.hpp"
#include "irssec/montecarlo.hpp"

#include "oracles.hpp"

#include <fmt/format.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace irssec;

namespace
{
    // Tolerances and sizes.
    constexpr std::size_t sweep_trials = 1000;
    constexpr double trend_sigmas = 2.0;
    constexpr double sweep_seconds = 120.0;
    constexpr std::size_t zero_power_trials = 10000;
    constexpr std::size_t rescue_trials = 1000;
    constexpr double rescue_min_fraction = 0.10;
    constexpr double oracle_seconds = 60.0;
    constexpr std::size_t gradient_instances = 100;
    constexpr double gradient_rel_tol = 1e-5;
    constexpr double gradient_fd_step = 1e-6;
    constexpr double eve_tie_gap = 1e-9;
    constexpr std::size_t dominance_trials = 10000;
    constexpr std::size_t fading_draws = 100000;
    constexpr double fading_power_tol = 0.02;
    constexpr double fading_mean_tol = 0.01;

    const std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    const auto workdir = std::filesystem::temp_directory_path() / fmt::format("irssec_acceptance_{}", ::getpid());

    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point t0)
    {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    struct Verdict
    {
        bool pass = false;
        std::string detail;
    };

    double mean(const std::vector<double> &x)
    {
        double s = 0.0;
        for (const double v : x)
            s += v;
        return s / static_cast<double>(x.size());
    }

    double stderr_of(const std::vector<double> &x)
    {
        const double m = mean(x);
        double ss = 0.0;
        for (const double v : x)
            ss += (v - m) * (v - m);
        return std::sqrt(ss / static_cast<double>(x.size() - 1) / static_cast<double>(x.size()));
    }

    // Per-trial linear combination of the samples at several swept values.
    std::vector<double> combine(const std::vector<std::vector<double>> &columns, const std::vector<double> &weights)
    {
        std::vector<double> out(columns[0].size(), 0.0);
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t t = 0; t < out.size(); ++t)
                out[t] += weights[c] * columns[c][t];
        return out;
    }

    std::vector<double> gap(const SweepResult &r, std::size_t v)
    {
        const auto &opt = r.trial_values(v, Baseline::optimized_irs);
        const auto &base = r.trial_values(v, Baseline::no_irs);
        std::vector<double> g(opt.size());
        for (std::size_t t = 0; t < g.size(); ++t)
            g[t] = opt[t] - base[t];
        return g;
    }

    struct TrendChecks
    {
        bool mean_nondecreasing = true;
        bool gap_nondecreasing = true;
        bool concave = true;
        std::string detail;
    };

    TrendChecks check_trends(const SweepResult &r)
    {
        TrendChecks out;
        const auto &x = r.values;
        std::string means = "means";
        for (std::size_t v = 0; v < x.size(); ++v)
            means += fmt::format(" {:.4g}", r.row(v, Baseline::optimized_irs).stats.mean);
        for (std::size_t v = 0; v + 1 < x.size(); ++v)
        {
            const double m0 = r.row(v, Baseline::optimized_irs).stats.mean;
            const double m1 = r.row(v + 1, Baseline::optimized_irs).stats.mean;
            out.mean_nondecreasing = out.mean_nondecreasing && m1 >= m0;

            const auto d = combine({gap(r, v), gap(r, v + 1)}, {-1.0, 1.0});
            out.gap_nondecreasing = out.gap_nondecreasing && mean(d) >= -trend_sigmas * stderr_of(d);
        }
        double worst = -INFINITY;
        for (std::size_t v = 1; v + 1 < x.size(); ++v)
        {
            // Divided second difference, valid on nonuniform grids.
            const double h0 = x[v] - x[v - 1], h1 = x[v + 1] - x[v];
            const std::vector<double> w{2.0 / (h0 * (h0 + h1)), -2.0 / (h0 * h1), 2.0 / (h1 * (h0 + h1))};
            const auto d2 = combine({r.trial_values(v - 1, Baseline::optimized_irs),
                                     r.trial_values(v, Baseline::optimized_irs),
                                     r.trial_values(v + 1, Baseline::optimized_irs)},
                                    w);
            const double se = stderr_of(d2);
            worst = std::max(worst, se > 0.0 ? mean(d2) / se : mean(d2) > 0.0 ? INFINITY : 0.0);
            out.concave = out.concave && mean(d2) <= trend_sigmas * se;
        }
        out.detail = fmt::format("{}; worst second difference {:.3g} SE", means, worst);
        return out;
    }

    ScenarioConfig sweep_scenario()
    {
        ScenarioConfig c;
        c.m_elements = 10;
        c.k_eves = 3;
        c.power_max = 3.0;
        return c;
    }

    Verdict criterion_power_sweep()
    {
        const auto t0 = Clock::now();
        SweepSpec spec;
        spec.swept = SweptParameter::power_max;
        spec.values = {0.5, 1, 2, 3, 4};
        spec.trials = sweep_trials;
        spec.baselines = {Baseline::optimized_irs, Baseline::no_irs};
        const auto r = run_sweep(sweep_scenario(), spec, jobs);
        const double secs = seconds_since(t0);
        const auto t = check_trends(r);
        return {t.mean_nondecreasing && t.gap_nondecreasing && t.concave && secs < sweep_seconds,
                fmt::format("mean nondecreasing {}, gap nondecreasing {}, concave {}; {}; {:.1f} s",
                            t.mean_nondecreasing, t.gap_nondecreasing, t.concave, t.detail, secs)};
    }

    Verdict criterion_elements_sweep()
    {
        const auto t0 = Clock::now();
        SweepSpec spec;
        spec.swept = SweptParameter::m_elements;
        spec.values = {0, 2, 4, 6, 8, 10};
        spec.trials = sweep_trials;
        spec.baselines = {Baseline::optimized_irs, Baseline::no_irs};
        const auto r = run_sweep(sweep_scenario(), spec, jobs);
        const double secs = seconds_since(t0);
        const auto t = check_trends(r);
        const bool m0_exact = r.trial_values(0, Baseline::optimized_irs) == r.trial_values(0, Baseline::no_irs);
        return {t.mean_nondecreasing && t.gap_nondecreasing && m0_exact && secs < sweep_seconds,
                fmt::format("mean nondecreasing {}, M = 0 equals no-IRS {}, gap nondecreasing {}; {}; {:.1f} s",
                            t.mean_nondecreasing, m0_exact, t.gap_nondecreasing, t.detail, secs)};
    }

    Verdict criterion_zero_power()
    {
        ScenarioConfig c;
        c.trials = zero_power_trials;
        const auto trials = run_trials(c, {Baseline::no_irs}, jobs);
        std::size_t blocked = 0, violations = 0;
        for (const auto &t : trials)
        {
            const auto r = draw_trial(c, t.trial_index).realization;
            double best_eve = 0.0;
            for (const auto &h : r.h_de)
                best_eve = std::max(best_eve, std::norm(h));
            if (std::norm(r.h_du) > best_eve)
                continue;
            ++blocked;
            const auto &o = t.at(Baseline::no_irs);
            violations += (o.power != 0.0 || o.secrecy_capacity != 0.0) ? 1 : 0;
        }
        return {violations == 0 && blocked > 0,
                fmt::format("{} of {} trials have a dominant eve, {} violations", blocked, trials.size(), violations)};
    }

    Verdict criterion_rescue()
    {
        auto c = sweep_scenario();
        c.trials = rescue_trials;
        const auto trials = run_trials(c, {Baseline::optimized_irs, Baseline::no_irs}, jobs);
        std::size_t dead = 0, rescued = 0;
        for (const auto &t : trials)
        {
            if (t.at(Baseline::no_irs).secrecy_capacity != 0.0)
                continue;
            ++dead;
            rescued += t.at(Baseline::optimized_irs).secrecy_capacity > 0.0 ? 1 : 0;
        }
        const double fraction = dead ? static_cast<double>(rescued) / static_cast<double>(dead) : 0.0;
        return {fraction >= rescue_min_fraction,
                fmt::format("{} of {} zero-capacity trials rescued ({:.1f}%, required {:.0f}%)", rescued, dead,
                            100.0 * fraction, 100.0 * rescue_min_fraction)};
    }

    int run_cli(const std::string &args, const std::filesystem::path &log)
    {
        const std::string cmd = fmt::format("{} {} > {} 2>&1", IRSSEC_CLI_PATH, args, log.string());
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    // Pass fraction recomputed from the oracle CSV.
    double csv_pass_fraction(const std::filesystem::path &p)
    {
        std::istringstream is(slurp(p));
        std::string line;
        std::getline(is, line);
        std::size_t rows = 0, passes = 0;
        while (std::getline(is, line))
        {
            ++rows;
            passes += line.back() == '1' ? 1 : 0;
        }
        return rows ? static_cast<double>(passes) / static_cast<double>(rows) : 0.0;
    }

    Verdict criterion_oracle()
    {
        const auto t0 = Clock::now();
        const auto two = workdir / "oracle_m2.csv";
        const auto one = workdir / "oracle_m1.csv";
        const int code2 = run_cli(fmt::format("oracle-check --m 2 --levels 64 --instances 100 --jobs {} --out {}",
                                              jobs, two.string()),
                                  workdir / "oracle_m2.log");
        const int code1 = run_cli(fmt::format("oracle-check --m 1 --levels 360 --instances 100 --jobs {} --out {}",
                                              jobs, one.string()),
                                  workdir / "oracle_m1.log");
        const double secs = seconds_since(t0);
        const double f2 = csv_pass_fraction(two), f1 = csv_pass_fraction(one);
        return {code2 == 0 && code1 == 0 && f2 >= 0.95 && f1 == 1.0 && secs < oracle_seconds,
                fmt::format("M = 2 fraction {:.2f} (exit {}), M = 1 fraction {:.2f} (exit {}); {:.1f} s", f2, code2, f1,
                            code1, secs)};
    }

    Verdict criterion_gradient()
    {
        const FadingParams params;
        const double power = 3.0;
        auto rng = derive_stream(2026, 0, StreamPurpose::instance);
        std::size_t checked = 0, excluded = 0, bad = 0;
        double worst = 0.0;
        while (checked + excluded < gradient_instances)
        {
            const auto r = draw_unit_realization(4, 3, rng);
            const auto p = PhaseProfile::random(4, rng);
            auto rates = secrecy_capacity(r, p, power, params).rate_eves;
            std::sort(rates.rbegin(), rates.rend());
            if (rates[0] - rates[1] < eve_tie_gap)
            {
                ++excluded;
                continue;
            }
            ++checked;
            const std::vector<double> amps(p.amplitudes().begin(), p.amplitudes().end());
            const std::vector<double> phases(p.phases().begin(), p.phases().end());
            const auto g = phase_gradient(r, p, power, params, 0.0);
            const auto fd =
                oracle::fd_phase_gradient(r, amps, phases, power, params.noise_variance, 0.0, gradient_fd_step);
            double scale = 0.0;
            for (const double v : fd)
                scale = std::max(scale, std::abs(v));
            bool ok = true;
            for (std::size_t m = 0; m < g.size(); ++m)
            {
                // Relative to the component, floored at 1e-3 of the largest component.
                const double err = std::abs(g[m] - fd[m]) / std::max(std::abs(fd[m]), 1e-3 * scale);
                worst = std::max(worst, err);
                ok = ok && err < gradient_rel_tol;
            }
            bad += ok ? 0 : 1;
        }
        return {bad == 0, fmt::format("{} instances checked, {} excluded as eve ties, {} mismatches, worst {:.2e}",
                                      checked, excluded, bad, worst)};
    }

    Verdict criterion_determinism()
    {
        const std::vector<std::string> commands{
            "single --trials 200 --k-eves 3 --seed 11",
            "power-sweep --trials 50 --seed 11",
            "elements-sweep --trials 50 --seed 11",
            "oracle-check --instances 20 --levels 32 --seed 11",
        };
        std::size_t identical = 0;
        std::string failed;
        for (std::size_t i = 0; i < commands.size(); ++i)
        {
            std::vector<std::string> outputs;
            for (const std::size_t j : {1, 1, 3})
            {
                const auto out = workdir / fmt::format("det_{}_{}_{}.csv", i, j, outputs.size());
                run_cli(fmt::format("{} --jobs {} --out {}", commands[i], j, out.string()), workdir / "det.log");
                outputs.push_back(slurp(out));
            }
            const bool same = !outputs[0].empty() && outputs[0] == outputs[1] && outputs[0] == outputs[2];
            identical += same ? 1 : 0;
            if (!same)
                failed += " " + commands[i].substr(0, commands[i].find(' '));
        }
        return {identical == commands.size(),
                fmt::format("{} of {} subcommands byte-identical across runs and --jobs 1/3{}", identical,
                            commands.size(), failed.empty() ? "" : ";" + failed)};
    }

    Verdict criterion_dominance()
    {
        ScenarioConfig c;
        c.trials = dominance_trials;
        const auto trials = run_trials(c, all_baselines, jobs);
        std::size_t vs_none = 0, vs_random = 0;
        for (const auto &t : trials)
        {
            const double opt = t.at(Baseline::optimized_irs).secrecy_capacity;
            vs_none += opt < t.at(Baseline::no_irs).secrecy_capacity ? 1 : 0;
            vs_random += opt < t.at(Baseline::random_phase).secrecy_capacity ? 1 : 0;
        }
        return {vs_none == 0 && vs_random == 0,
                fmt::format("{} trials, {} violations vs no-IRS, {} vs random phase", trials.size(), vs_none,
                            vs_random)};
    }

    Verdict criterion_fading()
    {
        auto rng = derive_stream(9, 0, StreamPurpose::channel);
        double power = 0.0;
        cplx sum{};
        for (std::size_t i = 0; i < fading_draws; ++i)
        {
            const cplx s = draw_cn01(rng);
            power += std::norm(s);
            sum += s;
        }
        power /= static_cast<double>(fading_draws);
        const double mean_abs = std::abs(sum / static_cast<double>(fading_draws));
        return {std::abs(power - 1.0) <= fading_power_tol && mean_abs < fading_mean_tol,
                fmt::format("E|s|^2 = {:.4f}, |E s| = {:.4f} over {} draws", power, mean_abs, fading_draws)};
    }
}

int main()
{
    std::filesystem::create_directories(workdir);
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"power sweep trend", criterion_power_sweep},
        {"elements sweep trend", criterion_elements_sweep},
        {"zero-power regime", criterion_zero_power},
        {"IRS rescue", criterion_rescue},
        {"oracle equivalence", criterion_oracle},
        {"gradient correctness", criterion_gradient},
        {"determinism", criterion_determinism},
        {"dominance", criterion_dominance},
        {"fading statistics", criterion_fading},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Verdict v;
        try
        {
            v = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += v.pass ? 0 : 1;
        fmt::print("[{}] criterion {} {}: {}\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail);
        std::fflush(stdout);
    }
    std::filesystem::remove_all(workdir);
    fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
