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

#include "irssec/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace irssec
{
    std::string_view to_string(Baseline b)
    {
        switch (b)
        {
        case Baseline::optimized_irs:
            return "optimized_irs";
        case Baseline::no_irs:
            return "no_irs";
        case Baseline::random_phase:
            return "random_phase";
        }
        return "unknown";
    }

    Baseline parse_baseline(std::string_view name)
    {
        for (const auto b : all_baselines)
            if (to_string(b) == name)
                return b;
        throw std::invalid_argument("unknown baseline '" + std::string(name) + "'");
    }

    const SecrecyOutcome &TrialResult::at(Baseline b) const
    {
        for (std::size_t i = 0; i < baselines.size(); ++i)
            if (baselines[i] == b)
                return outcomes[i];
        throw std::out_of_range("baseline " + std::string(to_string(b)) + " not evaluated in this trial");
    }

    TrialDraw draw_trial(const ScenarioConfig &config, std::size_t trial_index)
    {
        auto channel_rng = derive_stream(config.master_seed, trial_index, StreamPurpose::channel);
        Topology topo = config.topology;
        topo.eves = place_eves(config.topology, config.k_eves, channel_rng);
        TrialDraw draw;
        draw.realization = draw_realization(topo, config.fading, config.m_elements, channel_rng);

        auto phase_rng = derive_stream(config.master_seed, trial_index, StreamPurpose::phase_init);
        // The random-phase profile is the first draw of the phase stream; the optimizer's restarts follow it.
        draw.random_profile = PhaseProfile::random(config.m_elements, phase_rng);
        draw.restart_stream = phase_rng;
        return draw;
    }

    TrialResult run_trial(const ScenarioConfig &config, std::size_t trial_index, const std::vector<Baseline> &baselines,
                          bool keep_trace)
    {
        if (baselines.empty())
            throw std::invalid_argument("run_trial: at least one baseline is required");

        auto draw = draw_trial(config, trial_index);
        const auto &realization = draw.realization;
        const auto &random_profile = draw.random_profile;

        const auto solver = config.solver();
        TrialResult result;
        result.trial_index = trial_index;
        result.baselines = baselines;
        result.outcomes.reserve(baselines.size());
        for (const auto b : baselines)
        {
            switch (b)
            {
            case Baseline::optimized_irs:
            {
                // Warm-starting from the random profile keeps the optimizer at or above that baseline.
                std::vector<PhaseProfile> warm;
                if (config.m_elements > 0)
                    warm.push_back(random_profile);
                auto rng = draw.restart_stream;
                auto [outcome, trace] = alternate_optimize(realization, config.fading, solver, rng, warm);
                result.outcomes.push_back(std::move(outcome));
                if (keep_trace)
                    result.trace = std::move(trace);
                break;
            }
            case Baseline::no_irs:
                result.outcomes.push_back(
                    evaluate_with_optimal_power(realization.without_irs(), PhaseProfile{}, config.fading, config.power_max));
                break;
            case Baseline::random_phase:
                result.outcomes.push_back(
                    evaluate_with_optimal_power(realization, random_profile, config.fading, config.power_max));
                break;
            }
        }
        return result;
    }

    void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)> &fn)
    {
        jobs = std::max<std::size_t>(1, std::min(jobs, count));
        if (jobs <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        {
            std::vector<std::jthread> workers;
            workers.reserve(jobs);
            for (std::size_t w = 0; w < jobs; ++w)
                workers.emplace_back([&] {
                    while (!failed.load())
                    {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= count)
                            return;
                        try
                        {
                            fn(i);
                        }
                        catch (...)
                        {
                            std::lock_guard lock(error_mutex);
                            if (!error)
                                error = std::current_exception();
                            failed = true;
                        }
                    }
                });
        }
        if (error)
            std::rethrow_exception(error);
    }

    std::vector<TrialResult> run_trials(const ScenarioConfig &config, const std::vector<Baseline> &baselines,
                                        std::size_t jobs, bool keep_trace)
    {
        config.validate();
        std::vector<TrialResult> results(config.trials);
        parallel_for(config.trials, jobs,
                     [&](std::size_t i) { results[i] = run_trial(config, i, baselines, keep_trace); });
        return results;
    }

    void SweepSpec::validate() const
    {
        if (values.empty())
            throw std::invalid_argument("sweep: value list is empty");
        for (std::size_t i = 1; i < values.size(); ++i)
            if (!(values[i] > values[i - 1]))
                throw std::invalid_argument("sweep: values must be strictly increasing");
        for (const double v : values)
        {
            if (!std::isfinite(v))
                throw std::invalid_argument("sweep: values must be finite");
            if (swept == SweptParameter::power_max && !(v > 0.0))
                throw std::invalid_argument("sweep: powers must be > 0");
            if (swept == SweptParameter::m_elements && (v < 0.0 || v != std::floor(v)))
                throw std::invalid_argument("sweep: element counts must be nonnegative integers");
        }
        if (trials < 1)
            throw std::invalid_argument("sweep: trials must be >= 1");
        if (baselines.empty())
            throw std::invalid_argument("sweep: at least one baseline is required");
    }

    SummaryStats summarize(const std::vector<double> &samples)
    {
        SummaryStats s;
        s.trials = samples.size();
        if (samples.empty())
            return s;
        double sum = 0.0;
        std::size_t zeros = 0;
        for (const double v : samples)
        {
            sum += v;
            if (v == 0.0)
                ++zeros;
        }
        s.mean = sum / static_cast<double>(samples.size());
        if (samples.size() > 1)
        {
            double ss = 0.0;
            for (const double v : samples)
                ss += (v - s.mean) * (v - s.mean);
            const double var = ss / static_cast<double>(samples.size() - 1);
            s.stderr_mean = std::sqrt(var / static_cast<double>(samples.size()));
        }
        s.zero_fraction = static_cast<double>(zeros) / static_cast<double>(samples.size());
        return s;
    }

    const SweepRow &SweepResult::row(std::size_t value_index, Baseline b) const
    {
        for (std::size_t j = 0; j < baselines.size(); ++j)
            if (baselines[j] == b)
                return rows.at(value_index * baselines.size() + j);
        throw std::out_of_range("baseline not part of this sweep");
    }

    const std::vector<double> &SweepResult::trial_values(std::size_t value_index, Baseline b) const
    {
        for (std::size_t j = 0; j < baselines.size(); ++j)
            if (baselines[j] == b)
                return samples.at(value_index).at(j);
        throw std::out_of_range("baseline not part of this sweep");
    }

    SweepResult run_sweep(const ScenarioConfig &config, const SweepSpec &spec, std::size_t jobs)
    {
        spec.validate();
        SweepResult result;
        result.swept = spec.swept;
        result.values = spec.values;
        result.baselines = spec.baselines;

        for (const double value : spec.values)
        {
            ScenarioConfig cfg = config;
            cfg.trials = spec.trials;
            if (spec.swept == SweptParameter::power_max)
                cfg.power_max = value;
            else
                cfg.m_elements = static_cast<std::size_t>(value);

            const auto trials = run_trials(cfg, spec.baselines, jobs);
            std::vector<std::vector<double>> per_baseline(spec.baselines.size());
            for (std::size_t j = 0; j < spec.baselines.size(); ++j)
            {
                per_baseline[j].reserve(trials.size());
                for (const auto &t : trials)
                    per_baseline[j].push_back(t.outcomes[j].secrecy_capacity);
                result.rows.push_back({value, spec.baselines[j], summarize(per_baseline[j])});
            }
            result.samples.push_back(std::move(per_baseline));
        }
        return result;
    }

    OracleCheckReport run_oracle_check(std::size_t instances, std::size_t m, std::size_t k, std::size_t levels,
                                       std::uint64_t seed, const FadingParams &fading, const OptimizerConfig &cfg,
                                       std::size_t jobs, double threshold)
    {
        if (m > 3)
            throw std::invalid_argument("oracle restricted to desk scale");
        if (k < 1)
            throw std::invalid_argument("oracle check needs at least one eve");
        OracleCheckReport report;
        report.threshold = threshold;
        report.rows.resize(instances);
        parallel_for(instances, jobs, [&](std::size_t i) {
            auto inst_rng = derive_stream(seed, i, StreamPurpose::instance);
            const auto realization = draw_unit_realization(m, k, inst_rng);
            auto phase_rng = derive_stream(seed, i, StreamPurpose::phase_init);
            const auto achieved = alternate_optimize(realization, fading, cfg, phase_rng).first.secrecy_capacity;
            const auto oracle = oracle_grid_search(realization, fading, cfg.power_max, levels).secrecy_capacity;

            OracleCheckRow row;
            row.instance = i;
            row.achieved = achieved;
            row.oracle = oracle;
            row.ratio = oracle > 0.0 ? achieved / oracle : 1.0;
            row.pass = row.ratio >= threshold;
            report.rows[i] = row;
        });
        std::size_t passed = 0;
        for (const auto &r : report.rows)
            passed += r.pass ? 1 : 0;
        report.pass_fraction = instances ? static_cast<double>(passed) / static_cast<double>(instances) : 1.0;
        return report;
    }
}
