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

#ifndef IRSSEC_MONTECARLO_HPP
#define IRSSEC_MONTECARLO_HPP

#include "irssec/config.hpp"
#include "irssec/optimizer.hpp"
#include "irssec/secrecy.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irssec
{
    enum class Baseline
    {
        optimized_irs,
        no_irs,
        random_phase
    };

    std::string_view to_string(Baseline b);
    Baseline parse_baseline(std::string_view name); // throws std::invalid_argument

    inline const std::vector<Baseline> all_baselines{Baseline::optimized_irs, Baseline::no_irs,
                                                     Baseline::random_phase};

    // Every requested baseline evaluated on one shared channel draw.
    struct TrialResult
    {
        std::size_t trial_index = 0;
        std::vector<Baseline> baselines;
        std::vector<SecrecyOutcome> outcomes;    // parallel to baselines
        std::optional<OptimizationTrace> trace;  // optimizer trace when requested

        const SecrecyOutcome &at(Baseline b) const; // throws std::out_of_range if not evaluated
    };

    // Inputs of one trial, exposed for inspection and tests.
    struct TrialDraw
    {
        ChannelRealization realization;
        PhaseProfile random_profile;
        Rng restart_stream; // phase stream positioned after random_profile
    };

    // Realization from the (master_seed, trial_index) channel stream; random profile from the phase stream.
    TrialDraw draw_trial(const ScenarioConfig &config, std::size_t trial_index);

    TrialResult run_trial(const ScenarioConfig &config, std::size_t trial_index,
                          const std::vector<Baseline> &baselines = all_baselines, bool keep_trace = false);

    // Runs fn(i) for i in [0, count) on `jobs` threads. Results must be stored by index by the caller;
    // the first exception thrown by any task is rethrown after all workers stop.
    void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)> &fn);

    // Trials [0, config.trials), ordered by index irrespective of jobs.
    std::vector<TrialResult> run_trials(const ScenarioConfig &config, const std::vector<Baseline> &baselines,
                                        std::size_t jobs = 1, bool keep_trace = false);

    enum class SweptParameter
    {
        power_max,
        m_elements
    };

    struct SweepSpec
    {
        SweptParameter swept = SweptParameter::power_max;
        std::vector<double> values;
        std::size_t trials = 1000;
        std::vector<Baseline> baselines = all_baselines;

        void validate() const; // throws std::invalid_argument
    };

    struct SummaryStats
    {
        double mean = 0.0;
        double stderr_mean = 0.0;
        std::size_t trials = 0;
        double zero_fraction = 0.0;
    };

    SummaryStats summarize(const std::vector<double> &samples);

    struct SweepRow
    {
        double swept_value = 0.0;
        Baseline baseline = Baseline::optimized_irs;
        SummaryStats stats;
    };

    struct SweepResult
    {
        SweptParameter swept = SweptParameter::power_max;
        std::vector<double> values;
        std::vector<Baseline> baselines;
        std::vector<SweepRow> rows; // value-major, baselines in SweepSpec order
        // Per-trial secrecy capacity, [value index][baseline index][trial]. Trials share realizations
        // across baselines and, for a fixed trial index, across swept values.
        std::vector<std::vector<std::vector<double>>> samples;

        const SweepRow &row(std::size_t value_index, Baseline b) const;
        const std::vector<double> &trial_values(std::size_t value_index, Baseline b) const;
    };

    // Overrides the swept field per value, runs spec.trials paired trials and aggregates.
    SweepResult run_sweep(const ScenarioConfig &config, const SweepSpec &spec, std::size_t jobs = 1);

    struct OracleCheckRow
    {
        std::size_t instance = 0;
        double achieved = 0.0;
        double oracle = 0.0;
        double ratio = 1.0; // achieved / oracle, defined as 1 when the oracle capacity is 0
        bool pass = true;
    };

    struct OracleCheckReport
    {
        std::vector<OracleCheckRow> rows;
        double pass_fraction = 0.0;
        double threshold = 0.98;
    };

    // Optimizer vs exhaustive grid on topology-free CN(0,1) instances with m elements and k eves.
    OracleCheckReport run_oracle_check(std::size_t instances, std::size_t m, std::size_t k, std::size_t levels,
                                       std::uint64_t seed, const FadingParams &fading, const OptimizerConfig &cfg,
                                       std::size_t jobs = 1, double threshold = 0.98);
}

#endif
