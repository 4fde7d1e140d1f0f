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

#ifndef IRSSEC_OPTIMIZER_HPP
#define IRSSEC_OPTIMIZER_HPP

#include "irssec/channel.hpp"
#include "irssec/irs.hpp"
#include "irssec/secrecy.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace irssec
{
    struct OptimizerConfig
    {
        std::size_t max_outer_iters = 20;
        std::size_t max_inner_iters = 500;   // gradient steps per phase block
        double step_size = 0.5;              // initial step [rad] along the max-norm-scaled gradient
        double backtrack_factor = 0.5;
        std::size_t restarts = 8;            // random phase initializations
        double tol = 1e-6;                   // relative improvement stop
        double power_max = 3.0;              // W
        bool optimize_amplitudes = false;
        double smoothing_temperature = 0.0;  // 0 = hard max over eves

        void validate() const; // throws std::invalid_argument naming the field
    };

    struct OptimizationTrace
    {
        std::vector<double> objective_per_iter;   // initial value, then one entry per accepted step
        std::vector<std::size_t> restart_of_iter; // restart index owning each entry
        SecrecyOutcome final;
        std::size_t restarts_tried = 0;
        bool converged = false;
    };

    // Exact maximizer of log2(1 + a p) - log2(1 + b p) over [0, power_max]:
    // power_max when a > b, otherwise 0 (the link is not worth transmitting on).
    double optimal_power(double user_gain, double best_eve_gain, double power_max);

    // Picks the power for a fixed profile via optimal_power on its effective gains and evaluates there.
    SecrecyOutcome evaluate_with_optimal_power(const ChannelRealization &realization, const PhaseProfile &profile,
                                               const FadingParams &params, double power_max);

    // Phase-block objective rate_user - eve_aggregate, before the clamp at zero. The eve aggregate is
    // max_k rate_k for temperature 0 and T * ln(sum_k exp(rate_k / T)) otherwise.
    double phase_objective(const CascadedChannels &channels, const PhaseProfile &profile, double power,
                           double noise_variance, double temperature);

    // d(phase_objective)/d(theta_m). Throws std::invalid_argument("nothing to optimize") when M = 0.
    std::vector<double> phase_gradient(const ChannelRealization &realization, const PhaseProfile &profile,
                                       double power, const FadingParams &params, double temperature);
    std::vector<double> phase_gradient(const CascadedChannels &channels, const PhaseProfile &profile, double power,
                                       double noise_variance, double temperature);

    // d(phase_objective)/d(phi_m).
    std::vector<double> amplitude_gradient(const CascadedChannels &channels, const PhaseProfile &profile,
                                           double power, double noise_variance, double temperature);

    // Projected gradient ascent on the phases (and amplitudes when enabled) at fixed power,
    // with a backtracking line search. Accepted objectives never decrease.
    std::pair<PhaseProfile, OptimizationTrace> optimize_phases(const ChannelRealization &realization,
                                                               const PhaseProfile &profile_init, double power,
                                                               const FadingParams &params,
                                                               const OptimizerConfig &cfg);

    // Alternates the phase block and the closed-form power block, keeping the best of
    // warm_starts followed by cfg.restarts random initializations drawn from rng. The
    // reflection-off profile (all amplitudes 0) is always evaluated as a candidate, so the
    // result is never worse than the same link without the surface.
    std::pair<SecrecyOutcome, OptimizationTrace> alternate_optimize(const ChannelRealization &realization,
                                                                    const FadingParams &params,
                                                                    const OptimizerConfig &cfg, Rng &rng,
                                                                    std::span<const PhaseProfile> warm_starts = {});

    // Exhaustive search over theta_m in {2 pi i / levels}, unit amplitudes, power in {0, power_max}.
    // Restricted to M <= 3 and levels >= 2.
    SecrecyOutcome oracle_grid_search(const ChannelRealization &realization, const FadingParams &params,
                                      double power_max, std::size_t levels);
}

#endif
