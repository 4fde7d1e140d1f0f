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

#ifndef IRSSEC_CSV_HPP
#define IRSSEC_CSV_HPP

#include "irssec/montecarlo.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace irssec::csv
{
    // Column orders are part of the output contract; numbers use 9 significant digits.
    inline constexpr const char *trial_header =
        "trial,baseline,power,secrecy,rate_user,max_eve_rate,active_eve,amplitudes,phases";
    inline constexpr const char *sweep_header = "swept_value,baseline,mean_secrecy,stderr,trials,zero_fraction";
    inline constexpr const char *trace_header = "trial,restart,iter,objective";
    inline constexpr const char *oracle_header = "instance,achieved,oracle,ratio,pass";

    std::string number(double v);

    // Space-separated list, e.g. "0.5 1.25". Empty for M = 0.
    std::string array(std::span<const double> values);

    void write_trials(std::ostream &os, const std::vector<TrialResult> &trials);
    void write_sweep(std::ostream &os, const SweepResult &result);
    void write_traces(std::ostream &os, const std::vector<TrialResult> &trials);
    void write_oracle(std::ostream &os, const OracleCheckReport &report);
}

#endif
