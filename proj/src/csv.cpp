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

#include "irssec/csv.hpp"

#include <fmt/format.h>

namespace irssec::csv
{
    std::string number(double v)
    {
        // -0 and 0 must print identically for byte-stable output
        if (v == 0.0)
            v = 0.0;
        return fmt::format("{:.9g}", v);
    }

    std::string array(std::span<const double> values)
    {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            if (i)
                out += ' ';
            out += number(values[i]);
        }
        return out;
    }

    void write_trials(std::ostream &os, const std::vector<TrialResult> &trials)
    {
        os << trial_header << '\n';
        for (const auto &t : trials)
            for (std::size_t j = 0; j < t.baselines.size(); ++j)
            {
                const auto &o = t.outcomes[j];
                os << t.trial_index << ',' << to_string(t.baselines[j]) << ',' << number(o.power) << ','
                   << number(o.secrecy_capacity) << ',' << number(o.rate_user) << ',' << number(o.max_eve_rate())
                   << ',' << o.active_eve << ',' << array(o.profile.amplitudes()) << ','
                   << array(o.profile.phases()) << '\n';
            }
    }

    void write_sweep(std::ostream &os, const SweepResult &result)
    {
        os << sweep_header << '\n';
        for (const auto &r : result.rows)
            os << number(r.swept_value) << ',' << to_string(r.baseline) << ',' << number(r.stats.mean) << ','
               << number(r.stats.stderr_mean) << ',' << r.stats.trials << ',' << number(r.stats.zero_fraction)
               << '\n';
    }

    void write_traces(std::ostream &os, const std::vector<TrialResult> &trials)
    {
        os << trace_header << '\n';
        for (const auto &t : trials)
        {
            if (!t.trace)
                continue;
            const auto &tr = *t.trace;
            std::size_t iter = 0;
            for (std::size_t i = 0; i < tr.objective_per_iter.size(); ++i)
            {
                if (i > 0 && tr.restart_of_iter[i] != tr.restart_of_iter[i - 1])
                    iter = 0;
                os << t.trial_index << ',' << tr.restart_of_iter[i] << ',' << iter++ << ','
                   << number(tr.objective_per_iter[i]) << '\n';
            }
        }
    }

    void write_oracle(std::ostream &os, const OracleCheckReport &report)
    {
        os << oracle_header << '\n';
        for (const auto &r : report.rows)
            os << r.instance << ',' << number(r.achieved) << ',' << number(r.oracle) << ',' << number(r.ratio) << ','
               << (r.pass ? 1 : 0) << '\n';
    }
}
