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

#ifndef IRSSEC_CONFIG_HPP
#define IRSSEC_CONFIG_HPP

#include "irssec/channel.hpp"
#include "irssec/optimizer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace irssec
{
    // Raised for unreadable, malformed or out-of-range configuration. field() names the offending key.
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(std::string field, const std::string &what)
            : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

        const std::string &field() const { return field_; }

    private:
        std::string field_;
    };

    // Full experiment description. Defaults reproduce the reference operating point:
    // 3 W, 10 elements, 8 eves, path-loss exponent 3, UAV at 80 m, noise variance 0.01, 10000 trials.
    struct ScenarioConfig
    {
        Topology topology;
        FadingParams fading;
        std::size_t m_elements = 10;
        std::size_t k_eves = 8;
        double power_max = 3.0;
        OptimizerConfig optimizer;
        std::uint64_t master_seed = 1;
        std::size_t trials = 10000;

        // Optimizer settings with power_max taken from the scenario.
        OptimizerConfig solver() const;

        // Throws ConfigError naming the first invalid field.
        void validate() const;
    };

    // Parses a YAML scenario file. Keys absent from the file keep the values already in `base`.
    ScenarioConfig load_config(const std::string &path, ScenarioConfig base = {});
    ScenarioConfig parse_config(const std::string &text, ScenarioConfig base = {});

    // Serializes every field in the same dialect load_config reads.
    std::string dump_config(const ScenarioConfig &config);
}

#endif
