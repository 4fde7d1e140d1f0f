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

#include "irssec/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace irssec
{
    namespace
    {
        template <typename T>
        void read(const YAML::Node &node, const std::string &key, const std::string &path, T &out)
        {
            const auto child = node[key];
            if (!child)
                return;
            try
            {
                out = child.as<T>();
            }
            catch (const YAML::Exception &)
            {
                throw ConfigError(path + key, "malformed value");
            }
        }

        // Unsigned counts are read as signed first; yaml-cpp wraps "-1" into a huge size_t.
        void read_count(const YAML::Node &node, const std::string &key, const std::string &path, std::size_t &out)
        {
            long long v = 0;
            bool present = static_cast<bool>(node[key]);
            read(node, key, path, v);
            if (!present)
                return;
            if (v < 0)
                throw ConfigError(path + key, "must be >= 0");
            out = static_cast<std::size_t>(v);
        }

        Position3D read_position(const YAML::Node &node, const std::string &field)
        {
            if (!node.IsSequence() || node.size() != 3)
                throw ConfigError(field, "expected a list [x, y, z]");
            try
            {
                return {node[0].as<double>(), node[1].as<double>(), node[2].as<double>()};
            }
            catch (const YAML::Exception &)
            {
                throw ConfigError(field, "malformed coordinate");
            }
        }

        void check_keys(const YAML::Node &node, const std::set<std::string> &allowed, const std::string &path)
        {
            if (!node.IsMap())
                throw ConfigError(path.empty() ? "<root>" : path.substr(0, path.size() - 1), "expected a mapping");
            for (const auto &kv : node)
            {
                const auto key = kv.first.as<std::string>();
                if (!allowed.count(key))
                    throw ConfigError(path + key, "unknown key");
            }
        }

        ScenarioConfig from_node(const YAML::Node &root, ScenarioConfig cfg)
        {
            if (!root || root.IsNull())
                return cfg;
            check_keys(root, {"master_seed", "trials", "m_elements", "k_eves", "power_max", "topology", "fading",
                              "optimizer"},
                       "");
            read(root, "master_seed", "", cfg.master_seed);
            read_count(root, "trials", "", cfg.trials);
            read_count(root, "m_elements", "", cfg.m_elements);
            read_count(root, "k_eves", "", cfg.k_eves);
            read(root, "power_max", "", cfg.power_max);

            if (const auto topo = root["topology"])
            {
                const std::string p = "topology.";
                check_keys(topo, {"uav", "irs", "user", "eves", "eve_x_min", "eve_x_max", "eve_road_y"}, p);
                if (topo["uav"])
                    cfg.topology.uav = read_position(topo["uav"], p + "uav");
                if (topo["irs"])
                    cfg.topology.irs = read_position(topo["irs"], p + "irs");
                if (topo["user"])
                    cfg.topology.user = read_position(topo["user"], p + "user");
                if (const auto eves = topo["eves"])
                {
                    if (eves.IsScalar() && eves.as<std::string>() == "random")
                    {
                        cfg.topology.randomize_eves = true;
                        cfg.topology.eves.clear();
                    }
                    else if (eves.IsSequence())
                    {
                        cfg.topology.randomize_eves = false;
                        cfg.topology.eves.clear();
                        for (std::size_t i = 0; i < eves.size(); ++i)
                            cfg.topology.eves.push_back(read_position(eves[i], p + "eves[" + std::to_string(i) + "]"));
                    }
                    else
                        throw ConfigError(p + "eves", "expected 'random' or a list of [x, y, z]");
                }
                read(topo, "eve_x_min", p, cfg.topology.eve_x_min);
                read(topo, "eve_x_max", p, cfg.topology.eve_x_max);
                read(topo, "eve_road_y", p, cfg.topology.eve_road_y);
            }

            if (const auto fad = root["fading"])
            {
                const std::string p = "fading.";
                check_keys(fad, {"pathloss_exponent", "noise_variance", "reference_gain"}, p);
                read(fad, "pathloss_exponent", p, cfg.fading.pathloss_exponent);
                read(fad, "noise_variance", p, cfg.fading.noise_variance);
                read(fad, "reference_gain", p, cfg.fading.reference_gain);
            }

            if (const auto opt = root["optimizer"])
            {
                const std::string p = "optimizer.";
                check_keys(opt, {"max_outer_iters", "max_inner_iters", "step_size", "backtrack_factor", "restarts",
                                 "tol", "optimize_amplitudes", "smoothing_temperature"},
                           p);
                read_count(opt, "max_outer_iters", p, cfg.optimizer.max_outer_iters);
                read_count(opt, "max_inner_iters", p, cfg.optimizer.max_inner_iters);
                read(opt, "step_size", p, cfg.optimizer.step_size);
                read(opt, "backtrack_factor", p, cfg.optimizer.backtrack_factor);
                read_count(opt, "restarts", p, cfg.optimizer.restarts);
                read(opt, "tol", p, cfg.optimizer.tol);
                read(opt, "optimize_amplitudes", p, cfg.optimizer.optimize_amplitudes);
                read(opt, "smoothing_temperature", p, cfg.optimizer.smoothing_temperature);
            }
            return cfg;
        }

        YAML::Node position_node(const Position3D &p)
        {
            YAML::Node n;
            n.SetStyle(YAML::EmitterStyle::Flow);
            n.push_back(p.x);
            n.push_back(p.y);
            n.push_back(p.z);
            return n;
        }
    }

    OptimizerConfig ScenarioConfig::solver() const
    {
        OptimizerConfig cfg = optimizer;
        cfg.power_max = power_max;
        return cfg;
    }

    void ScenarioConfig::validate() const
    {
        // Lower-level validators name their field in the message prefix ("fading.noise_variance: ...").
        auto rethrow = [](const std::invalid_argument &e) {
            const std::string msg = e.what();
            const auto colon = msg.find(':');
            if (colon == std::string::npos)
                throw ConfigError("<config>", msg);
            throw ConfigError(msg.substr(0, colon), msg.substr(colon + 2));
        };
        try
        {
            topology.validate();
            fading.validate();
            solver().validate();
        }
        catch (const std::invalid_argument &e)
        {
            rethrow(e);
        }
        if (k_eves < 1)
            throw ConfigError("k_eves", "must be >= 1");
        if (trials < 1)
            throw ConfigError("trials", "must be >= 1");
        if (!topology.randomize_eves && topology.eves.size() != k_eves)
            throw ConfigError("topology.eves", "fixed eve list length must equal k_eves");
        for (const auto &e : topology.eves)
            if (e == topology.uav || e == topology.irs)
                throw ConfigError("topology.eves", "degenerate geometry");
    }

    ScenarioConfig parse_config(const std::string &text, ScenarioConfig base)
    {
        YAML::Node root;
        try
        {
            root = YAML::Load(text);
        }
        catch (const YAML::Exception &e)
        {
            throw ConfigError("<file>", std::string("parse error: ") + e.what());
        }
        auto cfg = from_node(root, std::move(base));
        cfg.validate();
        return cfg;
    }

    ScenarioConfig load_config(const std::string &path, ScenarioConfig base)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("--config", "cannot read '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str(), std::move(base));
    }

    std::string dump_config(const ScenarioConfig &c)
    {
        YAML::Emitter out;
        out.SetDoublePrecision(17);
        YAML::Node root;
        root["master_seed"] = c.master_seed;
        root["trials"] = c.trials;
        root["m_elements"] = c.m_elements;
        root["k_eves"] = c.k_eves;
        root["power_max"] = c.power_max;

        YAML::Node topo;
        topo["uav"] = position_node(c.topology.uav);
        topo["irs"] = position_node(c.topology.irs);
        topo["user"] = position_node(c.topology.user);
        if (c.topology.randomize_eves)
            topo["eves"] = "random";
        else
        {
            YAML::Node eves;
            for (const auto &e : c.topology.eves)
                eves.push_back(position_node(e));
            topo["eves"] = eves;
        }
        topo["eve_x_min"] = c.topology.eve_x_min;
        topo["eve_x_max"] = c.topology.eve_x_max;
        topo["eve_road_y"] = c.topology.eve_road_y;
        root["topology"] = topo;

        YAML::Node fad;
        fad["pathloss_exponent"] = c.fading.pathloss_exponent;
        fad["noise_variance"] = c.fading.noise_variance;
        fad["reference_gain"] = c.fading.reference_gain;
        root["fading"] = fad;

        YAML::Node opt;
        opt["max_outer_iters"] = c.optimizer.max_outer_iters;
        opt["max_inner_iters"] = c.optimizer.max_inner_iters;
        opt["step_size"] = c.optimizer.step_size;
        opt["backtrack_factor"] = c.optimizer.backtrack_factor;
        opt["restarts"] = c.optimizer.restarts;
        opt["tol"] = c.optimizer.tol;
        opt["optimize_amplitudes"] = c.optimizer.optimize_amplitudes;
        opt["smoothing_temperature"] = c.optimizer.smoothing_temperature;
        root["optimizer"] = opt;

        out << root;
        return std::string(out.c_str()) + "\n";
    }
}
