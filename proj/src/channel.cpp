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

#include "irssec/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irssec
{
    namespace
    {
        bool finite(const cplx &c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

        void check_position(const Position3D &p, const char *name)
        {
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
                throw std::invalid_argument(std::string(name) + ": position must be finite");
            if (p.z < 0.0)
                throw std::invalid_argument(std::string(name) + ": height must be >= 0");
        }

        // One complex Gaussian stream per realization; std::normal_distribution
        // caches its second sample, so the object must outlive single draws.
        class ComplexNormal
        {
        public:
            cplx operator()(Rng &rng)
            {
                const double re = dist_(rng);
                const double im = dist_(rng);
                return {re, im};
            }

        private:
            std::normal_distribution<double> dist_{0.0, std::sqrt(0.5)};
        };
    }

    double distance(const Position3D &a, const Position3D &b)
    {
        return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
    }

    void Topology::validate() const
    {
        check_position(uav, "topology.uav");
        check_position(irs, "topology.irs");
        check_position(user, "topology.user");
        if (uav.z <= 0.0)
            throw std::invalid_argument("topology.uav: UAV height must be > 0");
        for (const auto &e : eves)
            check_position(e, "topology.eves");
        if (randomize_eves)
        {
            if (!(eve_x_min <= eve_x_max) || !std::isfinite(eve_x_min) || !std::isfinite(eve_x_max))
                throw std::invalid_argument("topology.eve_x_min/eve_x_max: invalid road segment");
            if (!std::isfinite(eve_road_y))
                throw std::invalid_argument("topology.eve_road_y: must be finite");
        }
        if (uav == user || uav == irs || irs == user)
            throw std::invalid_argument("topology: degenerate geometry");
    }

    void FadingParams::validate() const
    {
        if (!(pathloss_exponent > 0.0) || !std::isfinite(pathloss_exponent))
            throw std::invalid_argument("fading.pathloss_exponent: must be > 0");
        if (!(noise_variance > 0.0) || !std::isfinite(noise_variance))
            throw std::invalid_argument("fading.noise_variance: must be > 0");
        if (!(reference_gain > 0.0) || !std::isfinite(reference_gain))
            throw std::invalid_argument("fading.reference_gain: must be > 0");
    }

    ChannelRealization ChannelRealization::without_irs() const
    {
        ChannelRealization out;
        out.h_du = h_du;
        out.h_de = h_de;
        out.g_ie.assign(h_de.size(), CVec{});
        return out;
    }

    void ChannelRealization::validate() const
    {
        const std::size_t m = g_ui.size();
        if (g_iu.size() != m)
            throw std::invalid_argument("realization: g_iu length differs from g_ui");
        if (g_ie.size() != h_de.size())
            throw std::invalid_argument("realization: g_ie must hold one vector per eve");
        for (const auto &v : g_ie)
            if (v.size() != m)
                throw std::invalid_argument("realization: g_ie row length differs from g_ui");

        bool ok = finite(h_du);
        for (const auto &c : h_de)
            ok = ok && finite(c);
        for (std::size_t i = 0; i < m; ++i)
            ok = ok && finite(g_ui[i]) && finite(g_iu[i]);
        for (const auto &v : g_ie)
            for (const auto &c : v)
                ok = ok && finite(c);
        if (!ok)
            throw std::invalid_argument("realization: non-finite coefficient");
    }

    double path_loss(const Position3D &a, const Position3D &b, const FadingParams &params)
    {
        const double d = distance(a, b);
        if (!(d > 0.0))
            throw std::invalid_argument("degenerate geometry");
        return params.reference_gain * std::pow(d, -params.pathloss_exponent);
    }

    cplx draw_cn01(Rng &rng)
    {
        ComplexNormal cn;
        return cn(rng);
    }

    std::vector<Position3D> place_eves(const Topology &topology, std::size_t k_eves, Rng &rng)
    {
        if (!topology.randomize_eves)
        {
            if (topology.eves.size() != k_eves)
                throw std::invalid_argument("topology.eves: fixed eve list length must equal k_eves");
            return topology.eves;
        }
        std::uniform_real_distribution<double> road(topology.eve_x_min, topology.eve_x_max);
        std::vector<Position3D> out;
        out.reserve(k_eves);
        for (std::size_t k = 0; k < k_eves; ++k)
            out.push_back({road(rng), topology.eve_road_y, 0.0});
        return out;
    }

    ChannelRealization draw_realization(const Topology &topology, const FadingParams &params,
                                        std::size_t m_elements, Rng &rng)
    {
        const std::size_t k_eves = topology.eves.size();
        if (k_eves == 0)
            throw std::invalid_argument("topology.eves: at least one eve is required");

        const double amp_du = std::sqrt(path_loss(topology.uav, topology.user, params));
        std::vector<double> amp_de(k_eves), amp_ie;
        for (std::size_t k = 0; k < k_eves; ++k)
            amp_de[k] = std::sqrt(path_loss(topology.uav, topology.eves[k], params));

        double amp_ui = 0.0, amp_iu = 0.0;
        if (m_elements > 0)
        {
            amp_ui = std::sqrt(path_loss(topology.uav, topology.irs, params));
            amp_iu = std::sqrt(path_loss(topology.irs, topology.user, params));
            amp_ie.resize(k_eves);
            for (std::size_t k = 0; k < k_eves; ++k)
                amp_ie[k] = std::sqrt(path_loss(topology.irs, topology.eves[k], params));
        }

        ComplexNormal cn;
        ChannelRealization r;
        r.h_du = amp_du * cn(rng);
        r.h_de.resize(k_eves);
        for (std::size_t k = 0; k < k_eves; ++k)
            r.h_de[k] = amp_de[k] * cn(rng);

        r.g_ui.resize(m_elements);
        r.g_iu.resize(m_elements);
        r.g_ie.assign(k_eves, CVec(m_elements));
        for (std::size_t m = 0; m < m_elements; ++m)
        {
            r.g_ui[m] = amp_ui * cn(rng);
            r.g_iu[m] = amp_iu * cn(rng);
            for (std::size_t k = 0; k < k_eves; ++k)
                r.g_ie[k][m] = amp_ie[k] * cn(rng);
        }
        return r;
    }

    ChannelRealization draw_unit_realization(std::size_t m_elements, std::size_t k_eves, Rng &rng)
    {
        if (k_eves == 0)
            throw std::invalid_argument("k_eves must be >= 1");
        ComplexNormal cn;
        ChannelRealization r;
        r.h_du = cn(rng);
        r.h_de.resize(k_eves);
        for (auto &c : r.h_de)
            c = cn(rng);
        r.g_ui.resize(m_elements);
        r.g_iu.resize(m_elements);
        r.g_ie.assign(k_eves, CVec(m_elements));
        for (std::size_t m = 0; m < m_elements; ++m)
        {
            r.g_ui[m] = cn(rng);
            r.g_iu[m] = cn(rng);
            for (std::size_t k = 0; k < k_eves; ++k)
                r.g_ie[k][m] = cn(rng);
        }
        return r;
    }
}
