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

#ifndef IRSSEC_CHANNEL_HPP
#define IRSSEC_CHANNEL_HPP

#include "irssec/rng.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace irssec
{
    using cplx = std::complex<double>;
    using CVec = std::vector<cplx>;

    // Cartesian node position in meters, z is the height above the road plane.
    struct Position3D
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        friend bool operator==(const Position3D &, const Position3D &) = default;
    };

    double distance(const Position3D &a, const Position3D &b);

    // Eve placement on the road: when randomize_eves is set, each trial draws
    // the K eve positions uniformly on x in [eve_x_min, eve_x_max] at y = eve_road_y, z = 0.
    // Otherwise the explicit list `eves` is used as-is.
    struct Topology
    {
        Position3D uav{0.0, 0.0, 80.0};
        Position3D irs{10.0, 10.0, 10.0};
        Position3D user{10.0, 0.0, 0.0};
        std::vector<Position3D> eves;

        bool randomize_eves = true;
        double eve_x_min = -50.0;
        double eve_x_max = 50.0;
        double eve_road_y = 0.0;

        void validate() const; // throws std::invalid_argument
    };

    struct FadingParams
    {
        double pathloss_exponent = 3.0; // alpha
        double noise_variance = 0.01;   // sigma^2 [W]
        double reference_gain = 1.0;    // gain at 1 m

        void validate() const; // throws std::invalid_argument
    };

    // One block-fading draw over every link. g_ie is indexed [eve][element].
    struct ChannelRealization
    {
        cplx h_du;
        CVec h_de;
        CVec g_ui;
        CVec g_iu;
        std::vector<CVec> g_ie;

        std::size_t num_elements() const { return g_ui.size(); }
        std::size_t num_eves() const { return h_de.size(); }

        // Same realization with the IRS removed (M = 0).
        ChannelRealization without_irs() const;

        // Throws std::invalid_argument on inconsistent sizes or non-finite coefficients.
        void validate() const;
    };

    // Large-scale power gain reference_gain * d^(-alpha).
    // Throws std::invalid_argument("degenerate geometry") when a and b coincide.
    double path_loss(const Position3D &a, const Position3D &b, const FadingParams &params);

    // Unit-variance circularly-symmetric complex Gaussian sample.
    cplx draw_cn01(Rng &rng);

    // Draws eve positions for one trial (uniform on the road segment) or returns the fixed list.
    std::vector<Position3D> place_eves(const Topology &topology, std::size_t k_eves, Rng &rng);

    // Draws every coefficient as sqrt(path_loss) * CN(0,1). The draw order is
    // h_du, h_de[0..K), then per element m: g_ui[m], g_iu[m], g_ie[0..K)[m], so a
    // realization with M elements is a prefix of the one with M + 1 elements.
    // `topology.eves` must hold the eve positions for this trial (see place_eves).
    ChannelRealization draw_realization(const Topology &topology, const FadingParams &params,
                                        std::size_t m_elements, Rng &rng);

    // Topology-free instance with every coefficient CN(0,1). Used by the oracle and gradient checks.
    ChannelRealization draw_unit_realization(std::size_t m_elements, std::size_t k_eves, Rng &rng);
}

#endif
