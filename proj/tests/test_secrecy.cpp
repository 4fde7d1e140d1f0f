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

#include "irssec/secrecy.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace irssec;

namespace
{
    // Realization with no IRS and prescribed direct gains |h|^2.
    ChannelRealization direct_only(double user_gain, std::vector<double> eve_gains)
    {
        ChannelRealization r;
        r.h_du = {std::sqrt(user_gain), 0.0};
        for (const double g : eve_gains)
        {
            r.h_de.push_back({0.0, std::sqrt(g)});
            r.g_ie.emplace_back();
        }
        return r;
    }

    FadingParams unit_noise()
    {
        FadingParams p;
        p.noise_variance = 1.0;
        return p;
    }
}

TEST_CASE("rate closed forms")
{
    CHECK(rate({1.0, 0.0}, 0.0, 1.0) == 0.0);
    CHECK(rate({std::sqrt(3.0), 0.0}, 1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rate({0.0, 1.0}, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(rate({1.0, 0.0}, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rate({1.0, 0.0}, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("rate is monotone in power and gain")
{
    double prev = -1.0;
    for (double p = 0.0; p < 10.0; p += 0.25)
    {
        const double r = rate({0.3, 0.4}, p, 0.01);
        CHECK(r >= 0.0);
        CHECK(r >= prev);
        prev = r;
    }
    prev = -1.0;
    for (double g = 0.0; g < 3.0; g += 0.1)
    {
        const double r = rate({g, 0.0}, 1.0, 0.5);
        CHECK(r >= prev);
        prev = r;
    }
}

TEST_CASE("secrecy capacity composition")
{
    const auto out = secrecy_capacity(direct_only(3.0, {1.0}), PhaseProfile{}, 1.0, unit_noise());
    CHECK(out.rate_user == doctest::Approx(2.0));
    CHECK(out.max_eve_rate() == doctest::Approx(1.0));
    CHECK(out.secrecy_capacity == doctest::Approx(1.0));
    CHECK(out.active_eve == 0);
    CHECK(out.power == 1.0);
}

TEST_CASE("stronger eve clamps capacity to zero at every power")
{
    for (const double p : {0.0, 0.01, 1.0, 3.0, 100.0})
    {
        const auto out = secrecy_capacity(direct_only(1.0, {1.0, 2.0}), PhaseProfile{}, p, unit_noise());
        CHECK(out.secrecy_capacity == 0.0);
        if (p > 0.0)
            CHECK(out.active_eve == 1);
    }
}

TEST_CASE("strongest eve is selected with lowest-index tie-break")
{
    const auto out = make_outcome(1.0, PhaseProfile{}, 2.0, {0.5, 1.7, 0.2});
    CHECK(out.secrecy_capacity == doctest::Approx(0.3));
    CHECK(out.active_eve == 1);

    const auto tie = make_outcome(1.0, PhaseProfile{}, 2.0, {1.0, 1.5, 1.5});
    CHECK(tie.active_eve == 1);
    CHECK(argmax_lowest(std::vector<double>{2.0, 2.0, 2.0}) == 0);
    CHECK_THROWS_AS(argmax_lowest(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected")
{
    auto rng = derive_stream(1, 0, StreamPurpose::instance);
    const auto r = draw_unit_realization(3, 2, rng);
    CHECK_THROWS_AS(secrecy_capacity(r, PhaseProfile::uniform(2), 1.0, FadingParams{}), std::invalid_argument);
    CHECK_NOTHROW(secrecy_capacity(r, PhaseProfile::uniform(3), 1.0, FadingParams{}));
}

TEST_CASE("non-colluding semantics: eve order does not matter")
{
    auto rng = derive_stream(77, 0, StreamPurpose::instance);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto r = draw_unit_realization(4, 5, rng);
        const auto p = PhaseProfile::random(4, rng);
        const auto base = secrecy_capacity(r, p, 1.0, FadingParams{});

        std::vector<std::size_t> perm(5);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ChannelRealization q = r;
        for (std::size_t k = 0; k < 5; ++k)
        {
            q.h_de[k] = r.h_de[perm[k]];
            q.g_ie[k] = r.g_ie[perm[k]];
        }
        const auto permuted = secrecy_capacity(q, p, 1.0, FadingParams{});
        CHECK(permuted.secrecy_capacity == doctest::Approx(base.secrecy_capacity).epsilon(1e-14));
        // active eve maps through the permutation (ties are measure-zero here)
        CHECK(perm[permuted.active_eve] == base.active_eve);
    }
}

TEST_CASE("capacity vs power follows the sign of the gain gap")
{
    auto rng = derive_stream(5, 0, StreamPurpose::instance);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        const double a = u(rng), b = u(rng);
        double prev = -1.0;
        for (double p = 0.0; p <= 5.0; p += 0.25)
        {
            const double c = secrecy_capacity(direct_only(a, {b}), PhaseProfile{}, p, unit_noise()).secrecy_capacity;
            if (a > b)
            {
                if (p > 0.0)
                    CHECK(c > prev);
            }
            else
                CHECK(c == 0.0);
            prev = c;
        }
    }
}

TEST_CASE("capacity is never negative")
{
    auto rng = derive_stream(6, 0, StreamPurpose::instance);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    int negatives = 0;
    for (int trial = 0; trial < 100000; ++trial)
    {
        const auto r = draw_unit_realization(2, 3, rng);
        const auto out = secrecy_capacity(r, PhaseProfile::random(2, rng), u(rng), FadingParams{});
        negatives += out.secrecy_capacity < 0.0 ? 1 : 0;
    }
    CHECK(negatives == 0);
}
