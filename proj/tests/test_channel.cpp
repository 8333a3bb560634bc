// SPDX-License-Identifier: Apache-2.0
//
// cogregions - rate regions of the Gaussian cognitive interference channel
// Copyright (C) 2026 The cogregions Authors
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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include <cogregions/channel.hpp>

using namespace cogregions;
using Catch::Matchers::WithinAbs;

TEST_CASE("channel parameters reject invalid values")
{
    CHECK_THROWS_AS(ChannelParams(0, -1, 1, 1), PreconditionError);
    CHECK_THROWS_AS(ChannelParams(0, 1, -1, 1), PreconditionError);
    CHECK_THROWS_AS(ChannelParams(0, 1, 1, -0.5), PreconditionError);
    CHECK_THROWS_AS(ChannelParams(std::nan(""), 1, 1, 1), PreconditionError);
    CHECK_THROWS_AS(ChannelParams(0, std::numeric_limits<double>::infinity(), 1, 1), PreconditionError);
    CHECK_NOTHROW(ChannelParams(-2.0, 0.0, 0.0, 0.0));
}

TEST_CASE("thresholds at p1 = p2 = 1")
{
    const auto t = regime_thresholds(1.0, 1.0);
    CHECK_THAT(t.primary_decodes, WithinAbs(std::sqrt(1.5), 1e-15));
    CHECK_THAT(t.r2_dominance, WithinAbs(std::sqrt(2.0), 1e-15));
    CHECK_THAT(t.superposition, WithinAbs(std::sqrt(3.0) + 1.0, 1e-15));
    // root of b^2 - b - 2 = 0
    CHECK_THAT(t.r2_dominance_exact, WithinAbs(2.0, 1e-15));
}

TEST_CASE("classify: superposition capacity regime at a=0, b=3, p1=p2=1")
{
    const auto r = classify(ChannelParams(0, 3, 1, 1));
    CHECK(r.interference_class == InterferenceClass::strong);
    CHECK(r.z_channel == ZChannel::a_zero);
    CHECK(r.th3_capacity);
    CHECK(r.cor2_dominates);
    CHECK(r.cor2_dominates_exact);
    CHECK_FALSE(r.pdc_capacity_known);
    CHECK_FALSE(r.open_regime);
}

TEST_CASE("classify: b = 0 takes precedence as a Z channel")
{
    CHECK(classify(ChannelParams(0.0, 0.0, 5, 5)).z_channel == ZChannel::b_zero);
    CHECK(classify(ChannelParams(0.7, 0.0, 5, 5)).z_channel == ZChannel::b_zero);
    CHECK(classify(ChannelParams(0.7, 0.0, 5, 5)).interference_class == InterferenceClass::weak);
}

TEST_CASE("classify: the a=0.01, b=10, p1=p2=5 channel")
{
    const auto r = classify(ChannelParams(0.01, 10, 5, 5));
    CHECK_FALSE(r.th3_capacity);
    CHECK(r.cor2_dominates);
    CHECK(r.z_channel == ZChannel::none);
    CHECK_FALSE(r.open_regime); // open_regime is defined for a = 0 only
    CHECK_THAT(r.thresholds.superposition, WithinAbs(std::sqrt(31.0) + 5.0, 1e-12));
}

TEST_CASE("classify: b = 2.5 at a=0, p1=p2=1 is open")
{
    const auto r = classify(ChannelParams(0, 2.5, 1, 1));
    CHECK(r.open_regime);
    CHECK_FALSE(r.th3_capacity);
    CHECK_FALSE(r.pdc_capacity_known);
}

TEST_CASE("classify: closed comparisons at the thresholds")
{
    CHECK(classify(ChannelParams(0, 1.0, 2, 2)).interference_class == InterferenceClass::weak);
    const double pdc = std::sqrt(1.0 + 3.0 / (2.0 + 1.0));
    CHECK(classify(ChannelParams(0, pdc, 2, 3)).pdc_capacity_known);
    CHECK(classify(ChannelParams(0, std::sqrt(4.0), 1, 3)).cor2_dominates);
    CHECK_FALSE(classify(ChannelParams(0, 2.0, 1, 3)).cor2_dominates_exact);
}

TEST_CASE("exact dominance threshold solves its defining quadratic")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pw(0.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const double p1 = pw(rng), p2 = pw(rng);
        const double t = regime_thresholds(p1, p2).r2_dominance_exact;
        CHECK_THAT(t * t - t * std::sqrt(p1 * p2) - (1.0 + p2), WithinAbs(0.0, 1e-9 * (1.0 + t * t)));
        CHECK(t >= regime_thresholds(p1, p2).r2_dominance - 1e-12);
    }
}

TEST_CASE("superposition threshold and its squared form agree away from the boundary")
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> pw(0.0, 10.0), gain(1.0, 15.0);
    int checked = 0;
    for (int i = 0; i < 5000; ++i) {
        const double p1 = pw(rng), p2 = pw(rng), b = gain(rng);
        if (std::abs(b - regime_thresholds(p1, p2).superposition) < 1e-9) continue;
        CHECK(superposition_capacity_condition(p1, p2, b) == superposition_capacity_condition_squared(p1, p2, b));
        ++checked;
    }
    CHECK(checked > 4900);
}
