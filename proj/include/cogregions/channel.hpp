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

/**
 * @file channel.hpp
 * @brief Channel instance and interference-regime classification.
 *
 * The channel is the real-valued cognitive interference channel in canonical
 * form
 *
 *     Y1 = X1 + a X2 + Z1,      Y2 = b X1 + X2 + Z2,
 *
 * with unit-variance Gaussian noise, E[X1^2] <= p1 and E[X2^2] <= p2.
 * Transmitter 1 is the cognitive one: it knows both messages. All rates in
 * the library are in bits per channel use (log base 2).
 */

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cogregions {

/// Raised when an operation is called outside its domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One channel instance (a, b, p1, p2); noise variances are fixed at 1.
class ChannelParams {
public:
    ChannelParams(double a, double b, double p1, double p2)
        : a_(a), b_(b), p1_(p1), p2_(p2)
    {
        if (!std::isfinite(a)) throw PreconditionError("channel: a must be finite");
        if (!std::isfinite(b) || b < 0.0) throw PreconditionError("channel: b must be finite and >= 0");
        if (!std::isfinite(p1) || p1 < 0.0) throw PreconditionError("channel: p1 must be finite and >= 0");
        if (!std::isfinite(p2) || p2 < 0.0) throw PreconditionError("channel: p2 must be finite and >= 0");
    }

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double p1() const noexcept { return p1_; }
    [[nodiscard]] double p2() const noexcept { return p2_; }

    [[nodiscard]] bool is_z_channel_a() const noexcept { return a_ == 0.0; }

    friend bool operator==(const ChannelParams&, const ChannelParams&) = default;

private:
    double a_;
    double b_;
    double p1_;
    double p2_;
};

enum class InterferenceClass { weak, strong };
enum class ZChannel { none, a_zero, b_zero };

inline std::string_view to_string(InterferenceClass c)
{
    return c == InterferenceClass::weak ? "weak" : "strong";
}

inline std::string_view to_string(ZChannel z)
{
    switch (z) {
    case ZChannel::a_zero: return "a_zero";
    case ZChannel::b_zero: return "b_zero";
    case ZChannel::none: break;
    }
    return "none";
}

/// Gain thresholds on b that delimit the known-capacity regimes.
struct RegimeThresholds {
    double weak = 1.0;              ///< b <= 1: weak interference
    double primary_decodes = 0.0;   ///< sqrt(1 + p2/(p1+1))
    double r2_dominance = 0.0;      ///< nominal sqrt(p2+1)
    double r2_dominance_exact = 0.0;///< root of b^2 - b sqrt(p1 p2) - (1+p2) = 0
    double superposition = 0.0;     ///< sqrt(1 + p2(1+p1)) + sqrt(p1 p2)
};

inline RegimeThresholds regime_thresholds(double p1, double p2)
{
    RegimeThresholds t;
    t.primary_decodes = std::sqrt(1.0 + p2 / (p1 + 1.0));
    t.r2_dominance = std::sqrt(p2 + 1.0);
    const double g = std::sqrt(p1 * p2);
    t.r2_dominance_exact = 0.5 * (g + std::sqrt(g * g + 4.0 * (1.0 + p2)));
    t.superposition = std::sqrt(1.0 + p2 * (1.0 + p1)) + g;
    return t;
}

/// The nominal closed condition b >= sqrt(p2 + 1) under which the BC-DMS
/// R2 bound is claimed to dominate the strong-interference sum bound.
inline bool r2_dominance_condition(double p1, double p2, double b)
{
    return b >= regime_thresholds(p1, p2).r2_dominance;
}

/// The exact version: for all alpha, R1 + R2 bounds add up below the sum
/// bound iff b^2 >= 1 + p2 + b sqrt(p1 p2) (the alpha -> 0 limit binds).
/// The nominal threshold is necessary but not sufficient.
inline bool r2_dominance_condition_exact(double p1, double p2, double b)
{
    return b * b >= 1.0 + p2 + b * std::sqrt(p1 * p2);
}

/// Superposition coding meets the Z-channel BC-DMS bound when this holds.
inline bool superposition_capacity_condition(double p1, double p2, double b)
{
    return b >= regime_thresholds(p1, p2).superposition;
}

/// Equivalent squared form b^2 >= 1 + p2 + 2 sqrt(b^2 p1 p2).
inline bool superposition_capacity_condition_squared(double p1, double p2, double b)
{
    return b * b >= 1.0 + p2 + 2.0 * std::sqrt(b * b * p1 * p2);
}

struct RegimeReport {
    InterferenceClass interference_class = InterferenceClass::weak;
    ZChannel z_channel = ZChannel::none;
    bool pdc_capacity_known = false;
    bool cor2_dominates = false;
    bool cor2_dominates_exact = false;
    bool th3_capacity = false;
    bool open_regime = false;
    RegimeThresholds thresholds;
};

/// Direct threshold comparisons; all conditions are closed (>=, <=).
inline RegimeReport classify(const ChannelParams& params)
{
    const double a = params.a();
    const double b = params.b();
    RegimeReport r;
    r.thresholds = regime_thresholds(params.p1(), params.p2());
    r.interference_class = b <= r.thresholds.weak ? InterferenceClass::weak : InterferenceClass::strong;
    if (b == 0.0)
        r.z_channel = ZChannel::b_zero;
    else if (a == 0.0)
        r.z_channel = ZChannel::a_zero;

    r.pdc_capacity_known = a == 0.0 && b <= r.thresholds.primary_decodes;
    r.cor2_dominates = b >= r.thresholds.r2_dominance;
    r.cor2_dominates_exact = r2_dominance_condition_exact(params.p1(), params.p2(), b);
    r.th3_capacity = a == 0.0 && b >= r.thresholds.superposition;
    r.open_regime = a == 0.0 && b > r.thresholds.primary_decodes && b < r.thresholds.superposition;
    return r;
}

} // namespace cogregions
