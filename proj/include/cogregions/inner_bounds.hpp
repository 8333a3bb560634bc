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
 * @file inner_bounds.hpp
 * @brief Achievable regions and the regimes where capacity is known.
 *
 * The superposition scheme sends X1 = sqrt((1-beta) p1 / p2) X2 + sqrt(beta p1) U,
 * so the cognitive transmitter spends a fraction 1 - beta of its power
 * amplifying the primary codeword and beta on a private layer U. Inner-bound
 * regions are always concavified (time sharing is achievable).
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "channel.hpp"
#include "grid.hpp"
#include "outer_bounds.hpp"
#include "region_geometry.hpp"

namespace cogregions {

/// Inverse of alpha = beta / (1 + (1 - beta) p1): beta = alpha (1 + p1) / (1 + alpha p1).
inline double beta_of_alpha(double alpha, double p1)
{
    detail::check_unit(alpha, "alpha");
    if (!(p1 >= 0.0) || !std::isfinite(p1)) throw PreconditionError("p1 must be finite and >= 0");
    return alpha * (1.0 + p1) / (1.0 + alpha * p1);
}

namespace detail {

struct Triple {
    double r1, r2, sum;
};

/// Superposition constraints with receiver 1 seeing interference power
/// `interference` from the amplified primary codeword.
inline Triple superposition(double p1, double p2, double b, double beta, double interference)
{
    const double coop = std::sqrt((1.0 - beta) * b * b * p1);
    const double amp = std::sqrt(p2) + coop;
    return Triple{std::log2(1.0 + beta * p1 / (1.0 + interference)), std::log2(1.0 + amp * amp),
                  std::log2(1.0 + p2 + b * b * p1 + 2.0 * std::sqrt((1.0 - beta) * b * b * p1 * p2))};
}

inline void check_superposition(const ChannelParams& ch, double beta)
{
    check_unit(beta, "beta");
    if (ch.p2() == 0.0 && beta < 1.0) throw PreconditionError("degenerate superposition: set beta=1");
}

} // namespace detail

/// Superposition pentagon for a = 0.
inline Pentagon scheme_e_pentagon(const ChannelParams& ch, double beta)
{
    if (ch.a() != 0.0) throw PreconditionError("superposition pentagon requires a = 0 (use the general form)");
    detail::check_superposition(ch, beta);
    const auto t = detail::superposition(ch.p1(), ch.p2(), ch.b(), beta, (1.0 - beta) * ch.p1());
    return Pentagon(t.r1, t.r2, t.sum);
}

/// Same encoder for any a; receiver 1 treats the amplified primary codeword
/// (gain sqrt((1-beta) p1 / p2) + a on X2) as noise.
inline Pentagon scheme_e_general_pentagon(const ChannelParams& ch, double beta)
{
    if (ch.a() == 0.0) return scheme_e_pentagon(ch, beta);
    detail::check_superposition(ch, beta);
    const double amp = std::sqrt((1.0 - beta) * ch.p1()) + ch.a() * std::sqrt(ch.p2());
    const auto t = detail::superposition(ch.p1(), ch.p2(), ch.b(), beta, amp * amp);
    return Pentagon(t.r1, t.r2, t.sum);
}

/// Concavified union of superposition pentagons over the given beta values.
/// With p2 = 0 only beta = 1 carries a valid encoder, so the region is that pentagon.
inline Frontier scheme_e_region(const ChannelParams& ch, std::span<const double> betas,
                                const FrontierGrid& fgrid = {})
{
    std::vector<Pentagon> ps;
    if (ch.p2() == 0.0) {
        ps.push_back(scheme_e_general_pentagon(ch, 1.0));
    } else {
        ps.reserve(betas.size());
        for (double beta : betas) ps.push_back(scheme_e_general_pentagon(ch, beta));
    }
    return concavify(union_frontier(ps, fgrid));
}

inline Frontier scheme_e_region(const ChannelParams& ch, const Grid1D& beta_grid = {},
                                const FrontierGrid& fgrid = {})
{
    const auto betas = beta_grid.unit();
    return scheme_e_region(ch, std::span<const double>(betas), fgrid);
}

enum class CapacityStatus { exact, open };

inline std::string_view to_string(CapacityStatus s)
{
    return s == CapacityStatus::exact ? "exact" : "open";
}

struct CapacityOptions {
    Grid1D alpha_grid{};
    Grid1D beta_grid{};
    SplitGrid split_grid{};
    FrontierGrid frontier_grid{};
};

struct CapacityResult {
    CapacityStatus status = CapacityStatus::open;
    std::string regime;               ///< which known-capacity result applies, or "open"
    std::optional<Frontier> exact;    ///< set iff status == exact
    std::optional<Frontier> inner;    ///< set iff status == open
    std::optional<Frontier> outer;    ///< set iff status == open
};

/// Exact capacity frontier where known; otherwise the best inner and
/// tightest outer frontiers available here.
inline CapacityResult capacity_region(const ChannelParams& ch, const CapacityOptions& opt = {})
{
    CapacityResult res;
    const RegimeReport reg = classify(ch);
    auto exact = [&](std::string regime, Frontier f) {
        res.status = CapacityStatus::exact;
        res.regime = std::move(regime);
        res.exact = std::move(f);
        return res;
    };

    if (ch.b() == 0.0) {
        const double r1 = std::log2(1.0 + ch.p1());
        const double r2 = std::log2(1.0 + ch.p2());
        std::vector<RatePoint> pts{{0.0, r2}};
        if (r1 > 0.0) pts.push_back({r1, r2});
        return exact("b_zero", Frontier(std::move(pts)));
    }
    if (ch.b() <= 1.0)
        return exact("weak_interference", concavify(unifying_region(ch, opt.alpha_grid, opt.frontier_grid)));
    if (reg.pdc_capacity_known)
        return exact("primary_decodes", concavify(unifying_region(ch, opt.alpha_grid, opt.frontier_grid)));
    if (reg.th3_capacity) return exact("superposition", cor2_private_frontier(ch, opt.frontier_grid));

    res.status = CapacityStatus::open;
    res.regime = "open";
    res.inner = scheme_e_region(ch, opt.beta_grid, opt.frontier_grid);
    // Every superposition pentagon is the split (beta, 0, *, 1); putting the beta grid on
    // the alpha1 axis makes the computed outer frontier dominate the computed inner one.
    SplitGrid split = opt.split_grid;
    if (opt.beta_grid.spacing == Spacing::uniform) split.alpha1 = opt.beta_grid.n;
    res.outer = th1_bound(ch, split, opt.alpha_grid, opt.frontier_grid);
    return res;
}

} // namespace cogregions
