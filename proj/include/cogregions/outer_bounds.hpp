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
 * @file outer_bounds.hpp
 * @brief Outer bounds on the capacity region.
 *
 * Every bound here is a union over one or more power-split parameters of
 * pentagons. Outer bounds are returned as raw unions; the one exception is
 * the BC-DMS region, whose grid union is accumulated as a concave hull (the
 * degraded-message-set capacity region is convex, and a hull over millions
 * of splits can be streamed without storing them).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "channel.hpp"
#include "grid.hpp"
#include "parallel.hpp"
#include "region_geometry.hpp"

namespace cogregions {

namespace detail {

inline void check_unit(double v, const char* what)
{
    if (!(v >= 0.0 && v <= 1.0)) throw PreconditionError(std::string(what) + " must lie in [0, 1]");
}

/// h M h^T for a 2-vector h, clamped at 0 against round-off.
inline double quad(const Eigen::Vector2d& h, const Eigen::Matrix2d& m)
{
    return std::max(0.0, h.dot(m * h));
}

} // namespace detail

/// Unifying bound: R1 <= log(1 + alpha p1),
/// R2 <= log(1 + b^2 p1 + p2 + 2 sqrt((1-alpha) b^2 p1 p2)),
/// R1 + R2 <= the same + [log(1 + alpha p1) - log(1 + b^2 alpha p1)]^+.
inline Pentagon unifying_bound(const ChannelParams& ch, double alpha)
{
    detail::check_unit(alpha, "alpha");
    const double p1 = ch.p1();
    const double p2 = ch.p2();
    const double b2 = ch.b() * ch.b();
    const double r1 = std::log2(1.0 + alpha * p1);
    const double joint = std::log2(1.0 + b2 * p1 + p2 + 2.0 * std::sqrt((1.0 - alpha) * b2 * p1 * p2));
    const double excess = std::max(0.0, r1 - std::log2(1.0 + b2 * alpha * p1));
    return Pentagon(r1, joint, joint + excess);
}

/// Degraded broadcast channel with receiver 2 the stronger one (p2 = 0 reference).
inline Pentagon bergmans_region(double p1, double b, double alpha)
{
    detail::check_unit(alpha, "alpha");
    if (!(p1 >= 0.0) || !std::isfinite(p1)) throw PreconditionError("p1 must be finite and >= 0");
    const double abar = 1.0 - alpha;
    return Pentagon(std::log2(1.0 + alpha * p1 / (abar * p1 + 1.0)), std::log2(1.0 + b * b * abar * p1));
}

/// Degraded-message-set bound for the channel with a = 0 and b >= 1.
inline Pentagon cor2_bound(const ChannelParams& ch, double alpha)
{
    if (ch.a() != 0.0 || ch.b() < 1.0)
        throw PreconditionError("Z-channel BC-DMS bound requires a = 0 and b >= 1");
    detail::check_unit(alpha, "alpha");
    const double p1 = ch.p1();
    const double p2 = ch.p2();
    const double b2 = ch.b() * ch.b();
    const double abar = 1.0 - alpha;
    const double amp = std::sqrt(p2) + std::sqrt(b2 * p1 * abar / (1.0 + alpha * p1));
    return Pentagon(std::log2(1.0 + alpha * p1), std::log2(1.0 + amp * amp),
                    std::log2(1.0 + p2 + b2 * p1 + 2.0 * std::sqrt(abar * b2 * p1 * p2)));
}

/// Power-split and correlation parameters of the covariance split S = B1 + B2.
struct CovarianceSplit {
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    double rho1 = 0.0;
    double rho2 = 0.0;

    void validate() const
    {
        detail::check_unit(alpha1, "alpha1");
        detail::check_unit(alpha2, "alpha2");
        if (!(std::abs(rho1) <= 1.0) || !(std::abs(rho2) <= 1.0))
            throw PreconditionError("covariance split: correlations must lie in [-1, 1]");
        if (!(std::abs(rho()) <= 1.0 + 1e-12))
            throw PreconditionError("covariance split: overall correlation exceeds 1");
    }

    /// Overall input correlation of X = U + V.
    [[nodiscard]] double rho() const
    {
        return rho1 * std::sqrt(alpha1 * alpha2) + rho2 * std::sqrt((1.0 - alpha1) * (1.0 - alpha2));
    }

    [[nodiscard]] Eigen::Matrix2d b1(double p1, double p2) const { return block(alpha1, alpha2, rho1, p1, p2); }
    [[nodiscard]] Eigen::Matrix2d b2(double p1, double p2) const
    {
        return block(1.0 - alpha1, 1.0 - alpha2, rho2, p1, p2);
    }

private:
    static Eigen::Matrix2d block(double f1, double f2, double r, double p1, double p2)
    {
        Eigen::Matrix2d m;
        const double c = r * std::sqrt(f1 * p1 * f2 * p2);
        m << f1 * p1, c, c, f2 * p2;
        return m;
    }
};

/// Grid over (alpha1, alpha2, rho1, rho2): uniform, endpoints included.
struct SplitGrid {
    std::size_t alpha1 = 21;
    std::size_t alpha2 = 21;
    std::size_t rho1 = 21;
    std::size_t rho2 = 21;

    static SplitGrid cube(std::size_t n) { return {n, n, n, n}; }

    void validate() const
    {
        for (std::size_t n : {alpha1, alpha2, rho1, rho2})
            if (n < 2) throw PreconditionError("split grid: every axis needs >= 2 points");
    }

    [[nodiscard]] std::size_t size() const { return alpha1 * alpha2 * rho1 * rho2; }
};

namespace detail {

struct DpcRates {
    double common;       ///< I(U; Y1), private layer treated as noise
    double private2;     ///< I(X; Y2 | U)
    double joint2;       ///< I(X; Y2)
    double mirror1;      ///< order with user 1 encoded last: log(1 + h1 B2 h1^T)
    double mirror2;      ///< and user 2 treating B2 as noise
};

inline DpcRates dpc_rates(const ChannelParams& ch, const CovarianceSplit& s)
{
    const Eigen::Vector2d h1(1.0, ch.a());
    const Eigen::Vector2d h2(ch.b(), 1.0);
    const Eigen::Matrix2d m1 = s.b1(ch.p1(), ch.p2());
    const Eigen::Matrix2d m2 = s.b2(ch.p1(), ch.p2());
    const double q11 = quad(h1, m1);
    const double q12 = quad(h1, m2);
    const double q21 = quad(h2, m1);
    const double q22 = quad(h2, m2);
    const double q2s = quad(h2, m1 + m2);
    return DpcRates{std::log2(1.0 + q11 / (1.0 + q12)), std::log2(1.0 + q22), std::log2(1.0 + q2s),
                    std::log2(1.0 + q12), std::log2(1.0 + q21 / (1.0 + q22))};
}

/// Visits every split of the grid, chunked by alpha1 index, and reduces the
/// per-chunk hulls in chunk order.
template <class Visit>
Frontier split_hull(const ChannelParams& ch, const SplitGrid& grid, Visit visit)
{
    grid.validate();
    const auto a1 = Grid1D{grid.alpha1}.unit();
    const auto a2 = Grid1D{grid.alpha2}.unit();
    const auto r1 = Grid1D{grid.rho1}.nodes(-1.0, 1.0);
    const auto r2 = Grid1D{grid.rho2}.nodes(-1.0, 1.0);
    std::vector<HullAccumulator> partial(a1.size());
    parallel_for(a1.size(), [&](std::size_t i) {
        HullAccumulator acc;
        for (double x2 : a2)
            for (double c1 : r1)
                for (double c2 : r2) {
                    const CovarianceSplit s{a1[i], x2, c1, c2};
                    visit(acc, dpc_rates(ch, s));
                }
        partial[i] = std::move(acc);
    });
    HullAccumulator total;
    for (const auto& acc : partial) total.add(acc);
    return total.result();
}

} // namespace detail

/// Degraded-message-set pentagon for one Gaussian covariance split:
/// R1 <= I(U;Y1), R2 <= I(X;Y2|U), R1 + R2 <= I(X;Y2).
inline Pentagon bc_dms_pentagon(const ChannelParams& ch, const CovarianceSplit& split)
{
    split.validate();
    const detail::DpcRates r = detail::dpc_rates(ch, split);
    return Pentagon(r.common, r.private2, r.joint2);
}

/// Concave hull of bc_dms_pentagon over the split grid.
inline Frontier bc_dms_region(const ChannelParams& ch, const SplitGrid& grid = {})
{
    if (ch.b() < 1.0) throw PreconditionError("BC-DMS region requires b >= 1");
    return detail::split_hull(ch, grid, [](HullAccumulator& acc, const detail::DpcRates& r) {
        acc.add(Pentagon(r.common, r.private2, r.joint2));
    });
}

inline Frontier unifying_region(const ChannelParams& ch, const Grid1D& alpha_grid = {},
                                const FrontierGrid& fgrid = {})
{
    std::vector<Pentagon> ps;
    for (double a : alpha_grid.unit()) ps.push_back(unifying_bound(ch, a));
    return union_frontier(ps, fgrid);
}

inline Frontier bergmans_frontier(double p1, double b, const Grid1D& alpha_grid = {},
                                  const FrontierGrid& fgrid = {})
{
    std::vector<Pentagon> ps;
    for (double a : alpha_grid.unit()) ps.push_back(bergmans_region(p1, b, a));
    return union_frontier(ps, fgrid);
}

inline Frontier cor2_region(const ChannelParams& ch, const Grid1D& alpha_grid = {},
                            const FrontierGrid& fgrid = {})
{
    std::vector<Pentagon> ps;
    for (double a : alpha_grid.unit()) ps.push_back(cor2_bound(ch, a));
    return union_frontier(ps, fgrid);
}

/// R2 bound of cor2_bound as a function of R1 (sum constraint dropped):
/// alpha(r1) = (2^r1 - 1)/p1 turns the union of rectangles into a curve.
inline double cor2_private_r2(const ChannelParams& ch, double r1)
{
    const double p1 = ch.p1();
    const double alpha = p1 > 0.0 ? std::clamp((std::exp2(r1) - 1.0) / p1, 0.0, 1.0) : 1.0;
    return cor2_bound(ch, alpha).r2_max();
}

/// Closed-form frontier of the union over alpha of {R1 <= A(alpha), R2 <= B(alpha)}.
inline Frontier cor2_private_frontier(const ChannelParams& ch, const FrontierGrid& fgrid = {})
{
    const double r1_max = std::log2(1.0 + ch.p1());
    (void)cor2_bound(ch, 1.0); // precondition check
    return sample_frontier([&](double r1) { return cor2_private_r2(ch, r1); }, r1_max, fgrid);
}

/// Intersection of the BC-DMS region with the unifying bound; needs b > 1.
inline Frontier th1_bound(const ChannelParams& ch, const SplitGrid& split_grid = {},
                          const Grid1D& alpha_grid = {}, const FrontierGrid& fgrid = {})
{
    if (!(ch.b() > 1.0)) throw PreconditionError("BC-DMS intersection bound requires b > 1 (strong interference)");
    return intersect_frontiers(bc_dms_region(ch, split_grid), unifying_region(ch, alpha_grid, fgrid));
}

/// Private-rates broadcast region (both encoding orders, concave hull)
/// intersected with the unifying bound.
inline Frontier bc_pr_bound(const ChannelParams& ch, const SplitGrid& split_grid = {},
                            const Grid1D& alpha_grid = {}, const FrontierGrid& fgrid = {})
{
    const Frontier pr = detail::split_hull(ch, split_grid, [](HullAccumulator& acc, const detail::DpcRates& r) {
        acc.add(Pentagon(r.common, r.private2));
        acc.add(Pentagon(r.mirror1, r.mirror2));
    });
    return intersect_frontiers(pr, unifying_region(ch, alpha_grid, fgrid));
}

} // namespace cogregions
