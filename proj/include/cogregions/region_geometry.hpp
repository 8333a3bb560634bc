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
 * @file region_geometry.hpp
 * @brief Two-dimensional rate regions: pentagons, frontiers and their algebra.
 *
 * A rate region is exchanged as its Pareto frontier: a polyline of (r1, r2)
 * vertices with r1 strictly increasing from 0 and r2 non-increasing. The
 * region is everything on or below the linear interpolation of the vertices.
 *
 * Unions of pentagons are evaluated exactly at a uniform r1 grid plus every
 * pentagon corner that lies on the upper envelope, so the interpolated
 * polyline never falls below the envelope at a kept vertex and only
 * overestimates it between vertices where the envelope has a convex kink.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "channel.hpp"
#include "report.hpp"

namespace cogregions {

inline constexpr double unbounded_rate = std::numeric_limits<double>::infinity();

struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;

    friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

/// Constraint triple {R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}.
///
/// The raw constraint values are kept as given; normalized() tightens them so
/// that sum <= r1 + r2, r1 <= sum and r2 <= sum.
class Pentagon {
public:
    Pentagon(double r1_max, double r2_max, double sum_max = unbounded_rate)
        : r1_(r1_max), r2_(r2_max), sum_(sum_max)
    {
        for (double v : {r1_max, r2_max, sum_max})
            if (std::isnan(v) || v < 0.0) throw PreconditionError("pentagon: constraints must be >= 0");
    }

    [[nodiscard]] double r1_max() const noexcept { return r1_; }
    [[nodiscard]] double r2_max() const noexcept { return r2_; }
    [[nodiscard]] double sum_max() const noexcept { return sum_; }

    [[nodiscard]] Pentagon normalized() const
    {
        const double s = std::min(sum_, r1_ + r2_);
        return Pentagon(std::min(r1_, s), std::min(r2_, s), s, Tight{});
    }

    [[nodiscard]] bool bounded() const
    {
        const Pentagon n = normalized();
        return std::isfinite(n.r1_) && std::isfinite(n.r2_) && std::isfinite(n.sum_);
    }

    /// Largest admissible r2 at the given r1, or -inf when r1 exceeds r1_max.
    [[nodiscard]] double r2_at(double r1) const
    {
        if (r1 > r1_) return -unbounded_rate;
        return std::max(0.0, std::min(r2_, sum_ - r1));
    }

    [[nodiscard]] bool admits(RatePoint p, double tol = 0.0) const
    {
        return p.r1 <= r1_ + tol && p.r2 <= r2_ + tol && p.r1 + p.r2 <= sum_ + tol;
    }

private:
    struct Tight {};
    Pentagon(double r1, double r2, double s, Tight) : r1_(r1), r2_(r2), sum_(s) {}

    double r1_;
    double r2_;
    double sum_;
};

/// Pareto vertices of a pentagon, ascending in r1, weakly dominated points removed.
inline std::vector<RatePoint> pentagon_corners(const Pentagon& p)
{
    const Pentagon n = p.normalized();
    if (!n.bounded()) throw PreconditionError("pentagon_corners: unbounded pentagon");
    const double a = n.r1_max();
    const double b = n.r2_max();
    const double c = n.sum_max();
    const bool rect = c >= a + b;
    std::vector<RatePoint> cand{
        {0.0, b},
        {rect ? a : std::max(0.0, std::min(a, c - b)), b},
        {a, rect ? b : std::max(0.0, std::min(b, c - a))},
        {a, 0.0},
    };
    std::vector<RatePoint> out;
    for (const auto& q : cand) {
        const bool dominated = std::any_of(cand.begin(), cand.end(), [&](const RatePoint& o) {
            return o.r1 >= q.r1 && o.r2 >= q.r2 && (o.r1 > q.r1 || o.r2 > q.r2);
        });
        if (dominated) continue;
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
    std::sort(out.begin(), out.end(), [](const RatePoint& x, const RatePoint& y) { return x.r1 < y.r1; });
    return out;
}

class Frontier {
public:
    /// Validates the monotone-polyline invariants; throws on violation.
    explicit Frontier(std::vector<RatePoint> points) : pts_(std::move(points))
    {
        if (pts_.empty()) throw PreconditionError("frontier: no points");
        if (pts_.front().r1 != 0.0) throw PreconditionError("frontier: must start at r1 = 0");
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            const auto& p = pts_[i];
            if (!std::isfinite(p.r1) || !std::isfinite(p.r2) || p.r2 < 0.0)
                throw PreconditionError("frontier: points must be finite with r2 >= 0");
            if (i > 0 && !(p.r1 > pts_[i - 1].r1))
                throw PreconditionError("frontier: r1 must be strictly increasing");
            if (i > 0 && p.r2 > pts_[i - 1].r2)
                throw PreconditionError("frontier: r2 must be non-increasing");
        }
    }

    /// Builds a frontier from unordered samples: sorts, merges samples whose
    /// r1 coincide (keeping the larger r2) and clamps r2 to its running
    /// minimum so round-off cannot break monotonicity.
    static Frontier from_samples(std::vector<RatePoint> samples, double merge_tol = 0.0)
    {
        if (samples.empty()) throw PreconditionError("frontier: no points");
        std::sort(samples.begin(), samples.end(), [](const RatePoint& x, const RatePoint& y) {
            return x.r1 < y.r1 || (x.r1 == y.r1 && x.r2 > y.r2);
        });
        std::vector<RatePoint> out;
        out.reserve(samples.size());
        for (auto p : samples) {
            p.r1 = std::max(0.0, p.r1);
            p.r2 = std::max(0.0, p.r2);
            if (!out.empty() && p.r1 - out.back().r1 <= merge_tol) {
                out.back().r2 = std::max(out.back().r2, p.r2);
                continue;
            }
            out.push_back(p);
        }
        out.front().r1 = 0.0;
        for (std::size_t i = 1; i < out.size(); ++i) out[i].r2 = std::min(out[i].r2, out[i - 1].r2);
        return Frontier(std::move(out));
    }

    [[nodiscard]] const std::vector<RatePoint>& points() const noexcept { return pts_; }
    [[nodiscard]] std::size_t size() const noexcept { return pts_.size(); }
    [[nodiscard]] double max_r1() const noexcept { return pts_.back().r1; }
    [[nodiscard]] double max_r2() const noexcept { return pts_.front().r2; }

    /// Linearly interpolated r2; -inf beyond max_r1 (a relative 1e-14 overshoot is absorbed).
    [[nodiscard]] double value_at(double r1) const
    {
        if (r1 <= 0.0) return pts_.front().r2;
        const double end = max_r1();
        if (r1 >= end) {
            return r1 <= end + 1e-14 * std::max(1.0, end) ? pts_.back().r2 : -unbounded_rate;
        }
        auto it = std::upper_bound(pts_.begin(), pts_.end(), r1,
                                   [](double x, const RatePoint& p) { return x < p.r1; });
        const RatePoint& hi = *it;
        const RatePoint& lo = *(it - 1);
        const double w = (r1 - lo.r1) / (hi.r1 - lo.r1);
        return lo.r2 + w * (hi.r2 - lo.r2);
    }

    [[nodiscard]] double max_sum_rate() const
    {
        double best = 0.0;
        for (const auto& p : pts_) best = std::max(best, p.r1 + p.r2);
        return best;
    }

private:
    std::vector<RatePoint> pts_;
};

/// Resolution of a frontier evaluation.
struct FrontierGrid {
    std::size_t points = 2001;   ///< uniform r1 samples over [0, max r1]
    bool include_corners = true; ///< also keep every pentagon corner on the envelope
};

namespace detail {

inline std::vector<double> uniform_r1(double r1_max, std::size_t n)
{
    if (n < 2) throw PreconditionError("frontier grid: resolution must be >= 2");
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = r1_max * static_cast<double>(i) / static_cast<double>(n - 1);
    xs.back() = r1_max;
    return xs;
}

/// Normalized pentagon in the form used by the envelope sweep: the flat part
/// r2 = flat on [0, knee] and the slanted part r2 = sum - r1 on [knee, reach].
struct Piece {
    double knee;
    double reach;
    double flat;
    double sum;
};

inline Piece to_piece(const Pentagon& p)
{
    const Pentagon n = p.normalized();
    if (!n.bounded()) throw PreconditionError("union_frontier: unbounded pentagon");
    // an inactive sum constraint gives a rectangle; c - b would round off the corner
    const bool rect = n.sum_max() >= n.r1_max() + n.r2_max();
    const double knee = rect ? n.r1_max() : std::clamp(n.sum_max() - n.r2_max(), 0.0, n.r1_max());
    return Piece{knee, n.r1_max(), n.r2_max(), n.sum_max()};
}

/// Exact upper envelope of the pentagon union at ascending query abscissae.
inline std::vector<double> envelope_at(std::span<const Piece> pieces, std::span<const double> xs)
{
    const std::size_t m = xs.size();
    std::vector<double> env(m, -unbounded_rate);

    std::vector<std::size_t> order(pieces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    // Flat parts: max flat over pieces with knee >= x.
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return pieces[i].knee > pieces[j].knee; });
    {
        std::size_t k = 0;
        double best = -unbounded_rate;
        for (std::size_t q = m; q-- > 0;) {
            while (k < order.size() && pieces[order[k]].knee >= xs[q]) best = std::max(best, pieces[order[k++]].flat);
            env[q] = best;
        }
    }

    // Slanted parts: max sum over pieces with knee <= x <= reach, minus x.
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return pieces[i].knee < pieces[j].knee; });
    {
        using Entry = std::pair<double, double>; // (sum, reach)
        std::priority_queue<Entry> heap;
        std::size_t k = 0;
        for (std::size_t q = 0; q < m; ++q) {
            while (k < order.size() && pieces[order[k]].knee <= xs[q]) {
                const Piece& p = pieces[order[k++]];
                heap.emplace(p.sum, p.reach);
            }
            while (!heap.empty() && heap.top().second < xs[q]) heap.pop();
            if (!heap.empty()) env[q] = std::max(env[q], heap.top().first - xs[q]);
        }
    }
    for (double& v : env)
        if (v != -unbounded_rate) v = std::max(v, 0.0);
    return env;
}

inline double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b)
{
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

} // namespace detail

/// Upper envelope of the union of pentagons; no convexification.
inline Frontier union_frontier(std::span<const Pentagon> pentagons, const FrontierGrid& grid = {})
{
    if (pentagons.empty()) throw PreconditionError("no pentagons");
    std::vector<detail::Piece> pieces;
    pieces.reserve(pentagons.size());
    double r1_max = 0.0;
    for (const auto& p : pentagons) {
        pieces.push_back(detail::to_piece(p));
        r1_max = std::max(r1_max, pieces.back().reach);
    }

    struct Candidate {
        double x;
        double corner; // NaN for uniform samples
    };
    std::vector<Candidate> cand;
    for (double x : detail::uniform_r1(r1_max, grid.points)) cand.push_back({x, std::nan("")});
    if (grid.include_corners) {
        cand.reserve(cand.size() + 2 * pieces.size());
        for (const auto& p : pieces) {
            cand.push_back({p.knee, p.flat});
            cand.push_back({p.reach, std::max(0.0, std::min(p.flat, p.sum - p.reach))});
        }
    }
    std::sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) { return x.x < y.x; });

    std::vector<double> xs;
    xs.reserve(cand.size());
    for (const auto& c : cand)
        if (xs.empty() || c.x != xs.back()) xs.push_back(c.x);
    const std::vector<double> env = detail::envelope_at(pieces, xs);

    // A corner abscissa is kept only if that corner attains the envelope.
    std::vector<char> keep(xs.size(), 0);
    std::size_t q = 0;
    for (const auto& c : cand) {
        while (xs[q] != c.x) ++q;
        if (std::isnan(c.corner) || c.corner >= env[q] - 1e-12 * std::max(1.0, env[q])) keep[q] = 1;
    }
    std::vector<RatePoint> pts;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (keep[i]) pts.push_back({xs[i], env[i]});
    return Frontier::from_samples(std::move(pts), 1e-13 * std::max(1.0, r1_max));
}

/// Upper concave hull of a point set whose leftmost points sit at r1 = 0.
inline Frontier upper_hull(std::vector<RatePoint> pts)
{
    if (pts.empty()) throw PreconditionError("upper_hull: no points");
    std::sort(pts.begin(), pts.end(), [](const RatePoint& x, const RatePoint& y) {
        return x.r1 < y.r1 || (x.r1 == y.r1 && x.r2 > y.r2);
    });
    std::vector<RatePoint> hull;
    hull.reserve(pts.size());
    for (const auto& p : pts) {
        if (!hull.empty() && hull.back().r1 == p.r1) continue;
        while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), p) >= 0.0) hull.pop_back();
        hull.push_back(p);
    }
    // The hull is non-increasing once the global maximum is its first vertex.
    auto top = std::max_element(hull.begin(), hull.end(),
                                [](const RatePoint& x, const RatePoint& y) { return x.r2 < y.r2; });
    if (top != hull.begin()) {
        const double peak = top->r2;
        hull.erase(hull.begin(), top);
        hull.insert(hull.begin(), RatePoint{0.0, peak});
    }
    return Frontier::from_samples(std::move(hull));
}

/// Upper concave envelope (time-sharing hull) of a frontier.
inline Frontier concavify(const Frontier& f)
{
    return upper_hull(f.points());
}

/// Streams pentagons into the concave hull of their union without storing them.
class HullAccumulator {
public:
    explicit HullAccumulator(std::size_t flush_every = 1u << 16) : flush_every_(flush_every) {}

    void add(const Pentagon& p)
    {
        const detail::Piece piece = detail::to_piece(p);
        top_ = std::max(top_, piece.flat);
        buf_.push_back({piece.knee, piece.flat});
        buf_.push_back({piece.reach, std::max(0.0, std::min(piece.flat, piece.sum - piece.reach))});
        if (buf_.size() >= flush_every_) flush();
    }

    void add(const HullAccumulator& other)
    {
        if (other.empty()) return;
        top_ = std::max(top_, other.top_);
        const auto pts = other.result_points();
        buf_.insert(buf_.end(), pts.begin(), pts.end());
        if (buf_.size() >= flush_every_) flush();
    }

    [[nodiscard]] bool empty() const noexcept { return buf_.empty() && hull_.empty(); }

    [[nodiscard]] Frontier result() const
    {
        if (empty()) throw PreconditionError("no pentagons");
        return upper_hull(result_points());
    }

private:
    [[nodiscard]] std::vector<RatePoint> result_points() const
    {
        std::vector<RatePoint> pts = hull_;
        pts.insert(pts.end(), buf_.begin(), buf_.end());
        if (pts.empty()) return pts;
        pts.push_back({0.0, top_});
        return upper_hull(std::move(pts)).points();
    }

    void flush()
    {
        hull_ = result_points();
        buf_.clear();
    }

    std::size_t flush_every_;
    double top_ = 0.0;
    std::vector<RatePoint> buf_;
    std::vector<RatePoint> hull_;
};

/// Pointwise minimum over the common r1 range, with exact crossing points.
inline Frontier intersect_frontiers(const Frontier& f, const Frontier& g)
{
    const double end = std::min(f.max_r1(), g.max_r1());
    std::vector<double> xs;
    for (const auto* fr : {&f, &g})
        for (const auto& p : fr->points())
            if (p.r1 <= end) xs.push_back(p.r1);
    xs.push_back(end);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<RatePoint> pts;
    pts.reserve(2 * xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d1 = f.value_at(xs[i]) - g.value_at(xs[i]);
        if (i > 0) {
            const double d0 = f.value_at(xs[i - 1]) - g.value_at(xs[i - 1]);
            if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
                const double xc = xs[i - 1] + (xs[i] - xs[i - 1]) * (d0 / (d0 - d1));
                if (xc > xs[i - 1] && xc < xs[i])
                    pts.push_back({xc, std::min(f.value_at(xc), g.value_at(xc))});
            }
        }
        pts.push_back({xs[i], std::min(f.value_at(xs[i]), g.value_at(xs[i]))});
    }
    return Frontier::from_samples(std::move(pts));
}

/// Vertical distance from outer to inner at every vertex of either frontier.
struct GapReport {
    double max_gap = 0.0;
    double max_gap_r1 = 0.0;
    double min_gap = 0.0;
    double min_gap_r1 = 0.0;
    double common_r1_max = 0.0;
    double outer_r1_max = 0.0;
    double inner_r1_max = 0.0;
    std::size_t evaluated = 0;
};

inline GapReport frontier_gap(const Frontier& outer, const Frontier& inner)
{
    GapReport r;
    r.outer_r1_max = outer.max_r1();
    r.inner_r1_max = inner.max_r1();
    r.common_r1_max = std::min(r.outer_r1_max, r.inner_r1_max);
    std::vector<double> xs;
    for (const auto* fr : {&outer, &inner})
        for (const auto& p : fr->points())
            if (p.r1 <= r.common_r1_max) xs.push_back(p.r1);
    xs.push_back(r.common_r1_max);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    r.max_gap = -unbounded_rate;
    r.min_gap = unbounded_rate;
    for (double x : xs) {
        const double g = outer.value_at(x) - inner.value_at(x);
        if (g > r.max_gap) {
            r.max_gap = g;
            r.max_gap_r1 = x;
        }
        if (g < r.min_gap) {
            r.min_gap = g;
            r.min_gap_r1 = x;
        }
    }
    r.evaluated = xs.size();
    return r;
}

/// Pass iff every inner vertex lies within tol below the interpolated outer frontier.
inline VerificationReport contains(const Frontier& outer, const Frontier& inner, double tol)
{
    double worst = -unbounded_rate;
    RatePoint where{};
    double outer_there = 0.0;
    for (const auto& p : inner.points()) {
        double v;
        const double o = outer.value_at(p.r1);
        if (o == -unbounded_rate)
            v = std::max(p.r1 - outer.max_r1(), p.r2 - outer.points().back().r2);
        else
            v = p.r2 - o;
        if (v > worst) {
            worst = v;
            where = p;
            outer_there = o;
        }
    }
    std::ostringstream os;
    os.precision(10);
    os << "r1=" << where.r1 << " inner_r2=" << where.r2 << " outer_r2=" << outer_there
       << " signed_violation=" << worst;
    return VerificationReport::make("contains", std::max(0.0, worst), tol, inner.size(), os.str());
}

/// Samples a closed-form non-increasing r2(r1) on [0, r1_max].
inline Frontier sample_frontier(const std::function<double(double)>& r2_of_r1, double r1_max,
                                const FrontierGrid& grid = {}, std::span<const double> extra_r1 = {})
{
    std::vector<RatePoint> pts;
    for (double x : detail::uniform_r1(r1_max, grid.points)) pts.push_back({x, r2_of_r1(x)});
    for (double x : extra_r1)
        if (x >= 0.0 && x <= r1_max) pts.push_back({x, r2_of_r1(x)});
    return Frontier::from_samples(std::move(pts), 1e-13 * std::max(1.0, r1_max));
}

/// Adds uniformly spaced vertices on the existing polyline (pointwise identical).
inline Frontier densify(const Frontier& f, std::size_t points)
{
    std::vector<RatePoint> pts = f.points();
    if (f.max_r1() > 0.0)
        for (double x : detail::uniform_r1(f.max_r1(), points)) pts.push_back({x, f.value_at(x)});
    return Frontier::from_samples(std::move(pts), 1e-13 * std::max(1.0, f.max_r1()));
}

} // namespace cogregions
