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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <cogregions/region_geometry.hpp>

using namespace cogregions;
using Catch::Matchers::WithinAbs;

namespace {

// Random pentagons with occasional degenerate or inactive constraints.
struct PentagonGen {
    std::mt19937_64 rng;
    explicit PentagonGen(std::uint64_t seed) : rng(seed) {}

    Pentagon next()
    {
        std::uniform_real_distribution<double> u(0.0, 5.0);
        std::uniform_int_distribution<int> kind(0, 9);
        const double a = kind(rng) == 0 ? 0.0 : u(rng);
        const double b = kind(rng) == 0 ? 0.0 : u(rng);
        const int k = kind(rng);
        const double c = k < 2 ? unbounded_rate : std::uniform_real_distribution<double>(0.0, a + b + 1.0)(rng);
        return Pentagon(a, b, c);
    }

    std::vector<Pentagon> set()
    {
        std::uniform_int_distribution<int> n(1, 12);
        std::vector<Pentagon> ps;
        for (int i = n(rng); i > 0; --i) ps.push_back(next());
        // keep the union non-degenerate in r1
        if (std::all_of(ps.begin(), ps.end(), [](const Pentagon& p) { return p.normalized().r1_max() == 0.0; }))
            ps.push_back(Pentagon(1.0, 1.0));
        return ps;
    }
};

// Brute-force envelope: max over pentagons of the admissible r2 at x.
double brute_envelope(const std::vector<Pentagon>& ps, double x)
{
    double best = -unbounded_rate;
    for (const auto& p : ps) best = std::max(best, p.normalized().r2_at(x));
    return best;
}

bool is_concave(const Frontier& f, double tol)
{
    const auto& p = f.points();
    for (std::size_t i = 2; i < p.size(); ++i) {
        const double s0 = (p[i - 1].r2 - p[i - 2].r2) / (p[i - 1].r1 - p[i - 2].r1);
        const double s1 = (p[i].r2 - p[i - 1].r2) / (p[i].r1 - p[i - 1].r1);
        if (s1 > s0 + tol) return false;
    }
    return true;
}

} // namespace

TEST_CASE("pentagon rejects negative constraints and normalizes")
{
    CHECK_THROWS_AS(Pentagon(-1, 1, 1), PreconditionError);
    CHECK_THROWS_AS(Pentagon(1, std::nan(""), 1), PreconditionError);
    const Pentagon n = Pentagon(3, 4, 2).normalized();
    CHECK(n.r1_max() == 2);
    CHECK(n.r2_max() == 2);
    CHECK(n.sum_max() == 2);
    const Pentagon r = Pentagon(1, 1).normalized();
    CHECK(r.sum_max() == 2);
    CHECK(r.bounded());
    CHECK_FALSE(Pentagon(unbounded_rate, 1).bounded());
}

TEST_CASE("pentagon corners")
{
    SECTION("symmetric pentagon")
    {
        const auto c = pentagon_corners(Pentagon(1, 1, 1.5));
        REQUIRE(c.size() == 2);
        CHECK(c[0] == RatePoint{0.5, 1.0});
        CHECK(c[1] == RatePoint{1.0, 0.5});
    }
    SECTION("inactive sum constraint gives one corner")
    {
        const auto c = pentagon_corners(Pentagon(1, 1, 3));
        REQUIRE(c.size() == 1);
        CHECK(c[0] == RatePoint{1.0, 1.0});
    }
    SECTION("sum constraint equal to the R2 constraint")
    {
        const double a = std::log2(6.0), s = std::log2(501.0);
        const auto c = pentagon_corners(Pentagon(a, s, s));
        REQUIRE(c.size() == 2);
        CHECK(c[0] == RatePoint{0.0, s});
        CHECK(c[1].r1 == a);
        CHECK_THAT(c[1].r2, WithinAbs(s - a, 1e-15));
        CHECK_THAT(c[1].r2, WithinAbs(6.384, 1e-3));
    }
    SECTION("degenerate pentagons")
    {
        CHECK(pentagon_corners(Pentagon(0, 0, 0)) == std::vector<RatePoint>{{0, 0}});
        CHECK(pentagon_corners(Pentagon(2, 0)) == std::vector<RatePoint>{{2, 0}});
    }
}

TEST_CASE("frontier invariants are enforced")
{
    CHECK_THROWS_AS(Frontier({}), PreconditionError);
    CHECK_THROWS_AS(Frontier({{0.1, 1.0}}), PreconditionError);
    CHECK_THROWS_AS(Frontier({{0, 1}, {0, 0.5}}), PreconditionError);
    CHECK_THROWS_AS(Frontier({{0, 1}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(Frontier({{0, -1}}), PreconditionError);
    const Frontier f({{0, 2}, {1, 2}, {2, 0}});
    CHECK(f.value_at(0.5) == 2);
    CHECK(f.value_at(1.5) == 1);
    CHECK(f.value_at(2.0) == 0);
    CHECK(f.value_at(2.1) == -unbounded_rate);
    CHECK(f.max_sum_rate() == 3);
}

TEST_CASE("union of pentagons")
{
    SECTION("no pentagons")
    {
        CHECK_THROWS_WITH(union_frontier(std::vector<Pentagon>{}), "no pentagons");
    }
    SECTION("single rectangle is a horizontal segment")
    {
        const std::vector<Pentagon> ps{Pentagon(1, 1)};
        const Frontier f = union_frontier(ps);
        CHECK(f.points().front() == RatePoint{0, 1});
        CHECK(f.points().back() == RatePoint{1, 1});
        for (const auto& p : f.points()) CHECK(p.r2 == 1.0);
    }
    SECTION("two rectangles give a staircase")
    {
        const std::vector<Pentagon> ps{Pentagon(1, 2), Pentagon(2, 1)};
        const Frontier f = union_frontier(ps, FrontierGrid{2001, true});
        CHECK(f.value_at(0.0) == 2);
        CHECK(f.value_at(1.0) == 2);
        CHECK(f.value_at(1.5) == 1);
        CHECK(f.value_at(2.0) == 1);
        CHECK(f.max_r1() == 2);
        // the step lies within one grid cell of r1 = 1
        CHECK(f.value_at(1.0 + 2.0 / 2000) == 1);
    }
    SECTION("unbounded pentagons are rejected")
    {
        const std::vector<Pentagon> ps{Pentagon(unbounded_rate, 1)};
        CHECK_THROWS_AS(union_frontier(ps), PreconditionError);
    }
}

TEST_CASE("union frontier is exact at every vertex and dominates every corner")
{
    PentagonGen gen(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto ps = gen.set();
        const Frontier f = union_frontier(ps, FrontierGrid{101, true});
        for (const auto& v : f.points()) REQUIRE_THAT(v.r2, WithinAbs(brute_envelope(ps, v.r1), 1e-12));
        for (const auto& p : ps)
            for (const auto& c : pentagon_corners(p)) REQUIRE(f.value_at(c.r1) >= c.r2 - 1e-12);
    }
}

TEST_CASE("interpolated union frontier never falls below the true envelope")
{
    PentagonGen gen(102);
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto ps = gen.set();
        const Frontier f = union_frontier(ps, FrontierGrid{51, true});
        std::uniform_real_distribution<double> x(0.0, f.max_r1());
        for (int k = 0; k < 20; ++k) {
            const double q = x(rng);
            REQUIRE(f.value_at(q) >= brute_envelope(ps, q) - 1e-12);
        }
    }
}

TEST_CASE("concavify")
{
    SECTION("hull of a staircase joins its corners")
    {
        const std::vector<Pentagon> ps{Pentagon(1, 2), Pentagon(2, 1)};
        const Frontier h = concavify(union_frontier(ps));
        CHECK(h.points() == std::vector<RatePoint>{{0, 2}, {1, 2}, {2, 1}});
        CHECK_THAT(h.value_at(1.5), WithinAbs(1.5, 1e-15));
    }
    SECTION("concave input is returned unchanged")
    {
        const Frontier f({{0, 3}, {1, 2.5}, {2, 1.5}, {3, 0}});
        CHECK(concavify(f).points() == f.points());
    }
}

TEST_CASE("concavify is idempotent, concave and dominates its input")
{
    PentagonGen gen(104);
    for (int trial = 0; trial < 1000; ++trial) {
        const Frontier f = union_frontier(gen.set(), FrontierGrid{101, true});
        const Frontier h = concavify(f);
        const Frontier hh = concavify(h);
        REQUIRE(hh.size() == h.size());
        for (std::size_t i = 0; i < h.size(); ++i) {
            REQUIRE(hh.points()[i].r1 == h.points()[i].r1);
            REQUIRE_THAT(hh.points()[i].r2, WithinAbs(h.points()[i].r2, 1e-12));
        }
        REQUIRE(is_concave(h, 1e-9));
        REQUIRE(h.max_r1() == f.max_r1());
        for (const auto& p : f.points()) REQUIRE(h.value_at(p.r1) >= p.r2 - 1e-12);
    }
}

TEST_CASE("hull accumulator matches the hull of the union regardless of flush size")
{
    PentagonGen gen(105);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ps = gen.set();
        HullAccumulator small(4), large;
        for (const auto& p : ps) {
            small.add(p);
            large.add(p);
        }
        const Frontier ref = concavify(union_frontier(ps, FrontierGrid{11, true}));
        for (const Frontier& f : {small.result(), large.result()}) {
            for (const auto& v : ref.points()) REQUIRE_THAT(f.value_at(v.r1), WithinAbs(v.r2, 1e-12));
            for (const auto& v : f.points()) REQUIRE_THAT(ref.value_at(v.r1), WithinAbs(v.r2, 1e-12));
        }
    }
}

TEST_CASE("intersection")
{
    SECTION("with itself")
    {
        const Frontier f({{0, 3}, {1, 2.5}, {2, 0.5}});
        CHECK(intersect_frontiers(f, f).points() == f.points());
    }
    SECTION("two rectangles")
    {
        const Frontier f({{0, 1}, {1, 1}});
        const Frontier g({{0, 0.5}, {2, 0.5}});
        CHECK(intersect_frontiers(f, g).points() == std::vector<RatePoint>{{0, 0.5}, {1, 0.5}});
    }
    SECTION("crossing segments meet at the exact crossing point")
    {
        const Frontier f({{0, 2}, {2, 0}});
        const Frontier g({{0, 1}, {2, 1}});
        const Frontier m = intersect_frontiers(f, g);
        CHECK(m.points() == std::vector<RatePoint>{{0, 1}, {1, 1}, {2, 0}});
    }
}

TEST_CASE("intersection is commutative and below both arguments")
{
    PentagonGen gen(106);
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 1000; ++trial) {
        const Frontier f = union_frontier(gen.set(), FrontierGrid{41, true});
        const Frontier g = union_frontier(gen.set(), FrontierGrid{41, true});
        const Frontier fg = intersect_frontiers(f, g);
        const Frontier gf = intersect_frontiers(g, f);
        REQUIRE(fg.size() == gf.size());
        for (std::size_t i = 0; i < fg.size(); ++i) {
            REQUIRE_THAT(fg.points()[i].r1, WithinAbs(gf.points()[i].r1, 1e-12));
            REQUIRE_THAT(fg.points()[i].r2, WithinAbs(gf.points()[i].r2, 1e-12));
        }
        REQUIRE(fg.max_r1() == std::min(f.max_r1(), g.max_r1()));
        std::uniform_real_distribution<double> x(0.0, fg.max_r1());
        for (int k = 0; k < 20; ++k) {
            const double q = x(rng);
            REQUIRE(fg.value_at(q) <= f.value_at(q) + 1e-12);
            REQUIRE(fg.value_at(q) <= g.value_at(q) + 1e-12);
            REQUIRE_THAT(fg.value_at(q), WithinAbs(std::min(f.value_at(q), g.value_at(q)), 1e-9));
        }
        REQUIRE(contains(f, fg, 1e-12).passed);
        REQUIRE(contains(g, fg, 1e-12).passed);
    }
}

TEST_CASE("containment")
{
    const Frontier f({{0, 3}, {1, 2.5}, {2, 0.5}});
    SECTION("reflexive at zero tolerance")
    {
        const auto r = contains(f, f, 0.0);
        CHECK(r.passed);
        CHECK(r.max_discrepancy == 0.0);
    }
    SECTION("violation is reported with its size")
    {
        const Frontier g({{0, 3}, {1, 2.75}, {2, 0.5}});
        const auto r = contains(f, g, 0.1);
        CHECK_FALSE(r.passed);
        CHECK_THAT(r.max_discrepancy, WithinAbs(0.25, 1e-15));
        CHECK(contains(g, f, 0.0).passed);
    }
    SECTION("an inner frontier reaching past the outer one fails")
    {
        const Frontier g({{0, 0.1}, {2.5, 0.1}});
        const auto r = contains(f, g, 1e-9);
        CHECK_FALSE(r.passed);
        CHECK_THAT(r.max_discrepancy, WithinAbs(0.5, 1e-15));
    }
}

TEST_CASE("containment is reflexive on random frontiers")
{
    PentagonGen gen(108);
    for (int trial = 0; trial < 1000; ++trial) {
        const Frontier f = union_frontier(gen.set(), FrontierGrid{41, true});
        REQUIRE(contains(f, f, 0.0).passed);
        // hull lines are re-interpolated, so allow rounding
        const auto r = contains(concavify(f), f, 1e-12);
        INFO(r.worst_case);
        REQUIRE(r.passed);
    }
}

TEST_CASE("gap report and sampling helpers")
{
    const Frontier outer({{0, 2}, {2, 0}});
    const Frontier inner({{0, 1}, {1, 1}});
    const GapReport g = frontier_gap(outer, inner);
    CHECK(g.common_r1_max == 1.0);
    CHECK(g.max_gap == 1.0);
    CHECK(g.max_gap_r1 == 0.0);
    CHECK(g.min_gap == 0.0);
    CHECK(g.min_gap_r1 == 1.0);

    const Frontier s = sample_frontier([](double x) { return 4.0 - x * x; }, 2.0, FrontierGrid{5, false});
    CHECK(s.size() == 5);
    CHECK(s.value_at(1.0) == 3.0);
    const Frontier d = densify(outer, 11);
    CHECK(d.size() == 11);
    CHECK_THAT(d.value_at(0.3), WithinAbs(1.7, 1e-15));
}

TEST_CASE("rectangle corner survives the sample merge")
{
    // (a + b) - b rounds one ulp below a for these values
    const double a = 2.1492582437539154, b = 2.5110820236539069;
    REQUIRE((a + b) - b != a);
    const std::vector<Pentagon> ps{Pentagon(a, b), Pentagon(3.3, 0.5, 3.8)};
    const Frontier f = union_frontier(ps, FrontierGrid{101, true});
    CHECK(f.value_at(a) >= b - 1e-12);
    for (const auto& c : pentagon_corners(ps[0])) CHECK(c.r1 <= a);
    CHECK(pentagon_corners(ps[0]).back().r1 == a);
}
