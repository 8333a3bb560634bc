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
 * @file oracles.hpp
 * @brief Independent numerical checks of the closed-form rate expressions.
 *
 * Monte Carlo checks draw a fixed number of shards, each seeded from the
 * master seed and its shard index through std::seed_seq, and reduce the
 * shard sums in index order. Reports are therefore identical for a given
 * seed regardless of how many threads run the shards.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "channel.hpp"
#include "grid.hpp"
#include "inner_bounds.hpp"
#include "outer_bounds.hpp"
#include "parallel.hpp"
#include "region_geometry.hpp"
#include "report.hpp"

namespace cogregions {

inline constexpr double mc_sigma_tolerance = 5.0;
inline constexpr double condition_slack = 1e-12;
inline constexpr std::size_t mc_min_samples = 10000;

namespace detail {

inline constexpr std::size_t mc_shards = 16;

inline std::mt19937_64 shard_engine(std::uint64_t seed, std::size_t shard)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shard)};
    return std::mt19937_64(seq);
}

inline std::size_t shard_size(std::size_t n, std::size_t shard)
{
    return n / mc_shards + (shard < n % mc_shards ? 1 : 0);
}

/// Factor L with L L^T = S; throws when S is not symmetric positive semidefinite.
inline Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& s)
{
    if (s.rows() != s.cols()) throw PreconditionError("covariance must be square");
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw PreconditionError("covariance must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
    if (eig.eigenvalues().minCoeff() < -1e-10 * scale)
        throw PreconditionError("covariance must be positive semidefinite");
    const Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * root.asDiagonal();
}

inline std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace detail

/// Draws X ~ N(0, S), forms Y = h X + Z with unit noise, and compares the
/// empirical E[Y^2] with `claimed` (default 1 + h S h^T) within 5 standard
/// errors of the second-moment estimator.
inline VerificationReport mc_rate_check(const Eigen::VectorXd& h, const Eigen::MatrixXd& s, std::size_t n,
                                        std::uint64_t seed, std::optional<double> claimed = std::nullopt,
                                        std::string name = "mc_rate")
{
    if (h.size() != s.rows()) throw PreconditionError("gain vector and covariance sizes differ");
    if (n < mc_min_samples) throw PreconditionError("Monte Carlo check needs at least 10000 samples");
    const Eigen::MatrixXd l = detail::psd_factor(s);
    const Eigen::RowVectorXd w = h.transpose() * l;
    const double expected = claimed.value_or(1.0 + h.dot(s * h));

    std::array<std::array<double, 2>, detail::mc_shards> sums{};
    parallel_for(detail::mc_shards, [&](std::size_t k) {
        auto eng = detail::shard_engine(seed, k);
        std::normal_distribution<double> gauss;
        Eigen::VectorXd g(w.size());
        double m2 = 0.0, m4 = 0.0;
        for (std::size_t i = 0, m = detail::shard_size(n, k); i < m; ++i) {
            for (Eigen::Index j = 0; j < g.size(); ++j) g[j] = gauss(eng);
            const double y = w.dot(g) + gauss(eng);
            m2 += y * y;
            m4 += y * y * y * y;
        }
        sums[k] = {m2, m4};
    });
    double m2 = 0.0, m4 = 0.0;
    for (const auto& sh : sums) {
        m2 += sh[0];
        m4 += sh[1];
    }
    const double nn = static_cast<double>(n);
    m2 /= nn;
    m4 /= nn;
    const double se = std::sqrt(std::max(0.0, m4 - m2 * m2) / nn);
    const double diff = std::abs(m2 - expected);
    const std::string where = "empirical=" + detail::fmt(m2) + " closed_form=" + detail::fmt(expected) +
                              " standard_error=" + detail::fmt(se);
    if (se == 0.0) return VerificationReport::make(std::move(name), diff, 0.0, n, where, seed);
    return VerificationReport::make(std::move(name), diff, mc_sigma_tolerance * se, n, where, seed);
}

/// Empirical second moments of (X1, X2, Y1) and (X1, X2, Y1~) where
/// Y1~ = (Y2 - X2)/b + a X2 + sqrt(1 - 1/b^2) Z0 is built from receiver 2's output.
struct DegradedSample {
    Eigen::Matrix3d cov_y1;     ///< E[v v^T], v = (X1, X2, Y1)
    Eigen::Matrix3d cov_ytilde; ///< E[w w^T], w = (X1, X2, Y1~)
    Eigen::Matrix3d diff_se;    ///< standard error of each entry of cov_y1 - cov_ytilde
    double var_ytilde_se = 0.0; ///< standard error of E[Y1~^2]
    std::size_t samples = 0;
};

/// Var(Y1~) = p1 + a^2 p2 + 2 a rho sqrt(p1 p2) + 1, identical to Var(Y1).
inline double degraded_output_variance(const ChannelParams& ch, double rho)
{
    return ch.p1() + ch.a() * ch.a() * ch.p2() + 2.0 * ch.a() * rho * std::sqrt(ch.p1() * ch.p2()) + 1.0;
}

inline DegradedSample sample_degraded(const ChannelParams& ch, double rho, std::size_t n, std::uint64_t seed)
{
    if (ch.b() < 1.0) throw PreconditionError("construction requires |b| >= 1");
    if (!(std::abs(rho) <= 1.0)) throw PreconditionError("input correlation must lie in [-1, 1]");
    if (n < 2) throw PreconditionError("sample count must be >= 2");
    const double s1 = std::sqrt(ch.p1());
    const double s2 = std::sqrt(ch.p2());
    const double a = ch.a();
    const double b = ch.b();
    const double extra = std::sqrt(1.0 - 1.0 / (b * b));
    const double rho_c = std::sqrt(1.0 - rho * rho);

    struct Acc {
        Eigen::Matrix3d vv = Eigen::Matrix3d::Zero();
        Eigen::Matrix3d ww = Eigen::Matrix3d::Zero();
        Eigen::Matrix3d d2 = Eigen::Matrix3d::Zero();
        double yt4 = 0.0;
    };
    std::vector<Acc> acc(detail::mc_shards);
    parallel_for(detail::mc_shards, [&](std::size_t k) {
        auto eng = detail::shard_engine(seed, k);
        std::normal_distribution<double> gauss;
        Acc& A = acc[k];
        for (std::size_t i = 0, m = detail::shard_size(n, k); i < m; ++i) {
            const double g1 = gauss(eng), g2 = gauss(eng);
            const double z1 = gauss(eng), z2 = gauss(eng), z0 = gauss(eng);
            const double x1 = s1 * g1;
            const double x2 = s2 * (rho * g1 + rho_c * g2);
            const double y1 = x1 + a * x2 + z1;
            const double y2 = b * x1 + x2 + z2;
            const double yt = (y2 - x2) / b + a * x2 + extra * z0;
            const Eigen::Vector3d v(x1, x2, y1);
            const Eigen::Vector3d w(x1, x2, yt);
            const Eigen::Matrix3d pv = v * v.transpose();
            const Eigen::Matrix3d pw = w * w.transpose();
            A.vv += pv;
            A.ww += pw;
            A.d2 += (pv - pw).cwiseAbs2();
            A.yt4 += yt * yt * yt * yt;
        }
    });
    Acc total;
    for (const auto& A : acc) {
        total.vv += A.vv;
        total.ww += A.ww;
        total.d2 += A.d2;
        total.yt4 += A.yt4;
    }
    const double nn = static_cast<double>(n);
    DegradedSample out;
    out.samples = n;
    out.cov_y1 = total.vv / nn;
    out.cov_ytilde = total.ww / nn;
    const Eigen::Matrix3d mean_d = out.cov_y1 - out.cov_ytilde;
    out.diff_se = ((total.d2 / nn - mean_d.cwiseAbs2()).cwiseMax(0.0) / nn).cwiseSqrt();
    const double vt = out.cov_ytilde(2, 2);
    out.var_ytilde_se = std::sqrt(std::max(0.0, total.yt4 / nn - vt * vt) / nn);
    return out;
}

/// Pass iff every entry of Cov(X1,X2,Y1) - Cov(X1,X2,Y1~) is within 5
/// standard errors of zero. The discrepancy is the largest |entry| / SE.
inline VerificationReport degradedness_check(const ChannelParams& ch, double rho, std::size_t n,
                                             std::uint64_t seed)
{
    const DegradedSample s = sample_degraded(ch, rho, n, seed);
    static constexpr std::array<const char*, 3> names{"X1", "X2", "Y1"};
    double worst = -1.0;
    std::string where;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const double d = std::abs(s.cov_y1(i, j) - s.cov_ytilde(i, j));
            const double se = s.diff_se(i, j);
            const double z = se > 0.0 ? d / se : (d == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
            if (z > worst) {
                worst = z;
                where = std::string("entry ") + names[i] + "," + names[j] + ": y1=" + detail::fmt(s.cov_y1(i, j)) +
                        " y1_tilde=" + detail::fmt(s.cov_ytilde(i, j)) + " se=" + detail::fmt(se);
            }
        }
    return VerificationReport::make("degradedness", worst, mc_sigma_tolerance, n, where, seed);
}

/// Which threshold the R2-dominance biconditional is tested against.
enum class DominanceForm {
    nominal, ///< b >= sqrt(p2 + 1)
    exact    ///< b^2 >= 1 + p2 + b sqrt(p1 p2)
};

inline std::string_view to_string(DominanceForm f)
{
    return f == DominanceForm::nominal ? "nominal" : "exact";
}

/// Sum constraint minus R1 and R2 constraints of cor2_bound, on the raw values.
inline double cor2_sum_slack(const ChannelParams& ch, double alpha)
{
    const Pentagon p = cor2_bound(ch, alpha);
    return p.sum_max() - p.r1_max() - p.r2_max();
}

/// Superposition sum-constraint slack C - A - B on the raw values (any p2 >= 0).
inline double scheme_e_sum_slack(double p1, double p2, double b, double beta)
{
    const auto t = detail::superposition(p1, p2, b, beta, (1.0 - beta) * p1);
    return t.sum - t.r1 - t.r2;
}

namespace detail {

struct GridScan {
    bool holds = true;
    double min_slack = std::numeric_limits<double>::infinity();
    double argmin = 0.0;
};

template <class Slack>
GridScan scan(const std::vector<double>& xs, Slack slack)
{
    GridScan g;
    for (double x : xs) {
        const double s = slack(x);
        if (s < g.min_slack) {
            g.min_slack = s;
            g.argmin = x;
        }
        if (s < -condition_slack) g.holds = false;
    }
    return g;
}

inline std::string scan_detail(const char* var, const GridScan& g, bool predicted)
{
    std::string s = std::string("min_slack=") + fmt(g.min_slack) + " at " + var + "=" + fmt(g.argmin) +
                    " grid_holds=" + (g.holds ? "true" : "false") + " predicted=" + (predicted ? "true" : "false");
    if (g.holds != predicted)
        s += g.holds ? " mismatch: holds on grid but threshold says no" : " mismatch: threshold says yes but grid violates";
    return s;
}

} // namespace detail

/// Checks [for all alpha: A + B <= C + 1e-12 in cor2_bound] against the threshold
/// form. Discrepancy is 1 on a mismatch, 0 otherwise.
inline VerificationReport verify_condition5(double p1, double p2, double b, const Grid1D& alpha_grid = {},
                                            DominanceForm form = DominanceForm::nominal)
{
    if (b < 1.0) throw PreconditionError("R2-dominance check requires b >= 1");
    const ChannelParams ch(0.0, b, p1, p2);
    const auto g = detail::scan(alpha_grid.unit(), [&](double a) { return cor2_sum_slack(ch, a); });
    const bool predicted =
        form == DominanceForm::nominal ? r2_dominance_condition(p1, p2, b) : r2_dominance_condition_exact(p1, p2, b);
    return VerificationReport::make(std::string("condition5_") + std::string(to_string(form)),
                                    g.holds == predicted ? 0.0 : 1.0, 0.0, alpha_grid.n,
                                    detail::scan_detail("alpha", g, predicted));
}

/// Checks [for all beta: superposition sum constraint inactive] against the
/// superposition threshold, and that the squared threshold form agrees.
inline VerificationReport verify_condition6(double p1, double p2, double b, const Grid1D& beta_grid = {})
{
    if (b < 1.0) throw PreconditionError("superposition check requires b >= 1");
    const auto g = detail::scan(beta_grid.unit(), [&](double beta) { return scheme_e_sum_slack(p1, p2, b, beta); });
    const bool predicted = superposition_capacity_condition(p1, p2, b);
    const bool squared = superposition_capacity_condition_squared(p1, p2, b);
    double mismatches = (g.holds == predicted ? 0.0 : 1.0) + (squared == predicted ? 0.0 : 1.0);
    std::string where = detail::scan_detail("beta", g, predicted);
    if (squared != predicted) where += " squared form disagrees";
    return VerificationReport::make("condition6", mismatches, 0.0, beta_grid.n, where);
}

/// Parameter cube for the biconditional sweeps (default 20 x 20 x 20).
struct ParamCube {
    std::vector<double> p1 = Grid1D{20}.nodes(0.1, 10.0);
    std::vector<double> p2 = Grid1D{20}.nodes(0.1, 10.0);
    std::vector<double> b = Grid1D{20}.nodes(1.0, 15.0);

    [[nodiscard]] std::size_t size() const { return p1.size() * p2.size() * b.size(); }
};

namespace detail {

template <class Check>
VerificationReport sweep(std::string name, const ParamCube& cube, Check check)
{
    std::vector<double> miss(cube.size(), 0.0);
    std::vector<std::string> what(cube.size());
    const std::size_t per = cube.p2.size() * cube.b.size();
    parallel_for(cube.p1.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < cube.p2.size(); ++j)
            for (std::size_t k = 0; k < cube.b.size(); ++k) {
                const std::size_t idx = i * per + j * cube.b.size() + k;
                const auto r = check(cube.p1[i], cube.p2[j], cube.b[k]);
                miss[idx] = r.max_discrepancy;
                if (!r.passed)
                    what[idx] = "p1=" + fmt(cube.p1[i]) + " p2=" + fmt(cube.p2[j]) + " b=" + fmt(cube.b[k]) + " " +
                                r.worst_case;
            }
    });
    double total = 0.0;
    std::string first;
    for (std::size_t i = 0; i < miss.size(); ++i) {
        total += miss[i];
        if (first.empty() && !what[i].empty()) first = what[i];
    }
    return VerificationReport::make(std::move(name), total, 0.0, cube.size(),
                                    first.empty() ? "no mismatches" : "first mismatch: " + first);
}

} // namespace detail

/// Counts biconditional mismatches over the cube (discrepancy = count).
inline VerificationReport sweep_condition5(const ParamCube& cube = {}, const Grid1D& alpha_grid = {},
                                           DominanceForm form = DominanceForm::nominal)
{
    return detail::sweep(std::string("condition5_sweep_") + std::string(to_string(form)), cube,
                         [&](double p1, double p2, double b) { return verify_condition5(p1, p2, b, alpha_grid, form); });
}

inline VerificationReport sweep_condition6(const ParamCube& cube = {}, const Grid1D& beta_grid = {})
{
    return detail::sweep("condition6_sweep", cube,
                         [&](double p1, double p2, double b) { return verify_condition6(p1, p2, b, beta_grid); });
}

/// Superposition meets the Z-channel BC-DMS bound. For every alpha on the
/// grid with beta = beta_of_alpha(alpha): R1 and R2 constraints agree to
/// 1e-12 and the superposition sum constraint is inactive; the concavified
/// superposition frontier matches the raw bound union within 1e-9 at every
/// r1 = R1(alpha). The discrepancy is the worst of the three sub-checks as
/// a multiple of its own tolerance, so the report passes iff all three do.
inline VerificationReport verify_th3_capacity(double p1, double p2, double b, const Grid1D& alpha_grid = {},
                                              const FrontierGrid& fgrid = {})
{
    if (!superposition_capacity_condition(p1, p2, b)) throw PreconditionError("channel is outside the superposition-capacity regime");
    constexpr double pent_tol = 1e-12;
    constexpr double frontier_tol = 1e-9;
    const ChannelParams ch(0.0, b, p1, p2);
    const auto alphas = alpha_grid.unit();
    std::vector<double> betas;
    std::vector<Pentagon> outer_ps;
    double pent_diff = 0.0, sum_excess = 0.0;
    double pent_at = 0.0;
    for (double a : alphas) {
        const double beta = beta_of_alpha(a, p1);
        betas.push_back(beta);
        const Pentagon o = cor2_bound(ch, a);
        const Pentagon i = scheme_e_pentagon(ch, beta);
        outer_ps.push_back(o);
        const double d = std::max(std::abs(o.r1_max() - i.r1_max()), std::abs(o.r2_max() - i.r2_max()));
        if (d > pent_diff) {
            pent_diff = d;
            pent_at = a;
        }
        sum_excess = std::max(sum_excess, i.r1_max() + i.r2_max() - i.sum_max());
    }
    const Frontier outer = union_frontier(outer_ps, fgrid);
    const Frontier inner = scheme_e_region(ch, std::span<const double>(betas), fgrid);
    double front_diff = 0.0, front_at = 0.0;
    for (const auto& p : outer_ps) {
        const double d = std::abs(outer.value_at(p.r1_max()) - inner.value_at(p.r1_max()));
        if (d > front_diff) {
            front_diff = d;
            front_at = p.r1_max();
        }
    }
    const double worst = std::max({pent_diff / pent_tol, sum_excess / pent_tol, front_diff / frontier_tol});
    const std::string where = "pentagon_diff=" + detail::fmt(pent_diff) + " (alpha=" + detail::fmt(pent_at) +
                              ", tol 1e-12) sum_excess=" + detail::fmt(sum_excess) +
                              " (tol 1e-12) frontier_diff=" + detail::fmt(front_diff) + " (r1=" + detail::fmt(front_at) +
                              ", tol 1e-9)";
    return VerificationReport::make("superposition_capacity", worst, 1.0, alphas.size(), where);
}

/// Monte Carlo checks of the four log(1 + h S h^T) arguments: the unifying
/// R2 bound, the Z-channel BC-DMS sum bound, and the superposition R2 and
/// sum bounds, each compared with the library's closed form.
inline std::vector<VerificationReport> rate_formula_checks(double p1, double p2, double b, double alpha,
                                                           double beta, std::size_t n, std::uint64_t seed)
{
    const ChannelParams z(0.0, b, p1, p2);
    const Eigen::Vector2d h(b, 1.0);
    auto cov = [&](double v1, double c) {
        Eigen::Matrix2d s;
        s << v1, c, c, p2;
        return Eigen::MatrixXd(s);
    };
    const Eigen::MatrixXd s_alpha = cov(p1, std::sqrt((1.0 - alpha) * p1 * p2));
    const Eigen::MatrixXd s_beta = cov(p1, std::sqrt((1.0 - beta) * p1 * p2));
    const Eigen::MatrixXd s_coop = cov((1.0 - beta) * p1, std::sqrt((1.0 - beta) * p1 * p2));
    const Pentagon uni = unifying_bound(z, alpha);
    const Pentagon c2 = cor2_bound(z, alpha);
    const auto se = detail::superposition(p1, p2, b, beta, (1.0 - beta) * p1);
    return {
        mc_rate_check(h, s_alpha, n, seed, std::exp2(uni.r2_max()), "mc_unifying_r2"),
        mc_rate_check(h, s_alpha, n, seed + 1, std::exp2(c2.sum_max()), "mc_bcdms_sum"),
        mc_rate_check(h, s_coop, n, seed + 2, std::exp2(se.r2), "mc_superposition_r2"),
        mc_rate_check(h, s_beta, n, seed + 3, std::exp2(se.sum), "mc_superposition_sum"),
    };
}

} // namespace cogregions
