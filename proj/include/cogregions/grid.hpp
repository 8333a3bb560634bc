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

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "channel.hpp"

namespace cogregions {

enum class Spacing {
    uniform,
    cosine ///< Chebyshev-Lobatto nodes, clustered toward both endpoints
};

inline std::string_view to_string(Spacing s)
{
    return s == Spacing::uniform ? "uniform" : "cosine";
}

/// A one-dimensional parameter grid: n nodes on [lo, hi], endpoints included.
struct Grid1D {
    std::size_t n = 1001;
    Spacing spacing = Spacing::uniform;

    [[nodiscard]] std::vector<double> nodes(double lo, double hi) const
    {
        if (n < 2) throw PreconditionError("grid: resolution must be >= 2");
        std::vector<double> v(n);
        const double last = static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double u = static_cast<double>(i) / last;
            const double t = spacing == Spacing::uniform
                                 ? u
                                 : 0.5 * (1.0 - std::cos(std::numbers::pi * u));
            v[i] = lo + (hi - lo) * t;
        }
        v.front() = lo;
        v.back() = hi;
        return v;
    }

    [[nodiscard]] std::vector<double> unit() const { return nodes(0.0, 1.0); }
};

} // namespace cogregions
