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

// Walks b upward at a = 0, p1 = p2 = 1 and prints what is known about capacity.

#include <iostream>

#include <cogregions/cogregions.hpp>

int main()
{
    using namespace cogregions;
    for (double b : {0.0, 0.8, 1.2, 2.5, 3.0}) {
        const ChannelParams ch(0.0, b, 1.0, 1.0);
        CapacityOptions opt;
        opt.split_grid = SplitGrid::cube(9);
        const CapacityResult res = capacity_region(ch, opt);
        std::cout << "b=" << b << "  status=" << to_string(res.status) << "  regime=" << res.regime;
        if (res.exact) {
            std::cout << "  max sum rate=" << res.exact->max_sum_rate() << '\n';
        } else {
            const GapReport gap = frontier_gap(*res.outer, *res.inner);
            std::cout << "  inner/outer max gap=" << gap.max_gap << " bits at r1=" << gap.max_gap_r1 << '\n';
        }
    }
}
