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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace cogregions {

/// Outcome of one check: passed <=> max_discrepancy <= tolerance.
struct VerificationReport {
    std::string name;
    bool passed = false;
    double max_discrepancy = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0; ///< Monte Carlo samples or grid points examined
    std::optional<std::uint64_t> seed;
    std::string worst_case;

    static VerificationReport make(std::string name, double discrepancy, double tolerance,
                                   std::size_t samples, std::string worst_case = {},
                                   std::optional<std::uint64_t> seed = std::nullopt)
    {
        VerificationReport r;
        r.name = std::move(name);
        r.max_discrepancy = discrepancy;
        r.tolerance = tolerance;
        r.passed = discrepancy <= tolerance;
        r.samples = samples;
        r.seed = seed;
        r.worst_case = std::move(worst_case);
        return r;
    }
};

} // namespace cogregions
