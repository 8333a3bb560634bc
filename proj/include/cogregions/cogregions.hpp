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
 * @file cogregions.hpp
 * @brief Umbrella header.
 */

#pragma once

#include "channel.hpp"
#include "grid.hpp"
#include "inner_bounds.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "outer_bounds.hpp"
#include "parallel.hpp"
#include "region_geometry.hpp"
#include "report.hpp"
