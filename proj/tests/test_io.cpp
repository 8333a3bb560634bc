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

#include <cmath>
#include <sstream>

#include <cogregions/io.hpp>

using namespace cogregions;

TEST_CASE("csv round trip is bit exact")
{
    const Frontier f({{0, std::log2(17.0)}, {0.1 + 0.2, std::sqrt(2.0)}, {1.0 / 3.0, 1e-300}, {2, 0}});
    std::stringstream ss;
    write_frontier(ss, f, Format::csv);
    CHECK(ss.str().rfind("r1_bits,r2_bits\n", 0) == 0);
    const Frontier g = read_frontier(ss, Format::csv);
    CHECK(g.points() == f.points());
}

TEST_CASE("json round trip")
{
    const Frontier f({{0, 3.25}, {1.5, 1}});
    std::stringstream ss;
    write_frontier(ss, f, Format::json);
    const auto doc = nlohmann::json::parse(ss.str());
    CHECK(doc.at("points").size() == 2);
    CHECK(doc["points"][1][0].get<double>() == 1.5);
    ss.seekg(0);
    CHECK(read_frontier(ss, Format::json).points() == f.points());
}

TEST_CASE("malformed csv is rejected")
{
    std::stringstream no_header("0,1\n");
    CHECK_THROWS_AS(read_frontier(no_header, Format::csv), PreconditionError);
    std::stringstream bad_row("r1_bits,r2_bits\n0;1\n");
    CHECK_THROWS_AS(read_frontier(bad_row, Format::csv), PreconditionError);
    CHECK_THROWS_AS(parse_format("xml"), PreconditionError);
}

TEST_CASE("report json uses the agreed keys")
{
    const auto r = VerificationReport::make("x", 0.5, 1.0, 10, "here", 9);
    const auto j = to_json(r);
    for (const char* key : {"name", "passed", "max_discrepancy", "tolerance", "n", "seed", "worst_case"})
        CHECK(j.contains(key));
    CHECK(j["passed"] == true);
    CHECK(j["seed"] == 9);
    CHECK(to_json(VerificationReport::make("y", 2, 1, 1))["seed"].is_null());
    CHECK(to_json(VerificationReport::make("y", 2, 1, 1))["passed"] == false);
}

TEST_CASE("regime json")
{
    const auto j = to_json(classify(ChannelParams(0, 3, 1, 1)));
    CHECK(j["th3_capacity"] == true);
    CHECK(j["z_channel"] == "a_zero");
    CHECK(j["interference_class"] == "strong");
    CHECK(j["thresholds"].contains("superposition"));
}
