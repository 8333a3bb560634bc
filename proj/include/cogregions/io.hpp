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
 * @file io.hpp
 * @brief Frontier and report serialization.
 *
 * CSV frontiers carry the header `r1_bits,r2_bits` and one vertex per row in
 * ascending r1. JSON frontiers are `{"points":[[r1,r2],...]}`. Numbers are
 * written in shortest round-trip form so a re-read frontier is bit-identical.
 */

#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "channel.hpp"
#include "region_geometry.hpp"
#include "report.hpp"

namespace cogregions {

enum class Format { csv, json };

inline Format parse_format(std::string_view s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw PreconditionError("format must be csv or json");
}

inline std::string_view to_string(Format f)
{
    return f == Format::csv ? "csv" : "json";
}

inline std::string format_number(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline void write_frontier(std::ostream& os, const Frontier& f, Format format)
{
    if (format == Format::csv) {
        os << "r1_bits,r2_bits\n";
        for (const auto& p : f.points()) os << format_number(p.r1) << ',' << format_number(p.r2) << '\n';
        return;
    }
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : f.points()) pts.push_back({p.r1, p.r2});
    os << nlohmann::json{{"points", std::move(pts)}}.dump() << '\n';
}

inline Frontier read_frontier(std::istream& is, Format format)
{
    std::vector<RatePoint> pts;
    if (format == Format::json) {
        const auto doc = nlohmann::json::parse(is);
        for (const auto& p : doc.at("points")) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        return Frontier(std::move(pts));
    }
    std::string line;
    if (!std::getline(is, line) || line.rfind("r1_bits,r2_bits", 0) != 0)
        throw PreconditionError("frontier csv: missing r1_bits,r2_bits header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw PreconditionError("frontier csv: malformed row '" + line + "'");
        RatePoint p;
        const char* end = line.data() + line.size();
        const auto r1 = std::from_chars(line.data(), line.data() + comma, p.r1);
        const auto r2 = std::from_chars(line.data() + comma + 1, end, p.r2);
        if (r1.ec != std::errc{} || r2.ec != std::errc{})
            throw PreconditionError("frontier csv: malformed row '" + line + "'");
        pts.push_back(p);
    }
    return Frontier(std::move(pts));
}

inline nlohmann::json to_json(const ChannelParams& ch)
{
    return {{"a", ch.a()}, {"b", ch.b()}, {"p1", ch.p1()}, {"p2", ch.p2()}};
}

inline nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json j{{"name", r.name},
                     {"passed", r.passed},
                     {"max_discrepancy", r.max_discrepancy},
                     {"tolerance", r.tolerance},
                     {"n", r.samples}};
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    j["worst_case"] = r.worst_case;
    return j;
}

inline nlohmann::json to_json(const RegimeReport& r)
{
    return {{"interference_class", std::string(to_string(r.interference_class))},
            {"z_channel", std::string(to_string(r.z_channel))},
            {"pdc_capacity_known", r.pdc_capacity_known},
            {"cor2_dominates", r.cor2_dominates},
            {"cor2_dominates_exact", r.cor2_dominates_exact},
            {"th3_capacity", r.th3_capacity},
            {"open_regime", r.open_regime},
            {"thresholds",
             {{"weak", r.thresholds.weak},
              {"primary_decodes", r.thresholds.primary_decodes},
              {"r2_dominance", r.thresholds.r2_dominance},
              {"r2_dominance_exact", r.thresholds.r2_dominance_exact},
              {"superposition", r.thresholds.superposition}}}};
}

inline nlohmann::json to_json(const GapReport& g)
{
    return {{"max_gap", g.max_gap},           {"max_gap_r1", g.max_gap_r1},
            {"min_gap", g.min_gap},           {"min_gap_r1", g.min_gap_r1},
            {"common_r1_max", g.common_r1_max}, {"outer_r1_max", g.outer_r1_max},
            {"inner_r1_max", g.inner_r1_max}, {"evaluated", g.evaluated}};
}

} // namespace cogregions
