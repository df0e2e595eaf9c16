// Copyright 2026 The divkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIVKIT_JSON_IO_HPP_
#define DIVKIT_JSON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "divkit/convert.hpp"
#include "divkit/dist.hpp"
#include "divkit/kcut.hpp"
#include "divkit/mechanism.hpp"
#include "divkit/region.hpp"

namespace divkit {

using Json = nlohmann::ordered_json;

// Interchange schemas:
//   Dist    {"labels": ["a","b"], "probs": [0.5, 0.5]}
//   Channel {"in_labels": [...], "out_labels": [...], "matrix": [[...], ...]}
Dist dist_from_json(const Json& value);
Json dist_to_json(const Dist& dist);
Channel channel_from_json(const Json& value);
Json channel_to_json(const Channel& channel);

Dist load_dist(const std::string& path);
Channel load_channel(const std::string& path);

Json rule_to_json(const DeterministicRule& rule);
Json bvn_to_json(const BvnDecomposition& decomposition);
Json cut_result_to_json(const CutResult& result, double unit_scale = 1.0);
Json conversion_to_json(const ConversionResult& result);
Json claim_report_to_json(const ClaimReport& report, const MechanismSpec& spec);

// Rounds to 12 significant digits (the CLI-wide numeric display precision).
double display_round(double value);
std::string format_significant(double value);

// CSV emitter for point sets: header "pfa,pmd[,inside]", one row per point,
// 12 significant digits, deterministic order.
std::string emit_csv(const std::vector<ErrorPoint>& points,
                     const std::vector<bool>* inside = nullptr);

// Minimal SVG rendering of point sets / boundary polylines on a 600x600
// viewport mapping [0,1]^2 with the y-axis pointing up.
std::string emit_svg(const std::vector<std::vector<ErrorPoint>>& polylines,
                     const std::vector<ErrorPoint>& dots);

}  // namespace divkit

#endif  // DIVKIT_JSON_IO_HPP_
