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

#include "divkit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "divkit/error.hpp"

namespace divkit {

namespace {

Json parse_json_text(const std::string& text, const char* what) {
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) {
    throw DomainError(std::string(what) + ": malformed JSON");
  }
  return value;
}

std::vector<std::string> string_list(const Json& value, const char* what) {
  if (!value.is_array()) {
    throw DomainError(std::string(what) + ": expected an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw DomainError(std::string(what) + ": expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<double> number_list(const Json& value, const char* what) {
  if (!value.is_array()) {
    throw DomainError(std::string(what) + ": expected an array of numbers");
  }
  std::vector<double> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_number()) {
      throw DomainError(std::string(what) + ": expected an array of numbers");
    }
    out.push_back(item.get<double>());
  }
  return out;
}

}  // namespace

Dist dist_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("labels") ||
      !value.contains("probs")) {
    throw DomainError("Dist JSON needs 'labels' and 'probs'");
  }
  return Dist(string_list(value["labels"], "Dist labels"),
              number_list(value["probs"], "Dist probs"));
}

Json dist_to_json(const Dist& dist) {
  return Json{{"labels", dist.labels()}, {"probs", dist.probs()}};
}

Channel channel_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("in_labels") ||
      !value.contains("out_labels") || !value.contains("matrix")) {
    throw DomainError("Channel JSON needs 'in_labels', 'out_labels', 'matrix'");
  }
  const Json& rows = value["matrix"];
  if (!rows.is_array()) throw DomainError("Channel matrix must be an array");
  std::vector<std::vector<double>> matrix;
  matrix.reserve(rows.size());
  for (const auto& row : rows) {
    matrix.push_back(number_list(row, "Channel matrix row"));
  }
  return Channel(string_list(value["in_labels"], "Channel in_labels"),
                 string_list(value["out_labels"], "Channel out_labels"),
                 std::move(matrix));
}

Json channel_to_json(const Channel& channel) {
  return Json{{"in_labels", channel.in_labels()},
              {"out_labels", channel.out_labels()},
              {"matrix", channel.matrix()}};
}

Dist load_dist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return dist_from_json(parse_json_text(buffer.str(), path.c_str()));
}

Channel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return channel_from_json(parse_json_text(buffer.str(), path.c_str()));
}

Json rule_to_json(const DeterministicRule& rule) {
  Json assignment = Json::object();
  for (std::size_t i = 0; i < rule.in_labels.size(); ++i) {
    assignment[rule.in_labels[i]] = rule.out_labels[rule.map[i]];
  }
  return Json{{"in_labels", rule.in_labels},
              {"out_labels", rule.out_labels},
              {"assignment", assignment}};
}

Json bvn_to_json(const BvnDecomposition& decomposition) {
  Json terms = Json::array();
  for (const auto& term : decomposition.terms) {
    terms.push_back(Json{{"weight", display_round(term.weight)},
                         {"rule", rule_to_json(term.rule)}});
  }
  return Json{{"terms", terms}};
}

Json cut_result_to_json(const CutResult& result, double unit_scale) {
  return Json{{"k", result.k},
              {"value", display_round(result.value * unit_scale)},
              {"full_value", display_round(result.full_value * unit_scale)},
              {"gap", display_round(result.gap * unit_scale)},
              {"witness", rule_to_json(result.witness)}};
}

Json conversion_to_json(const ConversionResult& result) {
  Json aux = Json::object();
  for (const auto& [key, value] : result.aux) {
    aux[key] = display_round(value);
  }
  return Json{{"method", conversion_method_name(result.method)},
              {"eps", display_round(result.eps)},
              {"delta", display_round(result.delta)},
              {"aux", aux}};
}

Json claim_report_to_json(const ClaimReport& report,
                          const MechanismSpec& spec) {
  Json worst{{"pair",
              Json::array({bits_to_label(report.worst_pair.first, spec.n_bits),
                           bits_to_label(report.worst_pair.second,
                                         spec.n_bits)})},
             {"value", display_round(report.worst_value)},
             {"bound", display_round(report.worst_bound)},
             {"margin", display_round(report.worst_margin)}};
  if (report.worst_alpha != 0.0) {
    if (std::isinf(report.worst_alpha)) {
      worst["alpha"] = "inf";
    } else {
      worst["alpha"] = display_round(report.worst_alpha);
    }
  }
  return Json{{"satisfied", report.satisfied},
              {"verification", "grid-verified"},
              {"worst", worst}};
}

double display_round(double value) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return std::strtod(buffer, nullptr);
}

std::string format_significant(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string emit_csv(const std::vector<ErrorPoint>& points,
                     const std::vector<bool>* inside) {
  if (inside != nullptr && inside->size() != points.size()) {
    throw DomainError("emit_csv: annotation length mismatch");
  }
  std::string out = inside == nullptr ? "pfa,pmd" : "pfa,pmd,inside";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += '\n';
    out += format_significant(points[i].pfa);
    out += ',';
    out += format_significant(points[i].pmd);
    if (inside != nullptr) {
      out += ',';
      out += (*inside)[i] ? '1' : '0';
    }
  }
  out += '\n';
  return out;
}

std::string emit_svg(const std::vector<std::vector<ErrorPoint>>& polylines,
                     const std::vector<ErrorPoint>& dots) {
  constexpr double kSize = 600.0;
  auto sx = [](double x) { return x * kSize; };
  auto sy = [](double y) { return kSize - y * kSize; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" "
         "height=\"600\" viewBox=\"0 0 600 600\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\" "
         "stroke=\"black\"/>\n";
  for (const auto& line : polylines) {
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
           "points=\"";
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out << ' ';
      out << format_significant(sx(line[i].pfa)) << ','
          << format_significant(sy(line[i].pmd));
    }
    out << "\"/>\n";
  }
  for (const auto& dot : dots) {
    out << "  <circle cx=\"" << format_significant(sx(dot.pfa)) << "\" cy=\""
        << format_significant(sy(dot.pmd)) << "\" r=\"2\" fill=\"steelblue\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace divkit
