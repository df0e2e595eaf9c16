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

#include "divkit/cli.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divkit/convert.hpp"
#include "divkit/divergence.hpp"
#include "divkit/error.hpp"
#include "divkit/json_io.hpp"
#include "divkit/kcut.hpp"
#include "divkit/mechanism.hpp"
#include "divkit/region.hpp"

namespace divkit::cli {

namespace {

std::pair<double, double> parse_number_pair(const std::string& text,
                                            const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError(std::string(what) + ": expected '<a>,<b>', got '" + text +
                     "'");
  }
  try {
    std::size_t used = 0;
    const std::string first = text.substr(0, comma);
    const std::string second = text.substr(comma + 1);
    const double a = std::stod(first, &used);
    if (used != first.size()) throw std::invalid_argument("trailing");
    const double b = std::stod(second, &used);
    if (used != second.size()) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": bad number in '" + text + "'");
  }
}

struct CutArgs {
  std::string div_spec;
  int k = 2;
  std::string mu1_path;
  std::string mu2_path;
  std::string counterexample;
  bool closed_form = false;
  bool bits = false;
};

std::pair<Dist, Dist> load_cut_pair(const CutArgs& args) {
  if (!args.counterexample.empty()) {
    const auto [alpha, beta] =
        parse_number_pair(args.counterexample, "--counterexample");
    return counterexample_pair(alpha, beta);
  }
  if (args.mu1_path.empty() || args.mu2_path.empty()) {
    throw ParseError("either --mu1/--mu2 or --counterexample is required");
  }
  return {load_dist(args.mu1_path), load_dist(args.mu2_path)};
}

CutResult run_cut(const CutArgs& args, const Dist& mu1, const Dist& mu2) {
  const DivergenceSpec spec = DivergenceSpec::parse(args.div_spec);
  if (args.closed_form) {
    if (spec.family() != DivergenceSpec::Family::kRenyi) {
      throw DomainError("--closed-form is available for renyi only");
    }
    if (args.k == 2) return renyi_2cut_closed_form(spec.alpha(), mu1, mu2);
    if (args.k == 3) return renyi_3cut_closed_form(spec.alpha(), mu1, mu2);
    throw DomainError("--closed-form supports k = 2 or 3");
  }
  return k_cut(spec, args.k, mu1, mu2);
}

void emit_region_boundary(const RegionSpec& region, int n,
                          const std::string& format, std::ostream& out) {
  const auto boundary = region_boundary(region, n);
  if (format == "csv") {
    out << emit_csv(boundary);
  } else if (format == "json") {
    Json points = Json::array();
    for (const auto& point : boundary) {
      points.push_back(Json::array(
          {display_round(point.pfa), display_round(point.pmd)}));
    }
    out << Json{{"spec", region.to_string()}, {"points", points}}.dump()
        << '\n';
  } else if (format == "svg") {
    // Boundary plus its reflection through (1/2, 1/2), the complement-rule
    // branch of the same region.
    std::vector<ErrorPoint> mirrored(boundary.rbegin(), boundary.rend());
    for (auto& point : mirrored) {
      point = {1.0 - point.pfa, 1.0 - point.pmd};
    }
    out << emit_svg({boundary, mirrored}, {});
  } else {
    throw ParseError("--out must be csv, json, or svg");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact divergences, k-cuts, privacy regions, and conversion "
               "laws on finite distributions"};
  app.name("divkit");
  app.require_subcommand(1);

  std::uint64_t seed = 20260808;
  app.add_option("--seed", seed, "seed for randomized falsification");
  std::string format;
  app.add_option("--format", format,
                 "default output format (json | csv) for point-set verbs");

  // div
  auto* div_cmd = app.add_subcommand("div", "evaluate a divergence");
  std::string div_spec;
  std::string div_mu1, div_mu2;
  bool div_bits = false;
  div_cmd->add_option("--div", div_spec, "divergence spec")->required();
  div_cmd->add_option("--mu1", div_mu1, "first distribution JSON")->required();
  div_cmd->add_option("--mu2", div_mu2, "second distribution JSON")->required();
  div_cmd->add_flag("--bits", div_bits, "display in bits instead of nats");

  // cut / gen-test
  CutArgs cut_args;
  auto* cut_cmd = app.add_subcommand("cut", "k-cut of a divergence");
  cut_cmd->add_option("--div", cut_args.div_spec)->required();
  cut_cmd->add_option("--k", cut_args.k)->required();
  cut_cmd->add_option("--mu1", cut_args.mu1_path);
  cut_cmd->add_option("--mu2", cut_args.mu2_path);
  cut_cmd->add_option("--counterexample", cut_args.counterexample,
                      "alpha,beta of the three-point construction");
  cut_cmd->add_flag("--closed-form", cut_args.closed_form);
  cut_cmd->add_flag("--bits", cut_args.bits);

  CutArgs gen_args;
  double gen_tol = 1e-9;
  auto* gen_cmd =
      app.add_subcommand("gen-test", "certify a k-generatedness gap");
  gen_cmd->add_option("--div", gen_args.div_spec)->required();
  gen_cmd->add_option("--k", gen_args.k)->required();
  gen_cmd->add_option("--mu1", gen_args.mu1_path);
  gen_cmd->add_option("--mu2", gen_args.mu2_path);
  gen_cmd->add_option("--counterexample", gen_args.counterexample);
  gen_cmd->add_option("--tol", gen_tol, "gap tolerance");
  gen_cmd->add_flag("--bits", gen_args.bits);

  // region
  auto* region_cmd = app.add_subcommand("region", "privacy-region queries");
  std::string region_spec_text;
  int region_boundary_n = 0;
  std::string region_contains_text;
  std::string region_out;
  region_cmd->add_option("--spec", region_spec_text)->required();
  region_cmd->add_option("--boundary", region_boundary_n,
                         "tabulate n boundary points");
  region_cmd->add_option("--contains", region_contains_text,
                         "test membership of 'pfa,pmd'");
  region_cmd->add_option("--out", region_out, "csv | json | svg");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "privacy conversions");
  convert_cmd->require_subcommand(1);
  auto* rdp_cmd = convert_cmd->add_subcommand("rdp2dp", "RDP to DP");
  double rdp_alpha = 2.0, rdp_rho = 1.0, rdp_delta = 0.01;
  std::string rdp_method = "refined";
  rdp_cmd->add_option("--alpha", rdp_alpha)->required();
  rdp_cmd->add_option("--rho", rdp_rho)->required();
  rdp_cmd->add_option("--delta", rdp_delta)->required();
  rdp_cmd->add_option("--method", rdp_method, "mironov | refined | tangent");
  auto* hd_cmd = convert_cmd->add_subcommand("hd2dp", "Hellinger to DP");
  double hd_eps = 1.0, hd_rho = 0.1;
  hd_cmd->add_option("--eps", hd_eps)->required();
  hd_cmd->add_option("--rho", hd_rho)->required();
  auto* falsify_cmd = convert_cmd->add_subcommand(
      "check", "randomized falsification of a conversion claim");
  std::string falsify_div;
  double falsify_rho = 1.0, falsify_eps = 1.0, falsify_delta = 0.01;
  int falsify_trials = 1000;
  falsify_cmd->add_option("--div", falsify_div)->required();
  falsify_cmd->add_option("--rho", falsify_rho)->required();
  falsify_cmd->add_option("--eps", falsify_eps)->required();
  falsify_cmd->add_option("--delta", falsify_delta)->required();
  falsify_cmd->add_option("--trials", falsify_trials);

  // bvn
  auto* bvn_cmd = app.add_subcommand(
      "bvn", "decompose a channel into deterministic rules");
  std::string bvn_channel;
  bvn_cmd->add_option("--channel", bvn_channel, "channel JSON")->required();

  // rr-cloud
  auto* cloud_cmd = app.add_subcommand(
      "rr-cloud", "error-rate cloud of the randomized response mechanism");
  int cloud_bits = 3;
  double cloud_flip = 0.34;
  std::string cloud_region = "dp:0.67,0.05";
  bool cloud_all_pairs = false;
  std::string cloud_out;
  cloud_cmd->add_option("--bits", cloud_bits, "vector length (default 3)");
  cloud_cmd->add_option("--flip", cloud_flip, "flip probability (default 0.34)");
  cloud_cmd->add_option("--region", cloud_region,
                        "region for the 'inside' flag");
  cloud_cmd->add_flag("--all-pairs", cloud_all_pairs);
  cloud_cmd->add_option("--out", cloud_out, "csv | json");

  // check
  auto* check_cmd =
      app.add_subcommand("check", "verify a privacy claim for a mechanism");
  std::string check_mech, check_claim_text;
  check_cmd->add_option("--mech", check_mech, "mechanism spec, e.g. rr:3,0.34")
      ->required();
  check_cmd->add_option("--claim", check_claim_text,
                        "dp:| rdp:| zcdp:| tcdp: claim")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("divkit");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  if (!format.empty() && format != "json" && format != "csv") {
    err << "usage error: --format must be json or csv\n";
    return 2;
  }
  if (region_out.empty()) region_out = format.empty() ? "csv" : format;
  if (cloud_out.empty()) cloud_out = format.empty() ? "csv" : format;

  try {
    if (div_cmd->parsed()) {
      const DivergenceSpec spec = DivergenceSpec::parse(div_spec);
      const double value = evaluate(spec, load_dist(div_mu1), load_dist(div_mu2));
      const double scale = div_bits ? 1.0 / std::log(2.0) : 1.0;
      out << Json{{"value", display_round(value * scale)}}.dump() << '\n';
    } else if (cut_cmd->parsed() || gen_cmd->parsed()) {
      const CutArgs& cargs = cut_cmd->parsed() ? cut_args : gen_args;
      const auto [mu1, mu2] = load_cut_pair(cargs);
      const CutResult result = run_cut(cargs, mu1, mu2);
      const double scale = cargs.bits ? 1.0 / std::log(2.0) : 1.0;
      Json payload = cut_result_to_json(result, scale);
      if (gen_cmd->parsed()) {
        payload["tol"] = gen_tol;
        payload["k_generated_on_pair"] = result.gap <= gen_tol;
      }
      out << payload.dump() << '\n';
    } else if (region_cmd->parsed()) {
      const RegionSpec region = RegionSpec::parse(region_spec_text);
      if (!region_contains_text.empty()) {
        const auto [x, y] = parse_number_pair(region_contains_text,
                                              "--contains");
        const ErrorPoint point{x, y};
        out << Json{{"spec", region.to_string()},
                    {"point", Json::array({x, y})},
                    {"inside", region_contains(region, point)},
                    {"violation", display_round(region_violation(region,
                                                                 point))}}
                   .dump()
            << '\n';
      } else if (region_boundary_n > 0) {
        emit_region_boundary(region, region_boundary_n, region_out, out);
      } else {
        throw ParseError("region: pass --boundary <n> or --contains <x,y>");
      }
    } else if (rdp_cmd->parsed()) {
      ConversionResult result;
      if (rdp_method == "mironov") {
        result = rdp_to_dp_mironov(rdp_alpha, rdp_rho, rdp_delta);
      } else if (rdp_method == "refined") {
        result = rdp_to_dp_refined(rdp_alpha, rdp_rho, rdp_delta);
      } else if (rdp_method == "tangent") {
        result = rdp_to_dp_tangent(rdp_alpha, rdp_rho, rdp_delta);
      } else {
        throw ParseError("--method must be mironov, refined, or tangent");
      }
      out << conversion_to_json(result).dump() << '\n';
    } else if (hd_cmd->parsed()) {
      out << conversion_to_json(hellinger_to_dp(hd_eps, hd_rho)).dump() << '\n';
    } else if (falsify_cmd->parsed()) {
      const DivergenceSpec spec = DivergenceSpec::parse(falsify_div);
      const FalsificationReport report = divergence_to_dp_check(
          spec, falsify_rho, falsify_eps, falsify_delta, falsify_trials, seed);
      Json payload{{"sound", report.sound},
                   {"accepted", report.accepted},
                   {"attempted", report.attempted},
                   {"seed", report.seed}};
      if (report.violation.has_value()) {
        payload["violation"] =
            Json{{"mu1", dist_to_json(report.violation->first)},
                 {"mu2", dist_to_json(report.violation->second)},
                 {"eps_divergence", display_round(report.violation_eps_div)}};
      } else {
        payload["violation"] = nullptr;
        payload["note"] = "no violation found; falsification is inconclusive";
      }
      out << payload.dump() << '\n';
    } else if (bvn_cmd->parsed()) {
      const Channel channel = load_channel(bvn_channel);
      const BvnDecomposition decomposition = bvn_decompose(channel);
      const Channel rebuilt = bvn_reconstruct(decomposition);
      double error = 0.0;
      for (std::size_t i = 0; i < channel.matrix().size(); ++i) {
        for (std::size_t j = 0; j < channel.matrix()[i].size(); ++j) {
          error = std::max(error, std::abs(channel.matrix()[i][j] -
                                           rebuilt.matrix()[i][j]));
        }
      }
      Json payload = bvn_to_json(decomposition);
      payload["reconstruction_error"] = display_round(error);
      out << payload.dump() << '\n';
    } else if (cloud_cmd->parsed()) {
      MechanismSpec mech;
      mech.n_bits = cloud_bits;
      mech.flip_p = cloud_flip;
      const RegionSpec region = RegionSpec::parse(cloud_region);
      auto inside_flag = [&](const ErrorPoint& point) {
        // Demo-style membership: the region together with its complement
        // branch above the anti-diagonal.
        return region_contains(region, point) || point.pfa + point.pmd >= 1.0;
      };
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      if (cloud_all_pairs) {
        pairs = adjacent_pairs(mech);
      } else {
        pairs = {{0u, 1u}};  // canonical pair 00..0 vs 00..1
      }
      if (cloud_out == "csv") {
        if (cloud_all_pairs) {
          std::string text = "x0,x1,pfa,pmd,inside";
          for (const auto& pair : pairs) {
            for (const auto& point : error_cloud(mech, pair)) {
              text += '\n';
              text += bits_to_label(pair.first, mech.n_bits) + ',' +
                      bits_to_label(pair.second, mech.n_bits) + ',' +
                      format_significant(point.pfa) + ',' +
                      format_significant(point.pmd) + ',' +
                      (inside_flag(point) ? '1' : '0');
            }
          }
          text += '\n';
          out << text;
        } else {
          const auto cloud = error_cloud(mech, pairs.front());
          std::vector<bool> inside;
          inside.reserve(cloud.size());
          for (const auto& point : cloud) inside.push_back(inside_flag(point));
          out << emit_csv(cloud, &inside);
        }
      } else if (cloud_out == "json") {
        Json rows = Json::array();
        for (const auto& pair : pairs) {
          for (const auto& point : error_cloud(mech, pair)) {
            rows.push_back(Json{{"x0", bits_to_label(pair.first, mech.n_bits)},
                                {"x1", bits_to_label(pair.second, mech.n_bits)},
                                {"pfa", display_round(point.pfa)},
                                {"pmd", display_round(point.pmd)},
                                {"inside", inside_flag(point)}});
          }
        }
        out << Json{{"mechanism", mech.to_string()},
                    {"region", region.to_string()},
                    {"points", rows}}
                   .dump()
            << '\n';
      } else {
        throw ParseError("rr-cloud --out must be csv or json");
      }
    } else if (check_cmd->parsed()) {
      const MechanismSpec mech = MechanismSpec::parse(check_mech);
      const PrivacyClaim claim = PrivacyClaim::parse(check_claim_text);
      const ClaimReport report = check_claim(mech, claim);
      Json payload = claim_report_to_json(report, mech);
      payload["mechanism"] = mech.to_string();
      payload["claim"] = claim.to_string();
      out << payload.dump() << '\n';
    }
  } catch (const ParseError& e) {
    // Bad spec strings and malformed flag values are usage errors.
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << Json{{"error", e.kind_name()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace divkit::cli
