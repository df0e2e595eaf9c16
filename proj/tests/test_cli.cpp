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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "divkit/cli.hpp"
#include "divkit/json_io.hpp"
#include "test_util.hpp"

using namespace divkit;
using namespace divkit::testutil;

namespace {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("divkit_test_" + name);
  std::ofstream file(path);
  file << content;
  return path;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char ch : text) {
    if (ch == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("div evaluates a divergence between two files") {
  const auto mu1 = write_temp("mu1.json", R"({"labels":["a","b"],"probs":[0.5,0.5]})");
  const auto mu2 = write_temp("mu2.json", R"({"labels":["a","b"],"probs":[0.25,0.75]})");
  const auto result = run_cli({"div", "--div", "renyi:2", "--mu1",
                               mu1.string(), "--mu2", mu2.string()});
  CHECK(result.status == 0);
  // log(4/3) at 12 significant digits.
  CHECK(result.out == "{\"value\":0.287682072452}\n");

  const auto self = run_cli({"div", "--div", "kl", "--mu1", mu1.string(),
                             "--mu2", mu1.string()});
  CHECK(self.status == 0);
  CHECK(self.out == "{\"value\":0.0}\n");

  // --bits divides the display by ln 2.
  const auto bits = run_cli({"div", "--div", "renyi:2", "--mu1", mu1.string(),
                             "--mu2", mu2.string(), "--bits"});
  CHECK(bits.out.find("0.415037499279") != std::string::npos);
}

TEST_CASE("cut reproduces the counterexample gap end to end") {
  const auto result = run_cli(
      {"cut", "--div", "renyi:2", "--k", "2", "--counterexample", "2,4"});
  CHECK(result.status == 0);
  const Json payload = Json::parse(result.out);
  CHECK(payload["gap"].get<double>() == doctest::Approx(0.049696).epsilon(1e-4));
  CHECK(payload["witness"]["assignment"]["a"] == "1");
  CHECK(payload["witness"]["assignment"]["b"] == "2");

  const auto closed = run_cli({"cut", "--div", "renyi:2", "--k", "2",
                               "--counterexample", "2,4", "--closed-form"});
  const Json closed_payload = Json::parse(closed.out);
  CHECK(closed_payload["value"].get<double>() ==
        doctest::Approx(payload["value"].get<double>()).epsilon(1e-9));
}

TEST_CASE("gen-test certifies non-2-generatedness on the counterexample") {
  const auto result = run_cli({"gen-test", "--div", "renyi:2", "--k", "2",
                               "--counterexample", "2,4"});
  CHECK(result.status == 0);
  const Json payload = Json::parse(result.out);
  CHECK(payload["k_generated_on_pair"].get<bool>() == false);

  const auto mu1 = write_temp("g1.json", R"({"labels":["a","b"],"probs":[0.7,0.3]})");
  const auto mu2 = write_temp("g2.json", R"({"labels":["a","b"],"probs":[0.4,0.6]})");
  const auto eps = run_cli({"gen-test", "--div", "eps:0.5", "--k", "2",
                            "--mu1", mu1.string(), "--mu2", mu2.string()});
  CHECK(Json::parse(eps.out)["k_generated_on_pair"].get<bool>() == true);
}

TEST_CASE("region boundary and membership queries") {
  const auto boundary = run_cli(
      {"region", "--spec", "dp:0.67,0.05", "--boundary", "16", "--out", "csv"});
  CHECK(boundary.status == 0);
  CHECK(boundary.out.rfind("pfa,pmd\n", 0) == 0);
  CHECK(count_lines(boundary.out) == 17);  // header + 16 rows

  const auto member = run_cli(
      {"region", "--spec", "renyi:2,1.0", "--contains", "0.3,0.4"});
  CHECK(member.status == 0);
  CHECK(Json::parse(member.out)["inside"].is_boolean());

  const auto svg = run_cli(
      {"region", "--spec", "hd:0.1", "--boundary", "64", "--out", "svg"});
  CHECK(svg.status == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(svg.out.find("polyline") != std::string::npos);

  const auto neither = run_cli({"region", "--spec", "dp:1,0.1"});
  CHECK(neither.status == 2);
}

TEST_CASE("convert subcommands emit conversion results") {
  const auto refined = run_cli({"convert", "rdp2dp", "--alpha", "2", "--rho",
                                "1", "--delta", "0.01", "--method", "refined"});
  CHECK(refined.status == 0);
  const Json payload = Json::parse(refined.out);
  CHECK(payload["method"] == "refined");
  CHECK(payload["eps"].get<double>() == doctest::Approx(4.218876).epsilon(1e-6));

  const auto hd = run_cli({"convert", "hd2dp", "--eps", "1", "--rho", "0.1"});
  CHECK(hd.status == 0);
  CHECK(Json::parse(hd.out)["delta"].get<double>() ==
        doctest::Approx(0.260947).epsilon(1e-5));

  const auto falsify = run_cli({"--seed", "99", "convert", "check", "--div",
                                "renyi:2", "--rho", "1", "--eps", "6", "--delta",
                                "0.01", "--trials", "200"});
  CHECK(falsify.status == 0);
  CHECK(Json::parse(falsify.out)["sound"].get<bool>() == true);
}

TEST_CASE("bvn decomposes a channel file") {
  const auto channel = write_temp("chan.json",
      R"({"in_labels":["a","b"],"out_labels":["x","y"],)"
      R"("matrix":[[0.5,0.5],[0.25,0.75]]})");
  const auto result = run_cli({"bvn", "--channel", channel.string()});
  CHECK(result.status == 0);
  const Json payload = Json::parse(result.out);
  CHECK(payload["reconstruction_error"].get<double>() <= 1e-12);
  CHECK(payload["terms"].size() <= 4);
}

TEST_CASE("rr-cloud emits the demo point set") {
  const auto result = run_cli({"rr-cloud"});
  CHECK(result.status == 0);
  CHECK(result.out.rfind("pfa,pmd,inside\n", 0) == 0);
  CHECK(count_lines(result.out) == 257);  // header + 2^8 rows
  // Every point of the cloud sits inside the drawn region or its mirror.
  CHECK(result.out.find(",0\n") == std::string::npos);

  const auto all_pairs =
      run_cli({"rr-cloud", "--bits", "2", "--flip", "0.25", "--all-pairs"});
  CHECK(all_pairs.status == 0);
  CHECK(all_pairs.out.rfind("x0,x1,pfa,pmd,inside\n", 0) == 0);
  CHECK(count_lines(all_pairs.out) == 1 + 4 * 16);
}

TEST_CASE("check verifies privacy claims from the command line") {
  // ln(33/17) = 0.663294...: a claim just below it fails, just above passes.
  const auto result = run_cli(
      {"check", "--mech", "rr:3,0.34", "--claim", "dp:0.6632,0"});
  CHECK(result.status == 0);
  const Json payload = Json::parse(result.out);
  CHECK(payload["satisfied"].get<bool>() == false);

  const auto pass = run_cli(
      {"check", "--mech", "rr:3,0.34", "--claim", "dp:0.6633,0"});
  CHECK(Json::parse(pass.out)["satisfied"].get<bool>() == true);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli({"frobnicate"}).status == 2);
  CHECK(run_cli({"div", "--div", "renyi:2"}).status == 2);  // missing files
  CHECK(run_cli({"div", "--div", "banana", "--mu1", "x", "--mu2", "y"}).status ==
        2);
  CHECK(run_cli({}).status == 2);
}

TEST_CASE("domain errors exit with status 1 and a JSON report") {
  const auto mu1 = write_temp("d1.json", R"({"labels":["a","b"],"probs":[0.5,0.5]})");
  const auto mu2 = write_temp("d2.json", R"({"labels":["x","y","z"],"probs":[0.2,0.3,0.5]})");
  const auto result = run_cli({"div", "--div", "kl", "--mu1", mu1.string(),
                               "--mu2", mu2.string()});
  CHECK(result.status == 1);
  const Json report = Json::parse(result.err);
  CHECK(report["error"] == "domain");
  CHECK(count_lines(result.err) == 1);

  const auto capacity = run_cli(
      {"cut", "--div", "renyi:2", "--k", "2", "--counterexample", "2,3"});
  CHECK(capacity.status == 1);
  CHECK(Json::parse(capacity.err)["error"] == "domain");
}

TEST_CASE("identical invocations produce byte-identical output") {
  const auto first = run_cli(
      {"cut", "--div", "renyi:2", "--k", "3", "--counterexample", "2,4"});
  const auto second = run_cli(
      {"cut", "--div", "renyi:2", "--k", "3", "--counterexample", "2,4"});
  CHECK(first.out == second.out);
  CHECK(first.status == second.status);
}

TEST_CASE("Dist and Channel JSON round-trip to identical values") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const Dist mu = random_dist(rng, 2 + static_cast<int>(rng.below(5)));
    const Dist back = dist_from_json(dist_to_json(mu));
    CHECK(back.labels() == mu.labels());
    CHECK(back.probs() == mu.probs());

    const Channel gamma =
        random_channel(rng, mu.labels(), 2 + static_cast<int>(rng.below(3)));
    const Channel back_channel = channel_from_json(channel_to_json(gamma));
    CHECK(back_channel.matrix() == gamma.matrix());
    // Through text as the CLI writes it.
    const Channel reparsed =
        channel_from_json(Json::parse(channel_to_json(gamma).dump()));
    CHECK(reparsed.matrix() == gamma.matrix());
  }
}

TEST_CASE("emit_csv formats point lists") {
  CHECK(emit_csv({}) == "pfa,pmd\n");
  CHECK(emit_csv({{0.0, 1.0}}) == "pfa,pmd\n0,1\n");
  const std::vector<ErrorPoint> points = {{0.123456789012345, 1.0 / 3.0}};
  CHECK(emit_csv(points) == "pfa,pmd\n0.123456789012,0.333333333333\n");
  const std::vector<bool> inside = {true};
  CHECK(emit_csv(points, &inside) ==
        "pfa,pmd,inside\n0.123456789012,0.333333333333,1\n");
}
