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

#include "divkit/mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "divkit/divergence.hpp"
#include "divkit/error.hpp"

namespace divkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kClaimTolerance = 1e-12;

void check_mechanism(const MechanismSpec& spec) {
  if (spec.n_bits < 1 || spec.n_bits > 10) {
    throw DomainError("mechanism: n_bits must lie in 1..10");
  }
  if (!(spec.flip_p > 0.0 && spec.flip_p < 1.0)) {
    throw DomainError("mechanism: flip_p must lie in (0, 1)");
  }
}

std::pair<double, double> split_pair_arg(std::string_view text,
                                         const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(std::string(what) + ": expected '<name>:<a>,<b>' in '" +
                     std::string(text) + "'");
  }
  const std::string args(text.substr(colon + 1));
  const auto comma = args.find(',');
  if (comma == std::string::npos) {
    throw ParseError(std::string(what) + ": expected two parameters in '" +
                     std::string(text) + "'");
  }
  try {
    std::size_t used = 0;
    const std::string first = args.substr(0, comma);
    const std::string second = args.substr(comma + 1);
    const double a = std::stod(first, &used);
    if (used != first.size()) throw std::invalid_argument("trailing");
    const double b = std::stod(second, &used);
    if (used != second.size()) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": bad number in '" +
                     std::string(text) + "'");
  }
}

// 200 log-spaced orders in [1 + 2^-10, 64]: alpha = 1 + 2^-10 * r^i with r
// chosen so the last point lands on 64.
std::vector<double> alpha_grid() {
  constexpr int kPoints = 200;
  constexpr double kLow = 0x1.0p-10;
  constexpr double kHigh = 63.0;
  std::vector<double> grid;
  grid.reserve(kPoints);
  const double ratio = std::pow(kHigh / kLow, 1.0 / (kPoints - 1));
  double offset = kLow;
  for (int i = 0; i < kPoints; ++i, offset *= ratio) grid.push_back(1.0 + offset);
  grid.back() = 64.0;
  return grid;
}

}  // namespace

MechanismSpec MechanismSpec::parse(std::string_view text) {
  if (text.substr(0, 3) != "rr:") {
    throw ParseError("unknown mechanism spec '" + std::string(text) + "'");
  }
  const auto [bits, flip] = split_pair_arg(text, "mechanism spec");
  MechanismSpec spec;
  spec.n_bits = static_cast<int>(bits);
  if (static_cast<double>(spec.n_bits) != bits) {
    throw ParseError("mechanism spec: n_bits must be an integer");
  }
  spec.flip_p = flip;
  check_mechanism(spec);
  return spec;
}

std::string MechanismSpec::to_string() const {
  std::ostringstream out;
  out << "rr:" << n_bits << "," << flip_p;
  return out.str();
}

std::string bits_to_label(std::uint32_t value, int n_bits) {
  std::string label(static_cast<std::size_t>(n_bits), '0');
  for (int i = 0; i < n_bits; ++i) {
    if (value & (1u << (n_bits - 1 - i))) label[static_cast<std::size_t>(i)] = '1';
  }
  return label;
}

std::uint32_t label_to_bits(std::string_view label, int n_bits) {
  if (static_cast<int>(label.size()) != n_bits) {
    throw DomainError("bit vector has wrong length");
  }
  std::uint32_t value = 0;
  for (char ch : label) {
    if (ch != '0' && ch != '1') throw DomainError("bit vector must be binary");
    value = (value << 1) | static_cast<std::uint32_t>(ch - '0');
  }
  return value;
}

Dist mech_output(const MechanismSpec& spec, std::uint32_t input) {
  check_mechanism(spec);
  const int n = spec.n_bits;
  if (input >= (1u << n)) {
    throw DomainError("mech_output: input outside {0,1}^n");
  }
  const std::uint32_t outcomes = 1u << n;
  std::vector<std::string> labels(outcomes);
  std::vector<double> probs(outcomes);
  for (std::uint32_t y = 0; y < outcomes; ++y) {
    labels[y] = bits_to_label(y, n);
    double p = 1.0;
    const std::uint32_t flips = y ^ input;
    for (int bit = 0; bit < n; ++bit) {
      p *= (flips & (1u << bit)) ? spec.flip_p : 1.0 - spec.flip_p;
    }
    probs[y] = p;
  }
  return Dist(std::move(labels), std::move(probs));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacent_pairs(
    const MechanismSpec& spec) {
  check_mechanism(spec);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  const std::uint32_t inputs = 1u << spec.n_bits;
  for (std::uint32_t x = 0; x < inputs; ++x) {
    for (int bit = 0; bit < spec.n_bits; ++bit) {
      const std::uint32_t other = x ^ (1u << bit);
      if (x < other) pairs.emplace_back(x, other);
    }
  }
  return pairs;
}

PrivacyClaim PrivacyClaim::dp(double eps, double delta) {
  if (!(eps >= 0.0)) throw DomainError("DP claim requires eps >= 0");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw DomainError("DP claim requires delta in [0, 1]");
  }
  PrivacyClaim claim;
  claim.kind_ = Kind::kDp;
  claim.a_ = eps;
  claim.b_ = delta;
  return claim;
}

PrivacyClaim PrivacyClaim::rdp(double alpha, double rho) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError("RDP claim requires finite alpha > 1");
  }
  if (!(rho >= 0.0)) throw DomainError("RDP claim requires rho >= 0");
  PrivacyClaim claim;
  claim.kind_ = Kind::kRdp;
  claim.a_ = alpha;
  claim.b_ = rho;
  return claim;
}

PrivacyClaim PrivacyClaim::zcdp(double xi, double rho) {
  if (!(xi >= 0.0) || !(rho >= 0.0)) {
    throw DomainError("zCDP claim requires xi, rho >= 0");
  }
  PrivacyClaim claim;
  claim.kind_ = Kind::kZcdp;
  claim.a_ = xi;
  claim.b_ = rho;
  return claim;
}

PrivacyClaim PrivacyClaim::tcdp(double rho, double omega) {
  if (!(rho >= 0.0)) throw DomainError("tCDP claim requires rho >= 0");
  if (!(omega > 1.0)) throw DomainError("tCDP claim requires omega > 1");
  PrivacyClaim claim;
  claim.kind_ = Kind::kTcdp;
  claim.a_ = rho;
  claim.b_ = omega;
  return claim;
}

PrivacyClaim PrivacyClaim::parse(std::string_view text) {
  const std::string name(text.substr(0, text.find(':')));
  const auto [a, b] = split_pair_arg(text, "privacy claim");
  if (name == "dp") return dp(a, b);
  if (name == "rdp") return rdp(a, b);
  if (name == "zcdp") return zcdp(a, b);
  if (name == "tcdp") return tcdp(a, b);
  throw ParseError("unknown privacy claim '" + std::string(text) + "'");
}

std::string PrivacyClaim::to_string() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kDp: out << "dp:"; break;
    case Kind::kRdp: out << "rdp:"; break;
    case Kind::kZcdp: out << "zcdp:"; break;
    case Kind::kTcdp: out << "tcdp:"; break;
  }
  out << a_ << "," << b_;
  return out.str();
}

ClaimReport check_claim(const MechanismSpec& spec, const PrivacyClaim& claim) {
  check_mechanism(spec);
  ClaimReport report;
  report.worst_margin = -kInf;

  const auto pairs = adjacent_pairs(spec);
  std::vector<double> grid;
  if (claim.kind() == PrivacyClaim::Kind::kZcdp ||
      claim.kind() == PrivacyClaim::Kind::kTcdp) {
    grid = alpha_grid();
  }

  auto consider = [&](std::uint32_t x0, std::uint32_t x1, double alpha,
                      double value, double bound) {
    const double margin = value - bound;
    if (margin > report.worst_margin) {
      report.worst_margin = margin;
      report.worst_pair = {x0, x1};
      report.worst_alpha = alpha;
      report.worst_value = value;
      report.worst_bound = bound;
    }
  };

  for (const auto& [xa, xb] : pairs) {
    const Dist out_a = mech_output(spec, xa);
    const Dist out_b = mech_output(spec, xb);
    // The definitions quantify over ordered pairs; adjacency is symmetric.
    for (int orient = 0; orient < 2; ++orient) {
      const std::uint32_t x0 = orient == 0 ? xa : xb;
      const std::uint32_t x1 = orient == 0 ? xb : xa;
      const Dist& p0 = orient == 0 ? out_a : out_b;
      const Dist& p1 = orient == 0 ? out_b : out_a;

      switch (claim.kind()) {
        case PrivacyClaim::Kind::kDp:
          consider(x0, x1, 0.0, eps_divergence(claim.a(), p0, p1), claim.b());
          break;
        case PrivacyClaim::Kind::kRdp:
          consider(x0, x1, claim.a(), renyi_divergence(claim.a(), p0, p1),
                   claim.b());
          break;
        case PrivacyClaim::Kind::kZcdp: {
          for (double alpha : grid) {
            consider(x0, x1, alpha, renyi_divergence(alpha, p0, p1),
                     claim.a() + alpha * claim.b());
          }
          // alpha -> infinity limit: D^alpha is nondecreasing in alpha, so
          // D^inf below the bound at the grid edge covers all alpha > 64.
          const double tail_bound =
              claim.b() > 0.0 ? claim.a() + 64.0 * claim.b() : claim.a();
          consider(x0, x1, kInf, max_divergence(p0, p1), tail_bound);
          break;
        }
        case PrivacyClaim::Kind::kTcdp: {
          const double omega = claim.b();
          double nearest = 0.0;
          for (double alpha : grid) {
            if (alpha >= omega) break;
            consider(x0, x1, alpha, renyi_divergence(alpha, p0, p1),
                     alpha * claim.a());
            nearest = alpha;
          }
          // Edge order just below omega (the bound is open there).
          const double edge = omega - std::max(1e-9, (omega - 1.0) * 1e-9);
          if (edge > 1.0 && edge > nearest) {
            consider(x0, x1, edge, renyi_divergence(edge, p0, p1),
                     edge * claim.a());
          }
          break;
        }
      }
    }
  }

  report.satisfied = report.worst_margin <= kClaimTolerance;
  return report;
}

std::vector<ErrorPoint> error_cloud(
    const MechanismSpec& spec,
    const std::pair<std::uint32_t, std::uint32_t>& pair) {
  check_mechanism(spec);
  const std::uint32_t outcomes = 1u << spec.n_bits;
  if (outcomes > 20) {
    throw CapacityError("error_cloud: output space larger than 20 outcomes");
  }
  const std::uint32_t hamming = pair.first ^ pair.second;
  if (__builtin_popcount(hamming) != 1) {
    throw DomainError("error_cloud: inputs are not adjacent");
  }

  const Dist p0 = mech_output(spec, pair.first);
  const Dist p1 = mech_output(spec, pair.second);
  std::vector<ErrorPoint> cloud;
  const std::uint32_t subsets = 1u << outcomes;
  cloud.reserve(subsets);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    double pfa = 0.0, inside1 = 0.0;
    for (std::uint32_t y = 0; y < outcomes; ++y) {
      if (mask & (1u << y)) {
        pfa += p0.probs()[y];
        inside1 += p1.probs()[y];
      }
    }
    // Clamp away the ~1e-16 summation residue so the points stay in the
    // unit square; the empty and full rejection regions hit the exact
    // corners (0, 1) and (~1, ~0).
    cloud.push_back({std::clamp(pfa, 0.0, 1.0),
                     std::clamp(1.0 - inside1, 0.0, 1.0)});
  }
  return cloud;
}

}  // namespace divkit
