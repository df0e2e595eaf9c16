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

#ifndef DIVKIT_MECHANISM_HPP_
#define DIVKIT_MECHANISM_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divkit/dist.hpp"
#include "divkit/region.hpp"

namespace divkit {

// Randomized response over bit vectors: each bit flips independently with
// probability flip_p. Inputs are adjacent when they differ in exactly one
// bit (Hamming distance 1).
struct MechanismSpec {
  int n_bits = 1;
  double flip_p = 0.5;

  // Parses "rr:3,0.34".
  static MechanismSpec parse(std::string_view text);
  std::string to_string() const;
};

// Bit-vector helpers; label convention is the big-endian binary string of
// the value, e.g. input 1 of a 3-bit mechanism is "001".
std::string bits_to_label(std::uint32_t value, int n_bits);
std::uint32_t label_to_bits(std::string_view label, int n_bits);

// Exact output distribution of the mechanism on one input: the product of
// per-bit flip probabilities over all 2^n outcomes.
Dist mech_output(const MechanismSpec& spec, std::uint32_t input);

// All unordered Hamming-1 input pairs; n * 2^{n-1} of them.
std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacent_pairs(
    const MechanismSpec& spec);

// A privacy definition instance to verify against a mechanism.
class PrivacyClaim {
 public:
  enum class Kind { kDp, kRdp, kZcdp, kTcdp };

  static PrivacyClaim dp(double eps, double delta);
  static PrivacyClaim rdp(double alpha, double rho);
  static PrivacyClaim zcdp(double xi, double rho);
  static PrivacyClaim tcdp(double rho, double omega);  // omega > 1

  // Parses "dp:0.6633,0", "rdp:2,0.376", "zcdp:0.6633,0", "tcdp:0.1,8".
  static PrivacyClaim parse(std::string_view text);

  Kind kind() const { return kind_; }
  double a() const { return a_; }
  double b() const { return b_; }
  std::string to_string() const;

 private:
  PrivacyClaim() = default;
  Kind kind_ = Kind::kDp;
  double a_ = 0.0;
  double b_ = 0.0;
};

struct ClaimReport {
  bool satisfied = true;
  // Worst margin of (divergence - bound) over all ordered adjacent pairs
  // (and over the alpha grid for zCDP/tCDP); positive means violated.
  double worst_margin = 0.0;
  std::pair<std::uint32_t, std::uint32_t> worst_pair = {0, 0};
  double worst_alpha = 0.0;  // 0 when not applicable, +inf for the limit
  double worst_value = 0.0;  // divergence at the witness
  double worst_bound = 0.0;  // allowed bound at the witness
};

// Evaluates the claim's defining inequality over every ordered adjacent
// pair. zCDP and tCDP quantify alpha over a 200-point log-spaced grid in
// [1 + 2^-10, 64] (clipped below omega for tCDP) plus the alpha -> infinity
// limit via the max divergence, so results are grid-verified: a reported
// violation is exact, a pass is exact at the checked points. Margins within
// 1e-12 of zero count as satisfied.
ClaimReport check_claim(const MechanismSpec& spec, const PrivacyClaim& claim);

// One (PFA, PMD) point per rejection region S of the output space for the
// given adjacent input pair: (Pr[M(x0) in S], Pr[M(x1) not in S]), in mask
// order, 2^{2^n} points. Requires 2^n_bits <= 20.
std::vector<ErrorPoint> error_cloud(
    const MechanismSpec& spec,
    const std::pair<std::uint32_t, std::uint32_t>& pair);

}  // namespace divkit

#endif  // DIVKIT_MECHANISM_HPP_
