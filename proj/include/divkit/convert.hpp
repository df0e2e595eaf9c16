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

#ifndef DIVKIT_CONVERT_HPP_
#define DIVKIT_CONVERT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "divkit/dist.hpp"
#include "divkit/divergence.hpp"

namespace divkit {

enum class ConversionMethod { kMironov, kRefined, kTangentNumeric, kHellinger };

const char* conversion_method_name(ConversionMethod method);

// A derived (eps, delta)-DP guarantee plus the intermediate values of its
// derivation (tangency point, slope, the t/z/f/g chain for Hellinger).
struct ConversionResult {
  ConversionMethod method = ConversionMethod::kMironov;
  double eps = 0.0;
  double delta = 0.0;
  std::map<std::string, double> aux;
};

// (alpha, rho)-RDP implies (rho - log(delta)/(alpha-1), delta)-DP.
ConversionResult rdp_to_dp_mironov(double alpha, double rho, double delta);

// Refined bound from the tangent of the relaxed boundary curve
// (1-x) = (e^rho y)^{(alpha-1)/alpha}:
// eps = rho + log((alpha-1)/alpha) - (log(delta) + log(alpha))/(alpha-1).
// aux carries the tangency parameter t = (delta alpha e^{-(a-1)rho/a})^{a/(a-1)};
// aux["t_in_range"] flags whether t landed in (0, 1).
ConversionResult rdp_to_dp_refined(double alpha, double rho, double delta);

// Numerically optimal-looking bound: supports the true boundary of
// R^{D^alpha}(rho) with a line of slope -e^{-eps} achieving the requested
// delta. For delta >= 1/alpha no tangent attains delta and the supporting
// line through the corner (0, e^{-rho}) applies: eps = rho + log(1-delta).
// The returned line supports the boundary within 1e-8 and achieves delta
// within 1e-8; soundness is checked separately through region containment.
ConversionResult rdp_to_dp_tangent(double alpha, double rho, double delta);

// HD <= rho implies (eps, delta(eps, rho))-DP where the DP boundary line of
// slope -e^{-eps} is tangent to the Hellinger region boundary
// f(x) = (1-rho)^2 (1-2x) + x - 2(1-rho) sqrt(rho(2-rho) x(1-x)).
// aux carries t, z, f_t, g_t with g_t = -df/dx(t) (= e^{-eps} at tangency),
// so delta = 1 - t - f(t)/g(t) as printed; the signed derivative is also
// reported as aux["dfdx_t"]. Requires rho in (0, 1): at rho = 0 the two
// distributions coincide and any (eps, 0) holds.
ConversionResult hellinger_to_dp(double eps, double rho);

struct FalsificationReport {
  bool sound = true;        // no violation found (inconclusive if !exhausted)
  int accepted = 0;         // pairs that satisfied the premise
  int attempted = 0;        // raw draws
  std::uint64_t seed = 0;
  std::optional<std::pair<Dist, Dist>> violation;
  double violation_eps_div = 0.0;  // eps-divergence at the violating pair
};

// Randomized falsifier for "spec <= rho implies eps-divergence <= delta":
// draws pairs over supports of size 2..8 from flat and peaked simplex
// distributions, keeps those with spec-divergence <= rho, and tests the
// eps-divergence bound. Draw schedule is fully determined by the seed.
// Throws SamplingError if fewer than `trials` premise pairs are found in
// 100 * trials draws.
FalsificationReport divergence_to_dp_check(const DivergenceSpec& spec,
                                           double rho, double eps,
                                           double delta, int trials,
                                           std::uint64_t seed = 20260808);

}  // namespace divkit

#endif  // DIVKIT_CONVERT_HPP_
