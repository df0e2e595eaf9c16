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

#ifndef DIVKIT_REGION_HPP_
#define DIVKIT_REGION_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divkit/dist.hpp"
#include "divkit/divergence.hpp"

namespace divkit {

// A (Type I, Type II) error-rate pair: pfa on the x-axis, pmd on the y-axis.
struct ErrorPoint {
  double pfa = 0.0;
  double pmd = 0.0;
};

// Privacy regions over [0,1]^2. Each family carries the pair of constraints
// induced by its divergence on the two-point space, which makes every region
// closed under the point reflection (x, y) -> (1-x, 1-y) (the complement
// decision rule). The Gauss and Hellinger regions are additionally symmetric
// under the axis swap (x, y) -> (y, x).
class RegionSpec {
 public:
  enum class Family { kDp, kRenyi, kGauss, kHellinger };

  // R(eps, delta): 1-x <= e^eps y + delta and x <= e^eps (1-y) + delta.
  static RegionSpec dp(double eps, double delta);
  // R^{D^alpha}(rho): x^a (1-y)^{1-a} + (1-x)^a y^{1-a} <= e^{rho (a-1)},
  // with the convention 0^{1-a} = 0.
  static RegionSpec renyi(double alpha, double rho);
  // R^{Gauss}(delta): y >= Phi(Phi^{-1}(1-x) - delta) and
  // 1-y >= Phi(Phi^{-1}(x) - delta).
  static RegionSpec gauss(double delta);
  // R^{HD}(rho): 1 - sqrt(x(1-y)) - sqrt((1-x)y) <= rho.
  static RegionSpec hellinger(double rho);

  // Parses "dp:0.67,0.05", "renyi:2,1.0", "gauss:0.5", "hd:0.1".
  static RegionSpec parse(std::string_view text);

  Family family() const { return family_; }
  double eps() const { return eps_; }
  double delta() const { return delta_; }
  double alpha() const { return alpha_; }
  double rho() const { return rho_; }

  std::string to_string() const;

 private:
  RegionSpec() = default;
  Family family_ = Family::kDp;
  double eps_ = 0.0;
  double delta_ = 0.0;
  double alpha_ = 0.0;
  double rho_ = 0.0;
};

// Standard normal CDF, computed from the complementary error function.
double phi(double x);

// Standard normal quantile: rational approximation refined with one Halley
// step, so |phi(phi_inv(p)) - p| stays well below 1e-10. Returns -/+infinity
// at p = 0 / 1; rejects p outside [0, 1].
double phi_inv(double p);

// Signed violation of the region's constraints at the point: <= 0 inside,
// boundary points are members. Units are those of the family's native
// inequality (probabilities for DP/Gauss/Hellinger, the exponential-domain
// sum for Renyi).
double region_violation(const RegionSpec& region, const ErrorPoint& point);

// Exact inequality evaluation, no tolerance.
bool region_contains(const RegionSpec& region, const ErrorPoint& point);

// Tabulates n points of the lower-left boundary on a uniform x-grid over the
// family's feasible x-range. DP, Gauss, and Hellinger use their closed
// forms; Renyi solves the implicit equation by bisection on y (lower root),
// leaving every produced point with substitution residual below 1e-9.
// Points where no lower-branch root exists are omitted.
std::vector<ErrorPoint> region_boundary(const RegionSpec& region, int n);

struct ContainmentReport {
  bool contained = true;
  double max_violation = 0.0;  // worst signed violation against the outer
  ErrorPoint worst;
};

// Checks the given points for membership in `outer`, allowing `slack` of
// constraint violation (absorbs the ~1e-10 fuzz of Phi near Gauss
// boundaries).
ContainmentReport region_contains_points(std::span<const ErrorPoint> points,
                                         const RegionSpec& outer,
                                         double slack = 1e-8);

// Numeric proxy for region containment: every boundary point of `inner` must
// lie in `outer`. Both region families here are convex and closed under the
// (1-x, 1-y) reflection, so boundary membership implies containment.
ContainmentReport region_contains_region(const RegionSpec& inner,
                                         const RegionSpec& outer, int n,
                                         double slack = 1e-8);

struct HtReport {
  bool ok = true;
  ErrorPoint worst;              // rule point with the largest divergence
  double worst_divergence = 0.0; // divergence between its pushforwards
};

// Hypothesis-testing check: enumerates all rejection regions S of X, forms
// (Pr[mu1 in S], Pr[mu2 not in S]), and tests membership in the spec's
// region at level rho. Succeeds iff the 2-cut of the divergence is <= rho.
// When `filter_upper` is set, points with pfa + pmd > 1 are skipped (their
// complement rules cover them); the outcome is identical either way.
HtReport ht_check(const DivergenceSpec& spec, double rho, const Dist& mu1,
                  const Dist& mu2, bool filter_upper = false);

// The least delta such that every decision-rule point of the pair lies in
// R^{Gauss}(delta): max over subsets of |Phi^{-1}(1-pfa) - Phi^{-1}(pmd)|.
double gauss_divergence(const Dist& mu1, const Dist& mu2);

namespace detail {

// Lower-branch root y of x^a (1-y)^{1-a} + (1-x)^a y^{1-a} = e^{rho (a-1)}
// at abscissa x in [0, 1). The left side is convex in y and equals 1 on the
// anti-diagonal, so the root is bracketed by (0, 1-x].
double renyi_boundary_lower_y(double alpha, double rho, double x);

// Slope dy/dx of the Renyi boundary at (x, y) from the implicit partials.
double renyi_boundary_slope(double alpha, double x, double y);

}  // namespace detail

}  // namespace divkit

#endif  // DIVKIT_REGION_HPP_
