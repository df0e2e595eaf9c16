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

#ifndef DIVKIT_DIVERGENCE_HPP_
#define DIVKIT_DIVERGENCE_HPP_

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "divkit/dist.hpp"

namespace divkit {

// Weight function of an f-divergence. `f` must be convex with
// lim_{t->0+} t*f(0/t) = 0; convexity is the caller's declaration and is not
// checked. `slope_at_infinity` is lim_{u->inf} f(u)/u and supplies the value
// of zero-denominator terms: a point with mu2(x)=0 contributes
// mu1(x) * slope_at_infinity (may be +infinity).
struct WeightFn {
  std::string name;
  std::function<double(double)> f;
  double slope_at_infinity = 0.0;
};

// A function F: [0,1]^{2k} -> [0,inf] evaluated on block masses of the two
// distributions, declared quasi-convex by the caller.
struct QuasiConvexFn {
  int arity = 2;
  std::function<double(std::span<const double>, std::span<const double>)> eval;
  bool declared_quasi_convex = true;
};

// Identifies a divergence family and its parameters.
class DivergenceSpec {
 public:
  enum class Family {
    kEpsDp,           // sup_S (Pr[mu1 in S] - e^eps Pr[mu2 in S])
    kRenyi,           // order alpha in (1, inf)
    kKl,              // alpha -> 1 limit
    kMaxDivergence,   // alpha -> inf limit
    kTotalVariation,
    kHellinger,
    kFDivergence,     // sum mu2 f(mu1/mu2)
    kFSup,            // sup of F over k-part partitions
  };

  static DivergenceSpec eps_dp(double eps);
  // alpha == 1 routes to KL and alpha == +infinity to the max divergence;
  // alpha < 1 is rejected.
  static DivergenceSpec renyi(double alpha);
  static DivergenceSpec kl();
  static DivergenceSpec max_div();
  static DivergenceSpec tv();
  static DivergenceSpec hellinger();
  static DivergenceSpec f_div(WeightFn weight);
  static DivergenceSpec f_sup(QuasiConvexFn fn);

  // Parses "eps:0.67", "renyi:2.0", "kl", "max", "tv", "hellinger".
  // FDiv/FSup carry arbitrary evaluators and are library-only.
  static DivergenceSpec parse(std::string_view text);

  Family family() const { return family_; }
  double eps() const { return eps_; }
  double alpha() const { return alpha_; }
  const WeightFn& weight() const { return weight_; }
  const QuasiConvexFn& f_sup_fn() const { return f_sup_fn_; }

  // True when the enumeration in a k-cut may range over unordered partitions
  // instead of labeled maps.
  bool block_symmetric() const;

  std::string to_string() const;

 private:
  DivergenceSpec() = default;
  Family family_ = Family::kKl;
  double eps_ = 0.0;
  double alpha_ = 0.0;
  WeightFn weight_;
  QuasiConvexFn f_sup_fn_;
};

// All divergences use natural logarithms and return values in [0, +inf].
// The two inputs must share a label set; probabilities are aligned by label.
double eps_divergence(double eps, const Dist& mu1, const Dist& mu2);
double renyi_divergence(double alpha, const Dist& mu1, const Dist& mu2);
double kl_divergence(const Dist& mu1, const Dist& mu2);
double max_divergence(const Dist& mu1, const Dist& mu2);
double total_variation(const Dist& mu1, const Dist& mu2);
double hellinger_distance(const Dist& mu1, const Dist& mu2);
double f_divergence(const WeightFn& weight, const Dist& mu1, const Dist& mu2);
double f_sup_divergence(const QuasiConvexFn& fn, const Dist& mu1,
                        const Dist& mu2);

// Dispatch on a spec.
double evaluate(const DivergenceSpec& spec, const Dist& mu1, const Dist& mu2);

// Same divergences on raw aligned mass vectors; used by the cut enumerator so
// full values and cut values go through identical arithmetic.
double evaluate_on_masses(const DivergenceSpec& spec,
                          std::span<const double> p1,
                          std::span<const double> p2);

// Returns (p1, p2) re-ordered to mu1's label order, or throws DomainError if
// the label sets differ.
std::pair<std::vector<double>, std::vector<double>> align_masses(
    const Dist& mu1, const Dist& mu2);

// Randomized midpoint-convexity probe for a caller-declared weight function:
// samples argument pairs on (0, hi) and checks
// f((s+t)/2) <= (f(s)+f(t))/2 + 1e-12. Convexity is not decidable from an
// evaluator, so this is a sanity check, never enforced by f_divergence.
bool midpoint_convexity_check(const WeightFn& weight, int trials = 1000,
                              double hi = 32.0, std::uint64_t seed = 7);

}  // namespace divkit

#endif  // DIVKIT_DIVERGENCE_HPP_
