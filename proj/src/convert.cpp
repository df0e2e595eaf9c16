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

#include "divkit/convert.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "divkit/error.hpp"
#include "divkit/random.hpp"
#include "divkit/region.hpp"

namespace divkit {

namespace {

void check_rdp_args(double alpha, double rho, double delta, const char* what) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError(std::string(what) + " requires finite alpha > 1");
  }
  if (!(rho >= 0.0)) throw DomainError(std::string(what) + " requires rho >= 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError(std::string(what) + " requires delta in (0, 1)");
  }
}

// delta achieved by the line tangent to the Renyi boundary at abscissa x:
// the line has slope s = y'(x) = -e^{-eps} and meets 1-x = e^eps y + delta.
struct TangentProbe {
  double x = 0.0;
  double y = 0.0;
  double slope = 0.0;
  double delta = 0.0;
};

TangentProbe probe_tangent(double alpha, double rho, double x) {
  TangentProbe probe;
  probe.x = x;
  probe.y = detail::renyi_boundary_lower_y(alpha, rho, x);
  probe.slope = detail::renyi_boundary_slope(alpha, x, probe.y);
  probe.delta = 1.0 - x + probe.y / probe.slope;
  return probe;
}

}  // namespace

const char* conversion_method_name(ConversionMethod method) {
  switch (method) {
    case ConversionMethod::kMironov: return "mironov";
    case ConversionMethod::kRefined: return "refined";
    case ConversionMethod::kTangentNumeric: return "tangent_numeric";
    case ConversionMethod::kHellinger: return "hellinger";
  }
  return "unknown";
}

ConversionResult rdp_to_dp_mironov(double alpha, double rho, double delta) {
  check_rdp_args(alpha, rho, delta, "rdp_to_dp_mironov");
  ConversionResult result;
  result.method = ConversionMethod::kMironov;
  result.delta = delta;
  result.eps = rho - std::log(delta) / (alpha - 1.0);
  return result;
}

ConversionResult rdp_to_dp_refined(double alpha, double rho, double delta) {
  check_rdp_args(alpha, rho, delta, "rdp_to_dp_refined");
  ConversionResult result;
  result.method = ConversionMethod::kRefined;
  result.delta = delta;
  result.eps = rho + std::log((alpha - 1.0) / alpha) -
               (std::log(delta) + std::log(alpha)) / (alpha - 1.0);
  const double t =
      std::pow(delta * alpha * std::exp(-(alpha - 1.0) / alpha * rho),
               alpha / (alpha - 1.0));
  result.aux["t"] = t;
  result.aux["t_in_range"] = (t > 0.0 && t < 1.0) ? 1.0 : 0.0;
  return result;
}

ConversionResult rdp_to_dp_tangent(double alpha, double rho, double delta) {
  check_rdp_args(alpha, rho, delta, "rdp_to_dp_tangent");
  ConversionResult result;
  result.method = ConversionMethod::kTangentNumeric;
  result.delta = delta;

  // Along the lower boundary the achieved delta of the tangent line falls
  // monotonically from 1/alpha at x = 0 toward 0 as x -> 1. Deltas of
  // 1/alpha and above are reached by no tangent; there the binding support
  // line passes through the corner (0, e^{-rho}).
  if (delta >= 1.0 / alpha) {
    result.eps = rho + std::log(1.0 - delta);
    result.aux["corner"] = 1.0;
    result.aux["x_t"] = 0.0;
    result.aux["y_t"] = std::exp(-rho);
    result.aux["achieved_delta"] = delta;
    return result;
  }

  double lo = 0.0;             // delta(lo) >= requested
  double hi = 1.0 - 1e-12;     // delta(hi) <= requested (towards 0)
  TangentProbe probe = probe_tangent(alpha, rho, lo);
  if (!(probe.delta >= delta)) {
    throw NumericError("rdp_to_dp_tangent: bracket failure at x = 0");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    probe = probe_tangent(alpha, rho, mid);
    if (probe.delta > delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  probe = probe_tangent(alpha, rho, 0.5 * (lo + hi));
  if (!(probe.slope < 0.0) || !std::isfinite(probe.slope)) {
    throw NumericError("rdp_to_dp_tangent: degenerate slope");
  }
  if (std::abs(probe.delta - delta) > 1e-8) {
    throw NumericError("rdp_to_dp_tangent: delta search did not converge");
  }

  result.eps = -std::log(-probe.slope);
  result.aux["x_t"] = probe.x;
  result.aux["y_t"] = probe.y;
  result.aux["slope"] = probe.slope;
  result.aux["achieved_delta"] = probe.delta;
  return result;
}

ConversionResult hellinger_to_dp(double eps, double rho) {
  if (!(eps >= 0.0)) throw DomainError("hellinger_to_dp requires eps >= 0");
  if (rho == 0.0) {
    throw DomainError(
        "hellinger_to_dp requires rho > 0: HD = 0 forces mu1 = mu2, which is "
        "(eps, 0)-DP outright");
  }
  if (!(rho > 0.0 && rho < 1.0)) {
    throw DomainError("hellinger_to_dp requires rho in (0, 1)");
  }

  // Boundary curve of R^{HD}(rho) and its derivative.
  const double q = 1.0 - rho;
  const double c = q * std::sqrt(rho * (2.0 - rho));
  auto f = [&](double x) {
    return q * q * (1.0 - 2.0 * x) + x -
           2.0 * c * std::sqrt(x * (1.0 - x));
  };
  auto dfdx = [&](double x) {
    return 1.0 - 2.0 * q * q -
           c * (1.0 - 2.0 * x) / std::sqrt(x * (1.0 - x));
  };

  // Tangency abscissa: solving dfdx(t) = -e^{-eps} reduces to
  // (1-2t)/sqrt(t(1-t)) = z.
  const double z = (std::exp(-eps) + 1.0 - 2.0 * q * q) / c;
  const double root = std::sqrt(z * z + 4.0);
  const double t = (z * z + 4.0 - z * root) / (2.0 * (z * z + 4.0));

  const double f_t = f(t);
  const double dfdx_t = dfdx(t);
  const double g_t = -dfdx_t;  // positive slope magnitude, e^{-eps}
  const double delta = 1.0 - t - f_t / g_t;

  ConversionResult result;
  result.method = ConversionMethod::kHellinger;
  result.eps = eps;
  result.delta = delta;
  result.aux["t"] = t;
  result.aux["z"] = z;
  result.aux["f_t"] = f_t;
  result.aux["g_t"] = g_t;
  result.aux["dfdx_t"] = dfdx_t;
  return result;
}

FalsificationReport divergence_to_dp_check(const DivergenceSpec& spec,
                                           double rho, double eps,
                                           double delta, int trials,
                                           std::uint64_t seed) {
  if (trials < 1) throw DomainError("divergence_to_dp_check: trials >= 1");
  FalsificationReport report;
  report.seed = seed;

  const long long max_attempts = 100LL * trials;
  // Per-trial engines keyed by a counter, so results do not depend on how
  // many draws earlier trials consumed.
  for (long long attempt = 0; attempt < max_attempts &&
                              report.accepted < trials;
       ++attempt) {
    SplitMix64 rng(seed ^ (0x51a5c6d9u + static_cast<std::uint64_t>(attempt) *
                                             0x9e3779b97f4a7c15ULL));
    const int n = 2 + static_cast<int>(rng.below(7));  // support size 2..8
    const int shape = static_cast<int>(rng.below(3));
    auto draw = [&](void) {
      switch (shape) {
        case 0: return random_simplex_point(rng, n);
        case 1: return random_peaked_point(rng, n, 3.0);
        default: return random_peaked_point(rng, n, 6.0);
      }
    };
    std::vector<double> w1 = draw();
    std::vector<double> w2 = draw();
    ++report.attempted;

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i);
    Dist mu1(labels, w1);
    Dist mu2(labels, w2);

    if (!(evaluate(spec, mu1, mu2) <= rho)) continue;
    ++report.accepted;

    const double observed = eps_divergence(eps, mu1, mu2);
    if (observed > delta) {
      report.sound = false;
      report.violation = std::make_pair(mu1, mu2);
      report.violation_eps_div = observed;
      return report;
    }
  }

  if (report.accepted < trials) {
    throw SamplingError(
        "divergence_to_dp_check: sampler starved before finding enough pairs "
        "satisfying the premise");
  }
  return report;
}

}  // namespace divkit
