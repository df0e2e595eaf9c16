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

#include "divkit/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "divkit/error.hpp"

namespace divkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One term of the Renyi region sum with the printed convention 0^{1-a} = 0:
// a zero in either base annihilates the term.
double region_renyi_term(double a, double b, double alpha) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return std::pow(a, alpha) * std::pow(b, 1.0 - alpha);
}

double region_renyi_sum(double alpha, double x, double y) {
  return region_renyi_term(x, 1.0 - y, alpha) +
         region_renyi_term(1.0 - x, y, alpha);
}

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1]");
  }
}

double parse_double_field(std::string_view text, std::string_view field,
                          const char* context) {
  try {
    std::size_t used = 0;
    double value = std::stod(std::string(field), &used);
    if (used != field.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string(context) + ": bad number in '" +
                     std::string(text) + "'");
  }
}

}  // namespace

RegionSpec RegionSpec::dp(double eps, double delta) {
  if (!(eps >= 0.0)) throw DomainError("DP region requires eps >= 0");
  check_unit_interval(delta, "DP region delta");
  RegionSpec spec;
  spec.family_ = Family::kDp;
  spec.eps_ = eps;
  spec.delta_ = delta;
  return spec;
}

RegionSpec RegionSpec::renyi(double alpha, double rho) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError("Renyi region requires finite alpha > 1");
  }
  if (!(rho >= 0.0)) throw DomainError("Renyi region requires rho >= 0");
  RegionSpec spec;
  spec.family_ = Family::kRenyi;
  spec.alpha_ = alpha;
  spec.rho_ = rho;
  return spec;
}

RegionSpec RegionSpec::gauss(double delta) {
  if (!(delta >= 0.0)) throw DomainError("Gauss region requires delta >= 0");
  RegionSpec spec;
  spec.family_ = Family::kGauss;
  spec.delta_ = delta;
  return spec;
}

RegionSpec RegionSpec::hellinger(double rho) {
  check_unit_interval(rho, "Hellinger region rho");
  RegionSpec spec;
  spec.family_ = Family::kHellinger;
  spec.rho_ = rho;
  return spec;
}

RegionSpec RegionSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string name(text.substr(0, colon));
  std::string args;
  if (colon != std::string_view::npos) args = std::string(text.substr(colon + 1));
  const auto comma = args.find(',');

  if (name == "dp" || name == "renyi") {
    if (comma == std::string::npos) {
      throw ParseError("region spec '" + std::string(text) +
                       "' needs two parameters");
    }
    const double first =
        parse_double_field(text, std::string_view(args).substr(0, comma),
                           "region spec");
    const double second =
        parse_double_field(text, std::string_view(args).substr(comma + 1),
                           "region spec");
    return name == "dp" ? dp(first, second) : renyi(first, second);
  }
  if (name == "gauss" && comma == std::string::npos && !args.empty()) {
    return gauss(parse_double_field(text, args, "region spec"));
  }
  if (name == "hd" && comma == std::string::npos && !args.empty()) {
    return hellinger(parse_double_field(text, args, "region spec"));
  }
  throw ParseError("unknown region spec '" + std::string(text) + "'");
}

std::string RegionSpec::to_string() const {
  std::ostringstream out;
  switch (family_) {
    case Family::kDp: out << "dp:" << eps_ << "," << delta_; break;
    case Family::kRenyi: out << "renyi:" << alpha_ << "," << rho_; break;
    case Family::kGauss: out << "gauss:" << delta_; break;
    case Family::kHellinger: out << "hd:" << rho_; break;
  }
  return out.str();
}

double phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double phi_inv(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("phi_inv requires p in [0,1]");
  if (p == 0.0) return -kInf;
  if (p == 1.0) return kInf;

  // Acklam's rational approximation, then one Halley step against phi.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x = 0.0;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double err = phi(x) - p;
  const double u = err * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  if (!std::isfinite(u)) return x;  // tail where exp(x^2/2) overflows
  return x - u / (1.0 + x * u / 2.0);
}

double region_violation(const RegionSpec& region, const ErrorPoint& point) {
  const double x = point.pfa;
  const double y = point.pmd;
  check_unit_interval(x, "ErrorPoint pfa");
  check_unit_interval(y, "ErrorPoint pmd");
  switch (region.family()) {
    case RegionSpec::Family::kDp: {
      const double scale = std::exp(region.eps());
      const double scaled_y = y == 0.0 ? 0.0 : scale * y;
      const double scaled_acc = y == 1.0 ? 0.0 : scale * (1.0 - y);
      return std::max((1.0 - x) - scaled_y - region.delta(),
                      x - scaled_acc - region.delta());
    }
    case RegionSpec::Family::kRenyi: {
      const double bound = std::exp(region.rho() * (region.alpha() - 1.0));
      return region_renyi_sum(region.alpha(), x, y) - bound;
    }
    case RegionSpec::Family::kGauss: {
      const double d = region.delta();
      const double c1 = phi(phi_inv(1.0 - x) - d) - y;
      const double c2 = phi(phi_inv(x) - d) - (1.0 - y);
      return std::max(c1, c2);
    }
    case RegionSpec::Family::kHellinger:
      return (1.0 - std::sqrt(x * (1.0 - y)) - std::sqrt((1.0 - x) * y)) -
             region.rho();
  }
  throw DomainError("region_violation: unknown family");
}

bool region_contains(const RegionSpec& region, const ErrorPoint& point) {
  return region_violation(region, point) <= 0.0;
}

namespace detail {

double renyi_boundary_lower_y(double alpha, double rho, double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw NumericError("renyi boundary: abscissa must lie in [0, 1)");
  }
  const double bound = std::exp(rho * (alpha - 1.0));
  double lo = 0.0;
  double hi = 1.0 - x;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (region_renyi_sum(alpha, x, mid) > bound) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double renyi_boundary_slope(double alpha, double x, double y) {
  const double hx = alpha * (std::pow(x, alpha - 1.0) *
                                 std::pow(1.0 - y, 1.0 - alpha) -
                             std::pow(1.0 - x, alpha - 1.0) *
                                 std::pow(y, 1.0 - alpha));
  const double hy =
      (alpha - 1.0) * (std::pow(x, alpha) * std::pow(1.0 - y, -alpha) -
                       std::pow(1.0 - x, alpha) * std::pow(y, -alpha));
  return -hx / hy;
}

}  // namespace detail

std::vector<ErrorPoint> region_boundary(const RegionSpec& region, int n) {
  if (n < 2) throw DomainError("region_boundary requires n >= 2");
  std::vector<ErrorPoint> points;
  points.reserve(static_cast<std::size_t>(n));

  auto grid = [n](double lo, double hi, int i) {
    return lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  };

  switch (region.family()) {
    case RegionSpec::Family::kDp: {
      const double scale = std::exp(-region.eps());
      for (int i = 0; i < n; ++i) {
        const double x = grid(0.0, 1.0 - region.delta(), i);
        const double y = std::max(0.0, (1.0 - x - region.delta()) * scale);
        points.push_back({x, y});
      }
      break;
    }
    case RegionSpec::Family::kGauss: {
      for (int i = 0; i < n; ++i) {
        const double x = grid(0.0, 1.0, i);
        const double y =
            std::clamp(phi(phi_inv(1.0 - x) - region.delta()), 0.0, 1.0);
        points.push_back({x, y});
      }
      break;
    }
    case RegionSpec::Family::kHellinger: {
      const double r = region.rho();
      const double hit = (1.0 - r) * (1.0 - r);  // boundary reaches y = 0
      for (int i = 0; i < n; ++i) {
        const double x = grid(0.0, hit, i);
        if (i + 1 == n) {
          // The curve touches the axis at x = (1-rho)^2 exactly; the closed
          // form leaves ~1e-17 of noise there, which the square root in the
          // implicit equation would amplify.
          points.push_back({x, 0.0});
          break;
        }
        const double y = (1.0 - r) * (1.0 - r) * (1.0 - 2.0 * x) + x -
                         2.0 * (1.0 - r) *
                             std::sqrt(r * (2.0 - r) * x * (1.0 - x));
        points.push_back({x, std::max(0.0, y)});
      }
      break;
    }
    case RegionSpec::Family::kRenyi: {
      // The lower branch exists for every x < 1; at x = 1 exactly the curve
      // degenerates into the square's edge, so that grid point is omitted.
      for (int i = 0; i < n; ++i) {
        const double x = grid(0.0, 1.0, i);
        if (x >= 1.0) continue;
        const double y =
            detail::renyi_boundary_lower_y(region.alpha(), region.rho(), x);
        points.push_back({x, y});
      }
      break;
    }
  }
  return points;
}

ContainmentReport region_contains_points(std::span<const ErrorPoint> points,
                                         const RegionSpec& outer,
                                         double slack) {
  ContainmentReport report;
  report.max_violation = -kInf;
  for (const auto& point : points) {
    const double violation = region_violation(outer, point);
    if (violation > report.max_violation) {
      report.max_violation = violation;
      report.worst = point;
    }
  }
  if (points.empty()) report.max_violation = 0.0;
  report.contained = report.max_violation <= slack;
  return report;
}

ContainmentReport region_contains_region(const RegionSpec& inner,
                                         const RegionSpec& outer, int n,
                                         double slack) {
  if (n < 16) throw DomainError("region_contains_region requires n >= 16");
  const auto boundary = region_boundary(inner, n);
  return region_contains_points(boundary, outer, slack);
}

HtReport ht_check(const DivergenceSpec& spec, double rho, const Dist& mu1,
                  const Dist& mu2, bool filter_upper) {
  auto [p1, p2] = align_masses(mu1, mu2);
  const std::size_t n = p1.size();
  if (n > 24) throw CapacityError("ht_check: |X| <= 24");

  // Membership in R^spec(rho) is evaluated through the region's defining
  // form, the divergence between the point's two-outcome distributions;
  // this keeps exact boundary points (for example the anti-diagonal of an
  // identical pair) members even in floating point. The closed-form region
  // presentations are reconciled with this definition by their own tests.
  HtReport report;
  report.worst_divergence = -kInf;
  const std::uint32_t end = static_cast<std::uint32_t>(1) << n;
  double pushed1[2], pushed2[2];
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    // Both the subset and its complement are accumulated directly so the
    // two-point masses carry no round-off residue.
    double in1 = 0.0, in2 = 0.0, out1 = 0.0, out2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (static_cast<std::uint32_t>(1) << i)) {
        in1 += p1[i];
        in2 += p2[i];
      } else {
        out1 += p1[i];
        out2 += p2[i];
      }
    }
    const ErrorPoint point{std::clamp(in1, 0.0, 1.0),
                           std::clamp(out2, 0.0, 1.0)};
    if (filter_upper && point.pfa + point.pmd > 1.0) continue;

    pushed1[0] = in1;
    pushed1[1] = out1;
    pushed2[0] = in2;
    pushed2[1] = out2;
    const double value = evaluate_on_masses(spec, pushed1, pushed2);
    if (value > report.worst_divergence) {
      report.worst_divergence = value;
      report.worst = point;
    }
    if (!(value <= rho)) report.ok = false;
  }
  return report;
}

double gauss_divergence(const Dist& mu1, const Dist& mu2) {
  auto [p1, p2] = align_masses(mu1, mu2);
  const std::size_t n = p1.size();
  if (n > 24) throw CapacityError("gauss_divergence: |X| <= 24");

  double needed = 0.0;
  const std::uint32_t end = static_cast<std::uint32_t>(1) << n;
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    double out1 = 0.0, out2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (static_cast<std::uint32_t>(1) << i))) {
        out1 += p1[i];
        out2 += p2[i];
      }
    }
    const double u = phi_inv(std::clamp(out1, 0.0, 1.0));
    const double v = phi_inv(std::clamp(out2, 0.0, 1.0));
    double d = std::abs(u - v);
    if (std::isnan(d)) d = 0.0;  // equal infinities: degenerate corner point
    needed = std::max(needed, d);
  }
  return needed;
}

}  // namespace divkit
