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

#include "divkit/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "divkit/error.hpp"
#include "divkit/random.hpp"

namespace divkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double eps_on_masses(double eps, std::span<const double> p1,
                     std::span<const double> p2) {
  const double scale = std::exp(eps);
  double total = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    // Zero mass contributes p1 outright; inf * 0 would poison the term when
    // e^eps overflows.
    const double scaled = p2[i] == 0.0 ? 0.0 : scale * p2[i];
    total += std::max(0.0, p1[i] - scaled);
  }
  return total;
}

double renyi_on_masses(double alpha, std::span<const double> p1,
                       std::span<const double> p2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] == 0.0) continue;
    if (p2[i] == 0.0) return kInf;
    sum += p2[i] * std::pow(p1[i] / p2[i], alpha);
  }
  return std::log(sum) / (alpha - 1.0);
}

double kl_on_masses(std::span<const double> p1, std::span<const double> p2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] == 0.0) continue;
    if (p2[i] == 0.0) return kInf;
    sum += p1[i] * std::log(p1[i] / p2[i]);
  }
  return std::max(0.0, sum);
}

double max_div_on_masses(std::span<const double> p1,
                         std::span<const double> p2) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] == 0.0) continue;  // 0/0 excluded from the sup
    if (p2[i] == 0.0) return kInf;
    worst = std::max(worst, p1[i] / p2[i]);
  }
  return std::max(0.0, std::log(worst));
}

double tv_on_masses(std::span<const double> p1, std::span<const double> p2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) sum += std::abs(p1[i] - p2[i]);
  return 0.5 * sum;
}

double hellinger_on_masses(std::span<const double> p1,
                           std::span<const double> p2) {
  double affinity = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    affinity += std::sqrt(p1[i] * p2[i]);
  }
  return std::max(0.0, 1.0 - affinity);
}

double f_div_on_masses(const WeightFn& weight, std::span<const double> p1,
                       std::span<const double> p2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p2[i] == 0.0) {
      if (p1[i] == 0.0) continue;
      if (weight.slope_at_infinity == 0.0) continue;
      if (std::isinf(weight.slope_at_infinity)) return kInf;
      sum += p1[i] * weight.slope_at_infinity;
      continue;
    }
    sum += p2[i] * weight.f(p1[i] / p2[i]);
  }
  return sum;
}

double f_sup_on_masses(const QuasiConvexFn& fn, std::span<const double> p1,
                       std::span<const double> p2) {
  const std::size_t n = p1.size();
  const std::size_t k = static_cast<std::size_t>(fn.arity);
  if (fn.arity < 1) throw DomainError("f_sup: arity must be at least 1");
  double total_maps = std::pow(static_cast<double>(k), static_cast<double>(n));
  if (total_maps > static_cast<double>(1 << 24)) {
    throw CapacityError("f_sup: partition enumeration bound exceeded");
  }

  std::vector<std::size_t> assign(n, 0);
  std::vector<double> b1(k), b2(k);
  double best = -kInf;
  while (true) {
    std::fill(b1.begin(), b1.end(), 0.0);
    std::fill(b2.begin(), b2.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      b1[assign[i]] += p1[i];
      b2[assign[i]] += p2[i];
    }
    best = std::max(best, fn.eval(b1, b2));

    // Odometer with the last index fastest (lexicographic order).
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++assign[pos] < k) break;
      assign[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

}  // namespace

DivergenceSpec DivergenceSpec::eps_dp(double eps) {
  if (!(eps >= 0.0)) throw DomainError("eps divergence requires eps >= 0");
  DivergenceSpec spec;
  spec.family_ = Family::kEpsDp;
  spec.eps_ = eps;
  return spec;
}

DivergenceSpec DivergenceSpec::renyi(double alpha) {
  if (std::isinf(alpha) && alpha > 0) return max_div();
  if (alpha == 1.0) return kl();
  if (!(alpha > 1.0)) {
    throw DomainError("Renyi divergence requires alpha > 1 (alpha = 1 is KL)");
  }
  DivergenceSpec spec;
  spec.family_ = Family::kRenyi;
  spec.alpha_ = alpha;
  return spec;
}

DivergenceSpec DivergenceSpec::kl() {
  DivergenceSpec spec;
  spec.family_ = Family::kKl;
  return spec;
}

DivergenceSpec DivergenceSpec::max_div() {
  DivergenceSpec spec;
  spec.family_ = Family::kMaxDivergence;
  return spec;
}

DivergenceSpec DivergenceSpec::tv() {
  DivergenceSpec spec;
  spec.family_ = Family::kTotalVariation;
  return spec;
}

DivergenceSpec DivergenceSpec::hellinger() {
  DivergenceSpec spec;
  spec.family_ = Family::kHellinger;
  return spec;
}

DivergenceSpec DivergenceSpec::f_div(WeightFn weight) {
  if (!weight.f) throw DomainError("f_div: missing weight function");
  DivergenceSpec spec;
  spec.family_ = Family::kFDivergence;
  spec.weight_ = std::move(weight);
  return spec;
}

DivergenceSpec DivergenceSpec::f_sup(QuasiConvexFn fn) {
  if (!fn.eval) throw DomainError("f_sup: missing evaluator");
  if (fn.arity < 1) throw DomainError("f_sup: arity must be at least 1");
  DivergenceSpec spec;
  spec.family_ = Family::kFSup;
  spec.f_sup_fn_ = std::move(fn);
  return spec;
}

DivergenceSpec DivergenceSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string name(text.substr(0, colon));
  std::string arg;
  if (colon != std::string_view::npos) arg = std::string(text.substr(colon + 1));

  auto parse_number = [&](const char* what) {
    try {
      std::size_t used = 0;
      double value = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return value;
    } catch (const std::exception&) {
      throw ParseError(std::string("divergence spec: bad ") + what + " in '" +
                       std::string(text) + "'");
    }
  };

  if (name == "eps") return eps_dp(parse_number("epsilon"));
  if (name == "renyi") return renyi(parse_number("alpha"));
  if (name == "kl" && arg.empty()) return kl();
  if (name == "max" && arg.empty()) return max_div();
  if (name == "tv" && arg.empty()) return tv();
  if (name == "hellinger" && arg.empty()) return hellinger();
  throw ParseError("unknown divergence spec '" + std::string(text) + "'");
}

bool DivergenceSpec::block_symmetric() const {
  switch (family_) {
    case Family::kRenyi:
    case Family::kKl:
    case Family::kTotalVariation:
    case Family::kHellinger:
    case Family::kFDivergence:
      return true;
    default:
      return false;
  }
}

std::string DivergenceSpec::to_string() const {
  std::ostringstream out;
  switch (family_) {
    case Family::kEpsDp: out << "eps:" << eps_; break;
    case Family::kRenyi: out << "renyi:" << alpha_; break;
    case Family::kKl: out << "kl"; break;
    case Family::kMaxDivergence: out << "max"; break;
    case Family::kTotalVariation: out << "tv"; break;
    case Family::kHellinger: out << "hellinger"; break;
    case Family::kFDivergence:
      out << "fdiv:" << (weight_.name.empty() ? "custom" : weight_.name);
      break;
    case Family::kFSup: out << "fsup:k=" << f_sup_fn_.arity; break;
  }
  return out.str();
}

std::pair<std::vector<double>, std::vector<double>> align_masses(
    const Dist& mu1, const Dist& mu2) {
  if (mu1.labels() == mu2.labels()) {
    return {mu1.probs(), mu2.probs()};
  }
  if (mu1.size() != mu2.size()) {
    throw DomainError("divergence: distributions have different label sets");
  }
  std::map<std::string_view, std::size_t> where;
  for (std::size_t i = 0; i < mu2.size(); ++i) where[mu2.labels()[i]] = i;
  std::vector<double> p2(mu1.size());
  for (std::size_t i = 0; i < mu1.size(); ++i) {
    auto it = where.find(mu1.labels()[i]);
    if (it == where.end()) {
      throw DomainError("divergence: distributions have different label sets");
    }
    p2[i] = mu2.probs()[it->second];
  }
  return {mu1.probs(), std::move(p2)};
}

double evaluate_on_masses(const DivergenceSpec& spec,
                          std::span<const double> p1,
                          std::span<const double> p2) {
  switch (spec.family()) {
    case DivergenceSpec::Family::kEpsDp:
      return eps_on_masses(spec.eps(), p1, p2);
    case DivergenceSpec::Family::kRenyi:
      return renyi_on_masses(spec.alpha(), p1, p2);
    case DivergenceSpec::Family::kKl:
      return kl_on_masses(p1, p2);
    case DivergenceSpec::Family::kMaxDivergence:
      return max_div_on_masses(p1, p2);
    case DivergenceSpec::Family::kTotalVariation:
      return tv_on_masses(p1, p2);
    case DivergenceSpec::Family::kHellinger:
      return hellinger_on_masses(p1, p2);
    case DivergenceSpec::Family::kFDivergence:
      return f_div_on_masses(spec.weight(), p1, p2);
    case DivergenceSpec::Family::kFSup:
      return f_sup_on_masses(spec.f_sup_fn(), p1, p2);
  }
  throw DomainError("evaluate: unknown divergence family");
}

double evaluate(const DivergenceSpec& spec, const Dist& mu1, const Dist& mu2) {
  auto [p1, p2] = align_masses(mu1, mu2);
  return evaluate_on_masses(spec, p1, p2);
}

double eps_divergence(double eps, const Dist& mu1, const Dist& mu2) {
  return evaluate(DivergenceSpec::eps_dp(eps), mu1, mu2);
}

double renyi_divergence(double alpha, const Dist& mu1, const Dist& mu2) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError("renyi_divergence requires finite alpha > 1");
  }
  auto [p1, p2] = align_masses(mu1, mu2);
  return renyi_on_masses(alpha, p1, p2);
}

double kl_divergence(const Dist& mu1, const Dist& mu2) {
  return evaluate(DivergenceSpec::kl(), mu1, mu2);
}

double max_divergence(const Dist& mu1, const Dist& mu2) {
  return evaluate(DivergenceSpec::max_div(), mu1, mu2);
}

double total_variation(const Dist& mu1, const Dist& mu2) {
  return evaluate(DivergenceSpec::tv(), mu1, mu2);
}

double hellinger_distance(const Dist& mu1, const Dist& mu2) {
  return evaluate(DivergenceSpec::hellinger(), mu1, mu2);
}

double f_divergence(const WeightFn& weight, const Dist& mu1, const Dist& mu2) {
  return evaluate(DivergenceSpec::f_div(weight), mu1, mu2);
}

double f_sup_divergence(const QuasiConvexFn& fn, const Dist& mu1,
                        const Dist& mu2) {
  return evaluate(DivergenceSpec::f_sup(fn), mu1, mu2);
}

bool midpoint_convexity_check(const WeightFn& weight, int trials, double hi,
                              std::uint64_t seed) {
  if (!weight.f) throw DomainError("midpoint_convexity_check: missing f");
  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const double s = rng.uniform(0.0, hi) + 1e-12;
    const double t = rng.uniform(0.0, hi) + 1e-12;
    if (weight.f(0.5 * (s + t)) >
        0.5 * (weight.f(s) + weight.f(t)) + 1e-12) {
      return false;
    }
  }
  return true;
}

}  // namespace divkit
