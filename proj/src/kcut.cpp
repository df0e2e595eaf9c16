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

#include "divkit/kcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "divkit/error.hpp"

namespace divkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEnumerationCap = 1 << 24;

void check_capacity(std::size_t n, int k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": k must be >= 1");
  const double total =
      std::pow(static_cast<double>(k), static_cast<double>(n));
  if (total > kEnumerationCap) {
    throw CapacityError(std::string(what) +
                        ": enumeration bound k^|X| <= 2^24 exceeded");
  }
}

std::vector<std::string> cut_labels(int k) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  return labels;
}

DeterministicRule make_witness(const Dist& mu1, int k,
                               const std::vector<std::size_t>& assign) {
  return DeterministicRule{mu1.labels(), cut_labels(k), assign};
}

double safe_gap(double full, double value) {
  if (std::isinf(full) && std::isinf(value)) return 0.0;
  return full - value;
}

// a^alpha * b^(1-alpha) with the divergence conventions: 0 when a = 0,
// +infinity when a > 0 and b = 0.
double binary_renyi_term(double a, double b, double alpha) {
  if (a == 0.0) return 0.0;
  if (b == 0.0) return kInf;
  return std::pow(a, alpha) * std::pow(b, 1.0 - alpha);
}

// Enumerates restricted-growth strings: assignments with a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]), capped at k-1. These are canonical
// representatives of partitions into at most k blocks, in lexicographic
// order, so block-relabeling-invariant divergences skip redundant maps and
// the reported witness is the lexicographically least maximizer.
template <typename Visit>
void for_each_partition(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> assign(n, 0);
  std::vector<std::size_t> prefix_bound(n, 1);  // 1 + max of strict prefix
  prefix_bound[0] = 0;                          // a[0] is pinned to 0
  while (true) {
    visit(const_cast<const std::vector<std::size_t>&>(assign));
    std::size_t j = n;
    bool advanced = false;
    while (j > 1) {
      --j;
      if (assign[j] < std::min(prefix_bound[j], k - 1)) {
        ++assign[j];
        const std::size_t next_bound =
            std::max(prefix_bound[j], assign[j] + 1);
        for (std::size_t l = j + 1; l < n; ++l) {
          assign[l] = 0;
          prefix_bound[l] = next_bound;
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

template <typename Visit>
void for_each_labeled_map(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> assign(n, 0);
  while (true) {
    visit(const_cast<const std::vector<std::size_t>&>(assign));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++assign[pos] < k) break;
      assign[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

CutResult k_cut(const DivergenceSpec& spec, int k, const Dist& mu1,
                const Dist& mu2) {
  if (spec.family() == DivergenceSpec::Family::kFSup &&
      !spec.f_sup_fn().declared_quasi_convex) {
    throw DomainError("k_cut: divergence must be declared quasi-convex");
  }
  auto [p1, p2] = align_masses(mu1, mu2);
  const std::size_t n = p1.size();
  check_capacity(n, k, "k_cut");
  const std::size_t blocks = static_cast<std::size_t>(k);

  double best = -kInf;
  std::vector<std::size_t> best_assign(n, 0);
  std::vector<double> q1(blocks), q2(blocks);
  auto consider = [&](const std::vector<std::size_t>& assign) {
    std::fill(q1.begin(), q1.end(), 0.0);
    std::fill(q2.begin(), q2.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      q1[assign[i]] += p1[i];
      q2[assign[i]] += p2[i];
    }
    const double value = evaluate_on_masses(spec, q1, q2);
    if (value > best) {
      best = value;
      best_assign = assign;
    }
  };

  if (spec.block_symmetric()) {
    for_each_partition(n, blocks, consider);
  } else {
    for_each_labeled_map(n, blocks, consider);
  }

  CutResult result;
  result.k = k;
  result.value = best;
  result.witness = make_witness(mu1, k, best_assign);
  result.full_value = evaluate_on_masses(spec, p1, p2);
  result.gap = safe_gap(result.full_value, result.value);
  return result;
}

CutResult renyi_2cut_closed_form(double alpha, const Dist& mu1,
                                 const Dist& mu2) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError("renyi_2cut_closed_form requires finite alpha > 1");
  }
  auto [p1, p2] = align_masses(mu1, mu2);
  const std::size_t n = p1.size();
  if (n > 24) throw CapacityError("renyi_2cut_closed_form: |X| <= 24");

  double best_sum = -kInf;
  std::uint32_t best_mask = 0;
  const std::uint32_t end = static_cast<std::uint32_t>(1) << n;
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    // Complement masses are accumulated directly: forming them as 1 - in
    // leaves round-off residue that can turn an empty complement into a
    // spurious infinite term.
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
    const double sum = binary_renyi_term(in1, in2, alpha) +
                       binary_renyi_term(out1, out2, alpha);
    if (sum > best_sum) {
      best_sum = sum;
      best_mask = mask;
    }
  }

  std::vector<std::size_t> assign(n);
  for (std::size_t i = 0; i < n; ++i) {
    assign[i] = (best_mask & (static_cast<std::uint32_t>(1) << i)) ? 0 : 1;
  }

  CutResult result;
  result.k = 2;
  result.value = std::log(best_sum) / (alpha - 1.0);
  result.witness = make_witness(mu1, 2, assign);
  result.full_value = renyi_divergence(alpha, mu1, mu2);
  result.gap = safe_gap(result.full_value, result.value);
  return result;
}

CutResult renyi_3cut_closed_form(double alpha, const Dist& mu1,
                                 const Dist& mu2) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError("renyi_3cut_closed_form requires finite alpha > 1");
  }
  auto [p1, p2] = align_masses(mu1, mu2);
  const std::size_t n = p1.size();
  if (n > 15) throw CapacityError("renyi_3cut_closed_form: |X| <= 15");

  double best_sum = -kInf;
  std::vector<std::size_t> best_assign(n, 0);
  // Trit i places outcome i in S1, S2, or the remainder; all three block
  // masses are accumulated directly to avoid round-off residue.
  for_each_labeled_map(n, 3, [&](const std::vector<std::size_t>& assign) {
    double b1[3] = {0.0, 0.0, 0.0};
    double b2[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      b1[assign[i]] += p1[i];
      b2[assign[i]] += p2[i];
    }
    const double sum = binary_renyi_term(b1[0], b2[0], alpha) +
                       binary_renyi_term(b1[1], b2[1], alpha) +
                       binary_renyi_term(b1[2], b2[2], alpha);
    if (sum > best_sum) {
      best_sum = sum;
      best_assign = assign;
    }
  });

  CutResult result;
  result.k = 3;
  result.value = std::log(best_sum) / (alpha - 1.0);
  result.witness = make_witness(mu1, 3, best_assign);
  result.full_value = renyi_divergence(alpha, mu1, mu2);
  result.gap = safe_gap(result.full_value, result.value);
  return result;
}

CutResult generatedness_gap(const DivergenceSpec& spec, int k, const Dist& mu1,
                            const Dist& mu2) {
  return k_cut(spec, k, mu1, mu2);
}

std::pair<Dist, Dist> counterexample_pair(double alpha, double beta) {
  if (!(alpha > 1.0) || std::isinf(alpha)) {
    throw DomainError("counterexample_pair requires finite alpha > 1");
  }
  if (!(beta > alpha + 1.0)) {
    throw DomainError("counterexample_pair requires beta > alpha + 1");
  }
  const double p = std::pow(0.5, beta / (alpha - 1.0));
  const double denom = p * p + p + 1.0;
  std::vector<std::string> labels = {"a", "b", "c"};
  Dist mu1(labels, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  Dist mu2(labels, {p * p / denom, p / denom, 1.0 / denom});
  return {std::move(mu1), std::move(mu2)};
}

bool delta_distinguishing(const DivergenceSpec& spec, double delta,
                          const Dist& mu1, const Dist& mu2) {
  return evaluate(spec, mu1, mu2) > delta;
}

}  // namespace divkit
