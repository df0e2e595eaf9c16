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

#ifndef DIVKIT_KCUT_HPP_
#define DIVKIT_KCUT_HPP_

#include <utility>

#include "divkit/dist.hpp"
#include "divkit/divergence.hpp"

namespace divkit {

// Result of restricting a divergence to k-outcome decision rules.
//
// `value` is the supremum over deterministic maps X -> {1..k} of the
// divergence between the pushforwards, `witness` a map attaining it, and
// `full_value` the divergence on the original pair. For divergences with the
// data-processing inequality, value <= full_value and the gap certifies
// "not k-generated on this pair" when positive.
struct CutResult {
  int k = 0;
  double value = 0.0;
  DeterministicRule witness;
  double full_value = 0.0;
  double gap = 0.0;  // full_value - value; 0 when both are infinite
};

// Exact k-cut by exhaustive enumeration of deterministic rules (justified for
// quasi-convex divergences with the data-processing inequality by the weak
// Birkhoff-von Neumann decomposition). Divergences that are invariant under
// relabeling of the output space enumerate unordered partitions into at most
// k blocks; the rest enumerate all k^|X| labeled maps. Enumeration is
// lexicographic in the assignment vector and ties keep the first maximum, so
// witnesses are reproducible. Capacity: k^|X| <= 2^24.
CutResult k_cut(const DivergenceSpec& spec, int k, const Dist& mu1,
                const Dist& mu2);

// 2-cut of the Renyi divergence through its two-term closed form,
// sup over S of (1/(a-1)) log( P1(S)^a P2(S)^{1-a} + P1(~S)^a P2(~S)^{1-a} ).
// Independent arithmetic from k_cut; agrees with it within 1e-9.
CutResult renyi_2cut_closed_form(double alpha, const Dist& mu1,
                                 const Dist& mu2);

// 3-cut of the Renyi divergence: sup over disjoint (S1, S2) of the three-term
// analogue.
CutResult renyi_3cut_closed_form(double alpha, const Dist& mu1,
                                 const Dist& mu2);

// Full divergence, k-cut, and their gap on one pair. A gap above the caller's
// tolerance certifies that the divergence is not k-generated on this pair.
CutResult generatedness_gap(const DivergenceSpec& spec, int k, const Dist& mu1,
                            const Dist& mu2);

// The three-point pair on {a,b,c} separating the Renyi divergence from its
// 2-cut: mu1 uniform, mu2 proportional to (p^2, p, 1) with
// p = (1/2)^{beta/(alpha-1)}. Requires beta > alpha + 1.
std::pair<Dist, Dist> counterexample_pair(double alpha, double beta);

// True iff the divergence exceeds delta on the pair.
bool delta_distinguishing(const DivergenceSpec& spec, double delta,
                          const Dist& mu1, const Dist& mu2);

}  // namespace divkit

#endif  // DIVKIT_KCUT_HPP_
