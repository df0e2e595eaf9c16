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

#ifndef DIVKIT_DIST_HPP_
#define DIVKIT_DIST_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace divkit {

// Construction rejects malformed input outright; arithmetic noise within
// kSumTolerance is accepted, internal comparisons use kExactTolerance.
inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kExactTolerance = 1e-12;

// A probability distribution on a finite labeled outcome space. Labels are
// opaque strings and carry the identity of an outcome; positions do not.
// Immutable after construction; all operations on it are pure.
class Dist {
 public:
  Dist(std::vector<std::string> labels, std::vector<double> probs);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return labels_.size(); }

  // Index of a label, or size() if absent.
  std::size_t index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

// Point mass at `label` within the outcome space `space`.
Dist dirac(const std::string& label, std::vector<std::string> space);

// A function from input labels to output labels, total on its domain.
struct DeterministicRule {
  std::vector<std::string> in_labels;
  std::vector<std::string> out_labels;
  std::vector<std::size_t> map;  // map[i] indexes into out_labels

  const std::string& apply(std::size_t in_index) const {
    return out_labels[map[in_index]];
  }
};

// A row-stochastic map from one finite labeled space to another. Row i is the
// output distribution for input label i; every row must sum to 1 within
// kSumTolerance.
class Channel {
 public:
  Channel(std::vector<std::string> in_labels,
          std::vector<std::string> out_labels,
          std::vector<std::vector<double>> matrix);

  static Channel identity(std::vector<std::string> labels);
  static Channel from_rule(const DeterministicRule& rule);

  const std::vector<std::string>& in_labels() const { return in_labels_; }
  const std::vector<std::string>& out_labels() const { return out_labels_; }
  const std::vector<std::vector<double>>& matrix() const { return matrix_; }

  // True when every row is a point mass (one entry 1, rest 0, within
  // kExactTolerance).
  bool deterministic() const { return deterministic_; }

 private:
  std::vector<std::string> in_labels_;
  std::vector<std::string> out_labels_;
  std::vector<std::vector<double>> matrix_;
  bool deterministic_ = false;
};

// The distribution gamma(mu) on the channel's output space. Requires
// mu.labels() == gamma.in_labels().
Dist pushforward(const Channel& gamma, const Dist& mu);
Dist pushforward(const DeterministicRule& rule, const Dist& mu);

// Sequential composition: (second • first)(mu) = second(first(mu)).
// Requires first.out_labels() == second.in_labels().
Channel compose(const Channel& second, const Channel& first);

struct BvnTerm {
  double weight = 0.0;
  DeterministicRule rule;
};

// A convex combination of deterministic rules reconstructing a channel.
// Weights are positive, sum to 1 within kExactTolerance, and there are at
// most |in| * |out| terms.
struct BvnDecomposition {
  std::vector<BvnTerm> terms;
};

// Decomposes a channel into a convex combination of deterministic rules by
// repeatedly peeling off the per-row argmax rule with weight
// min over rows of the row maximum. Argmax/argmin ties break toward the
// lowest index; the final weight absorbs the residual so weights sum to 1
// exactly. Terminates within |in| * |out| steps.
BvnDecomposition bvn_decompose(const Channel& gamma);

// Rebuilds the channel matrix sum_m a_m * indicator(rule_m(x) = y).
Channel bvn_reconstruct(const BvnDecomposition& decomposition);

}  // namespace divkit

#endif  // DIVKIT_DIST_HPP_
