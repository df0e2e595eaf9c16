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

#include "divkit/dist.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "divkit/error.hpp"

namespace divkit {

namespace {

void check_distinct_labels(const std::vector<std::string>& labels,
                           const char* what) {
  std::set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DomainError(std::string(what) + ": duplicate label '" + label +
                        "'");
    }
  }
}

}  // namespace

Dist::Dist(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.empty()) throw DomainError("Dist: empty outcome space");
  if (labels_.size() != probs_.size()) {
    throw DomainError("Dist: labels and probs have different lengths");
  }
  check_distinct_labels(labels_, "Dist");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("Dist: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg << "Dist: probabilities sum to " << total << ", not 1";
    throw DomainError(msg.str());
  }
}

std::size_t Dist::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return labels_.size();
}

Dist dirac(const std::string& label, std::vector<std::string> space) {
  std::vector<double> probs(space.size(), 0.0);
  bool found = false;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space[i] == label) {
      probs[i] = 1.0;
      found = true;
      break;
    }
  }
  if (!found) {
    throw DomainError("dirac: label '" + label + "' not in outcome space");
  }
  return Dist(std::move(space), std::move(probs));
}

Channel::Channel(std::vector<std::string> in_labels,
                 std::vector<std::string> out_labels,
                 std::vector<std::vector<double>> matrix)
    : in_labels_(std::move(in_labels)),
      out_labels_(std::move(out_labels)),
      matrix_(std::move(matrix)) {
  if (in_labels_.empty() || out_labels_.empty()) {
    throw DomainError("Channel: empty label space");
  }
  check_distinct_labels(in_labels_, "Channel(in)");
  check_distinct_labels(out_labels_, "Channel(out)");
  if (matrix_.size() != in_labels_.size()) {
    throw DomainError("Channel: row count does not match in_labels");
  }
  deterministic_ = true;
  for (const auto& row : matrix_) {
    if (row.size() != out_labels_.size()) {
      throw DomainError("Channel: row width does not match out_labels");
    }
    double total = 0.0;
    int ones = 0;
    for (double p : row) {
      if (!(p >= 0.0)) throw DomainError("Channel: negative entry");
      total += p;
      if (std::abs(p - 1.0) <= kExactTolerance) {
        ++ones;
      } else if (p > kExactTolerance) {
        deterministic_ = false;
      }
    }
    if (ones != 1) deterministic_ = false;
    if (std::abs(total - 1.0) > kSumTolerance) {
      throw DomainError("Channel: row does not sum to 1");
    }
  }
}

Channel Channel::identity(std::vector<std::string> labels) {
  std::vector<std::vector<double>> matrix(
      labels.size(), std::vector<double>(labels.size(), 0.0));
  for (std::size_t i = 0; i < labels.size(); ++i) matrix[i][i] = 1.0;
  std::vector<std::string> out = labels;
  return Channel(std::move(labels), std::move(out), std::move(matrix));
}

Channel Channel::from_rule(const DeterministicRule& rule) {
  if (rule.map.size() != rule.in_labels.size()) {
    throw DomainError("DeterministicRule: assignment not total on in_labels");
  }
  std::vector<std::vector<double>> matrix(
      rule.in_labels.size(), std::vector<double>(rule.out_labels.size(), 0.0));
  for (std::size_t i = 0; i < rule.map.size(); ++i) {
    if (rule.map[i] >= rule.out_labels.size()) {
      throw DomainError("DeterministicRule: image outside out_labels");
    }
    matrix[i][rule.map[i]] = 1.0;
  }
  return Channel(rule.in_labels, rule.out_labels, std::move(matrix));
}

Dist pushforward(const Channel& gamma, const Dist& mu) {
  if (mu.labels() != gamma.in_labels()) {
    throw DomainError("pushforward: distribution labels do not match channel "
                      "input labels");
  }
  std::vector<double> out(gamma.out_labels().size(), 0.0);
  for (std::size_t x = 0; x < mu.size(); ++x) {
    const double mass = mu.probs()[x];
    if (mass == 0.0) continue;
    const auto& row = gamma.matrix()[x];
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += row[y] * mass;
  }
  return Dist(gamma.out_labels(), std::move(out));
}

Dist pushforward(const DeterministicRule& rule, const Dist& mu) {
  if (mu.labels() != rule.in_labels) {
    throw DomainError("pushforward: distribution labels do not match rule "
                      "input labels");
  }
  std::vector<double> out(rule.out_labels.size(), 0.0);
  for (std::size_t x = 0; x < mu.size(); ++x) out[rule.map[x]] += mu.probs()[x];
  return Dist(rule.out_labels, std::move(out));
}

Channel compose(const Channel& second, const Channel& first) {
  if (first.out_labels() != second.in_labels()) {
    throw DomainError("compose: inner output labels do not match outer input "
                      "labels");
  }
  const std::size_t nx = first.in_labels().size();
  const std::size_t nz = first.out_labels().size();
  const std::size_t ny = second.out_labels().size();
  std::vector<std::vector<double>> matrix(nx, std::vector<double>(ny, 0.0));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t z = 0; z < nz; ++z) {
      const double w = first.matrix()[x][z];
      if (w == 0.0) continue;
      for (std::size_t y = 0; y < ny; ++y) {
        matrix[x][y] += w * second.matrix()[z][y];
      }
    }
  }
  return Channel(first.in_labels(), second.out_labels(), std::move(matrix));
}

BvnDecomposition bvn_decompose(const Channel& gamma) {
  const std::size_t rows = gamma.in_labels().size();
  const std::size_t cols = gamma.out_labels().size();
  std::vector<std::vector<double>> residual = gamma.matrix();
  double remaining = 1.0;

  BvnDecomposition result;
  const std::size_t max_steps = rows * cols;
  for (std::size_t step = 0; step < max_steps && remaining >= kExactTolerance;
       ++step) {
    // Per-row argmax (lowest index on ties) defines the rule; the weight is
    // the smallest row maximum, so at least one entry reaches zero.
    std::vector<std::size_t> argmax(rows, 0);
    double alpha = 2.0;
    for (std::size_t i = 0; i < rows; ++i) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < cols; ++j) {
        if (residual[i][j] > residual[i][best]) best = j;
      }
      argmax[i] = best;
      alpha = std::min(alpha, residual[i][best]);
    }

    DeterministicRule rule{gamma.in_labels(), gamma.out_labels(),
                           std::move(argmax)};
    if (remaining - alpha < kExactTolerance) {
      // Last step: absorb the residual so the weights sum to exactly 1.
      result.terms.push_back({remaining, std::move(rule)});
      remaining = 0.0;
      break;
    }
    for (std::size_t i = 0; i < rows; ++i) residual[i][rule.map[i]] -= alpha;
    result.terms.push_back({alpha, std::move(rule)});
    remaining -= alpha;
  }

  if (remaining >= kExactTolerance) {
    throw NumericError("bvn_decompose: did not terminate within |X|*|Y| steps");
  }
  return result;
}

Channel bvn_reconstruct(const BvnDecomposition& decomposition) {
  if (decomposition.terms.empty()) {
    throw DomainError("bvn_reconstruct: empty decomposition");
  }
  const auto& first = decomposition.terms.front().rule;
  std::vector<std::vector<double>> matrix(
      first.in_labels.size(), std::vector<double>(first.out_labels.size(), 0.0));
  for (const auto& term : decomposition.terms) {
    for (std::size_t i = 0; i < term.rule.map.size(); ++i) {
      matrix[i][term.rule.map[i]] += term.weight;
    }
  }
  return Channel(first.in_labels, first.out_labels, std::move(matrix));
}

}  // namespace divkit
