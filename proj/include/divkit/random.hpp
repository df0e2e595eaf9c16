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

#ifndef DIVKIT_RANDOM_HPP_
#define DIVKIT_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

namespace divkit {

// Counter-friendly PRNG. Standard-library distributions are not portable
// across implementations, so samplers that promise seed-reproducible output
// (the conversion falsifier, the test generators) use this engine and the
// draw helpers below exclusively.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw on (0, 1].
  double uniform01() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform draw on [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Flat Dirichlet draw (exponential weights, normalized). Every coordinate is
// strictly positive, so generated distributions have full support.
inline std::vector<double> random_simplex_point(SplitMix64& rng, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& wi : w) {
    wi = -std::log(rng.uniform01());
    if (wi <= 0.0) wi = 1e-300;
    total += wi;
  }
  for (auto& wi : w) wi /= total;
  return w;
}

// Heavier-tailed variant: raises a flat draw to the given power and
// renormalizes. Powers above 1 concentrate mass and create tiny coordinates,
// which is where conversion-law counterexamples live.
inline std::vector<double> random_peaked_point(SplitMix64& rng, int n,
                                               double power) {
  std::vector<double> w = random_simplex_point(rng, n);
  double total = 0.0;
  for (auto& wi : w) {
    wi = std::pow(wi, power);
    if (wi <= 0.0) wi = 1e-300;
    total += wi;
  }
  for (auto& wi : w) wi /= total;
  return w;
}

}  // namespace divkit

#endif  // DIVKIT_RANDOM_HPP_
