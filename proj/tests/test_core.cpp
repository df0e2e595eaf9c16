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

#include <cmath>

#include <doctest.h>

#include "divkit/dist.hpp"
#include "divkit/error.hpp"
#include "test_util.hpp"

using namespace divkit;
using namespace divkit::testutil;

TEST_CASE("Dist construction validates its invariants") {
  CHECK_NOTHROW(make_dist({0.5, 0.5}));
  CHECK_THROWS_AS(make_dist({0.5, 0.6}), DomainError);        // sum != 1
  CHECK_THROWS_AS(make_dist({1.5, -0.5}), DomainError);       // negative
  CHECK_THROWS_AS(Dist({"a", "a"}, {0.5, 0.5}), DomainError); // duplicate
  CHECK_THROWS_AS(Dist({"a"}, {0.5, 0.5}), DomainError);      // length mismatch
  CHECK_THROWS_AS(Dist({}, {}), DomainError);
  // Round-off within 1e-9 is accepted, more is not.
  CHECK_NOTHROW(make_dist({0.5, 0.5 + 5e-10}));
  CHECK_THROWS_AS(make_dist({0.5, 0.5 + 5e-9}), DomainError);
}

TEST_CASE("dirac places unit mass at the label") {
  const Dist d1 = dirac("a", {"a", "b"});
  CHECK(d1.probs()[0] == 1.0);
  CHECK(d1.probs()[1] == 0.0);

  const Dist d2 = dirac("b", {"a", "b", "c"});
  CHECK(d2.probs()[0] == 0.0);
  CHECK(d2.probs()[1] == 1.0);
  CHECK(d2.probs()[2] == 0.0);

  CHECK_THROWS_AS(dirac("z", {"a", "b"}), DomainError);
}

TEST_CASE("pushforward sums mass over preimages") {
  // a,b -> 0 and c -> 1, uniform input.
  const Channel gamma({"a", "b", "c"}, {"0", "1"}, {{1, 0}, {1, 0}, {0, 1}});
  CHECK(gamma.deterministic());
  const Dist mu(letters(3), {1.0 / 3, 1.0 / 3, 1.0 / 3});
  const Dist pushed = pushforward(gamma, mu);
  CHECK(pushed.probs()[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(pushed.probs()[1] == doctest::Approx(1.0 / 3).epsilon(1e-12));

  // Identity is the unit of composition.
  const Dist any = make_dist({0.3, 0.7});
  const Dist same = pushforward(Channel::identity(any.labels()), any);
  CHECK(same.probs() == any.probs());

  // Constant-half rows wash out the input.
  const Channel half({"a", "b"}, {"0", "1"}, {{0.5, 0.5}, {0.5, 0.5}});
  CHECK_FALSE(half.deterministic());
  const Dist washed = pushforward(half, make_dist({0.8, 0.2}));
  CHECK(washed.probs()[0] == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(pushforward(gamma, make_dist({0.5, 0.5})), DomainError);
}

TEST_CASE("pushforward conserves mass on random channels") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const Dist mu = random_dist(rng, n);
    const Channel gamma =
        random_channel(rng, mu.labels(), 2 + static_cast<int>(rng.below(3)));
    const Dist pushed = pushforward(gamma, mu);
    double total = 0.0;
    for (double p : pushed.probs()) total += p;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("compose satisfies the unit laws and matches two pushforwards") {
  SplitMix64 rng(12);
  const Dist mu = random_dist(rng, 4);
  const Channel gamma = random_channel(rng, mu.labels(), 3);
  const Channel id_in = Channel::identity(mu.labels());
  const Channel id_out = Channel::identity(gamma.out_labels());

  CHECK(compose(id_out, gamma).matrix() == gamma.matrix());
  CHECK(compose(gamma, id_in).matrix() == gamma.matrix());

  for (int trial = 0; trial < 100; ++trial) {
    const Dist m = random_dist(rng, 4);
    const Channel g1 = random_channel(rng, m.labels(), 3);
    const Channel g2 = random_channel(rng, g1.out_labels(), 2);
    const Dist via_compose = pushforward(compose(g2, g1), m);
    const Dist via_stages = pushforward(g2, pushforward(g1, m));
    for (std::size_t i = 0; i < via_compose.size(); ++i) {
      CHECK(std::abs(via_compose.probs()[i] - via_stages.probs()[i]) < 1e-12);
    }
  }

  CHECK_THROWS_AS(compose(gamma, gamma), DomainError);  // label mismatch
}

TEST_CASE("deterministic rules compose as functions") {
  const DeterministicRule first{{"a", "b", "c"}, {"x", "y"}, {0, 0, 1}};
  const DeterministicRule second{{"x", "y"}, {"u", "v"}, {1, 0}};
  const Channel composed =
      compose(Channel::from_rule(second), Channel::from_rule(first));
  CHECK(composed.deterministic());
  // a,b -> x -> v and c -> y -> u.
  CHECK(composed.matrix()[0][1] == 1.0);
  CHECK(composed.matrix()[1][1] == 1.0);
  CHECK(composed.matrix()[2][0] == 1.0);
}

TEST_CASE("bvn_decompose of a deterministic channel is a single term") {
  const DeterministicRule rule{{"a", "b"}, {"x", "y"}, {1, 0}};
  const auto decomposition = bvn_decompose(Channel::from_rule(rule));
  REQUIRE(decomposition.terms.size() == 1);
  CHECK(decomposition.terms[0].weight == 1.0);
  CHECK(decomposition.terms[0].rule.map == rule.map);

  const auto id_terms = bvn_decompose(Channel::identity({"a", "b", "c"}));
  REQUIRE(id_terms.terms.size() == 1);
  CHECK(id_terms.terms[0].weight == 1.0);
  CHECK(id_terms.terms[0].rule.map == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("bvn_decompose of the all-half channel under lowest-index ties") {
  const Channel half({"a", "b"}, {"x", "y"}, {{0.5, 0.5}, {0.5, 0.5}});
  const auto decomposition = bvn_decompose(half);
  REQUIRE(decomposition.terms.size() == 2);
  // First peel takes the first column for both rows, then the second.
  CHECK(decomposition.terms[0].weight == 0.5);
  CHECK(decomposition.terms[0].rule.map == std::vector<std::size_t>{0, 0});
  CHECK(decomposition.terms[1].weight == 0.5);
  CHECK(decomposition.terms[1].rule.map == std::vector<std::size_t>{1, 1});
}

TEST_CASE("bvn_decompose reconstructs random channels within 1e-12") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n_in = 2 + static_cast<int>(rng.below(7));   // up to 8
    const int n_out = 2 + static_cast<int>(rng.below(3));  // up to 4
    const Channel gamma = random_channel(rng, letters(n_in), n_out);
    const auto decomposition = bvn_decompose(gamma);

    CHECK(decomposition.terms.size() <=
          static_cast<std::size_t>(n_in) * static_cast<std::size_t>(n_out));
    double total = 0.0;
    for (const auto& term : decomposition.terms) {
      CHECK(term.weight > 0.0);
      total += term.weight;
    }
    CHECK(std::abs(total - 1.0) < 1e-12);

    const Channel rebuilt = bvn_reconstruct(decomposition);
    for (int i = 0; i < n_in; ++i) {
      for (int j = 0; j < n_out; ++j) {
        CHECK(std::abs(gamma.matrix()[i][j] - rebuilt.matrix()[i][j]) < 1e-12);
      }
    }
  }
}

TEST_CASE("any 3x2 channel decomposes into at most 6 terms") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Channel gamma = random_channel(rng, letters(3), 2);
    const auto decomposition = bvn_decompose(gamma);
    CHECK(decomposition.terms.size() <= 6);
    const Channel rebuilt = bvn_reconstruct(decomposition);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(gamma.matrix()[i][j] - rebuilt.matrix()[i][j]) < 1e-12);
      }
    }
  }
}

TEST_CASE("Channel construction rejects non-stochastic input") {
  CHECK_THROWS_AS(Channel({"a"}, {"x", "y"}, {{0.7, 0.7}}), DomainError);
  CHECK_THROWS_AS(Channel({"a"}, {"x", "y"}, {{1.2, -0.2}}), DomainError);
  CHECK_THROWS_AS(Channel({"a", "b"}, {"x"}, {{1.0}}), DomainError);
}
