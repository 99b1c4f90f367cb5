#include <doctest.h>

#include <bit>
#include <cmath>

#include "idnc/expectation.hpp"
#include "idnc/verify.hpp"

using namespace idnc;

namespace {

// Monte Carlo of edge count after a transmission; targeted packets drawn
// uniformly from each targeted receiver's own Wants set.
double sampled_edges_after(int n, const std::vector<int>& psi, const std::vector<double>& q,
                           const std::vector<ReceiverId>& targeted, int samples, Rng& rng) {
  std::vector<std::uint32_t> wants(psi.size());
  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < psi.size(); ++i) wants[i] = verify::random_subset(rng, n, psi[i]);
    for (ReceiverId t : targeted) {
      std::uint32_t w = wants[t - 1];
      for (auto pick = rng.index(std::popcount(w)); pick > 0; --pick) w &= w - 1;
      if (rng.bernoulli(q[t - 1])) wants[t - 1] &= ~(w & -w);
    }
    total += static_cast<double>(verify::brute_edge_count(wants));
  }
  return total / samples;
}

}  // namespace

TEST_CASE("expected degree worked examples") {
  const auto one = Cardinalities::from_wants(1, {1, 1});
  CHECK(expected_degree(one)[0] == doctest::Approx(1.0));
  CHECK(expected_edge_count(one) == doctest::Approx(1.0));

  const auto two = Cardinalities::from_wants(2, {1, 1});
  CHECK(expected_degree(two)[0] == doctest::Approx(1.0));

  CHECK(expected_edge_count(Cardinalities::from_wants(5, {0, 0, 0})) == 0.0);
}

TEST_CASE("expected degree of two-packet pairs by enumeration") {
  // Every draw of W_1, W_2 of size 1 from {1, 2}: degree of the W_1 vertex is 1.
  for (std::uint32_t a : {1U, 2U}) {
    for (std::uint32_t b : {1U, 2U}) {
      CHECK(verify::brute_degree_sum({a, b}, 0) == 1);
    }
  }
}

TEST_CASE("edge count is half the weighted degree sum") {
  Rng rng(8);
  for (int t = 0; t < 500; ++t) {
    const int n = rng.between(1, 15), m = rng.between(1, 8);
    std::vector<int> psi(m);
    for (auto& x : psi) x = rng.between(0, n);
    const auto c = Cardinalities::from_wants(n, psi);
    const auto d = expected_degree(c);
    double half = 0.0;
    for (int i = 0; i < m; ++i) half += 0.5 * psi[i] * d[i];
    CHECK(expected_edge_count(c) == doctest::Approx(half));
  }
}

TEST_CASE("degree ordering example") {
  const auto c = Cardinalities::from_wants(4, {3, 1});
  const auto d = expected_degree(c);
  CHECK(d[0] == doctest::Approx(0.5));
  CHECK(d[1] == doctest::Approx(1.5));
  CHECK(check_degree_ordering(c, 1, 2));
  CHECK_THROWS_AS(check_degree_ordering(Cardinalities::from_wants(4, {2, 2}), 1, 2),
                  std::invalid_argument);
}

TEST_CASE("no targets leaves expectations unchanged") {
  const auto c = Cardinalities::from_wants(8, {3, 5, 2, 7}, {0.8, 0.7, 0.9, 0.6});
  const std::vector<ReceiverId> none;
  CHECK(expected_edge_evolution(c, none) == doctest::Approx(expected_edge_count(c)));
  const auto before = expected_degree(c);
  const auto after = expected_degree_evolution(c, none);
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(after[i] == doctest::Approx(before[i]));
  const auto terms = evolution_terms(c, none);
  for (double b : terms.beta) CHECK(b == 0.0);
}

TEST_CASE("vanishing reception probability changes nothing") {
  const double tiny = 1e-12;
  const auto c = Cardinalities::from_wants(8, {3, 5, 2, 7}, {tiny, tiny, 0.9, 0.6});
  const std::vector<ReceiverId> t{1};
  CHECK(expected_edge_evolution(c, t) == doctest::Approx(expected_edge_count(c)));
  const std::vector<ReceiverId> t2{1, 2};
  const auto before = expected_degree(c);
  const auto after = expected_degree_evolution(c, t2);
  CHECK(after[2] == doctest::Approx(before[2]));
  CHECK(after[3] == doctest::Approx(before[3]));
}

TEST_CASE("targeted receiver with nothing wanted is rejected") {
  const auto c = Cardinalities::from_wants(4, {0, 2});
  const std::vector<ReceiverId> t{1};
  CHECK_THROWS_AS(expected_edge_evolution(c, t), std::invalid_argument);
}

TEST_CASE("targeting gain example and the single-target reduction") {
  const auto c = Cardinalities::from_wants(10, {3, 4, 2, 5}, {0.8, 0.9, 0.7, 0.85});
  const std::vector<ReceiverId> t{1, 2, 4};
  CHECK(targeting_gain_applicable(c, t, 3));
  CHECK(check_targeting_gain(c, t, 3));

  const std::vector<ReceiverId> solo{2};
  const auto terms = evolution_terms(c, solo);
  double xi_sum = 0.0;
  for (ReceiverId k : {1, 3, 4}) xi_sum += xi(c, k);
  const double lhs = terms.alpha[1] - c.q(2) * terms.gamma[1] / c.psi(2) - terms.beta[1];
  CHECK(lhs == doctest::Approx(c.q(2) * xi_sum * (1.0 - 1.0 / c.psi(2))));
  CHECK(lhs >= 0.0);

  const auto tight = Cardinalities::from_wants(10, {3, 6}, {0.8, 0.9});
  const std::vector<ReceiverId> both{1, 2};
  CHECK_FALSE(targeting_gain_applicable(tight, both, 1));
  CHECK_THROWS_AS(check_targeting_gain(tight, both, 1), std::invalid_argument);
}

TEST_CASE("xi and Phi are nonnegative and Phi orders by demand and erasure") {
  Rng rng(12);
  int checked = 0;
  while (checked < 5000) {
    const int n = rng.between(2, 20), m = rng.between(3, 8);
    std::vector<int> psi(m);
    std::vector<double> q(m);
    for (int i = 0; i < m; ++i) {
      psi[i] = rng.between(0, n / 2);
      q[i] = 0.01 + 0.99 * rng.uniform();
    }
    const auto c = Cardinalities::from_wants(n, psi, q);
    const ReceiverId i = 1, k = 2, h = 3;
    for (ReceiverId r = 1; r <= m; ++r) {
      CHECK(xi(c, r) >= 0.0);
      CHECK(phi(c, r, i, 0.0) >= 0.0);
      CHECK(phi(c, r, i, 1.0) >= 0.0);
    }
    if (!(q[k - 1] < q[h - 1] && psi[k - 1] > psi[h - 1])) continue;
    ++checked;
    for (double x : {0.0, q[i - 1], 1.0}) CHECK(phi(c, k, i, x) < phi(c, h, i, x));
  }
}

TEST_CASE("Phi goes negative once a receiver wants more than it holds") {
  const auto c = Cardinalities::from_wants(10, {8, 10});
  CHECK(phi(c, 2, 1, 0.0) == doctest::Approx(-0.1));
}

TEST_CASE("pairwise moments by exhaustive enumeration") {
  const int n = 6;
  for (int pi = 1; pi <= n; ++pi) {
    for (int pk = 0; pk <= n; ++pk) {
      double common = 0, held = 0, all = 0, with_first = 0;
      for (std::uint32_t a = 0; a < (1U << n); ++a) {
        if (std::popcount(a) != pi) continue;
        for (std::uint32_t b = 0; b < (1U << n); ++b) {
          if (std::popcount(b) != pk) continue;
          common += std::popcount(a & b);
          all += 1;
          if (a & 1U) {
            with_first += 1;
            if (!(b & 1U)) held += std::popcount(a & b);
          }
        }
      }
      CHECK(common / all == doctest::Approx(expected_common_wants(pi, pk, n)).epsilon(1e-12));
      CHECK(held / with_first ==
            doctest::Approx(expected_held_and_common(pi, pk, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("expected degree and edges against Monte Carlo") {
  Rng rng(5);
  const int n = 10;
  const std::vector<int> psi{6, 2, 9, 4, 7};
  const auto c = Cardinalities::from_wants(n, psi);
  const auto d = expected_degree(c);
  std::vector<double> deg(psi.size(), 0.0);
  double edges = 0.0;
  const int samples = 100'000;
  std::vector<std::uint32_t> w(psi.size());
  for (int s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < psi.size(); ++i) w[i] = verify::random_subset(rng, n, psi[i]);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      deg[i] += static_cast<double>(verify::brute_degree_sum(w, i)) / psi[i];
    }
    edges += static_cast<double>(verify::brute_edge_count(w));
  }
  for (std::size_t i = 0; i < psi.size(); ++i) {
    CHECK(deg[i] / samples == doctest::Approx(d[i]).epsilon(0.01));
  }
  CHECK(edges / samples == doctest::Approx(expected_edge_count(c)).epsilon(0.01));
}

TEST_CASE("expected edge evolution against Monte Carlo with independent targets") {
  Rng rng(6);
  const std::vector<ReceiverId> t{1, 2};
  {
    const std::vector<int> psi{2, 4, 3};
    const std::vector<double> q{0.8, 0.6, 0.9};
    const auto c = Cardinalities::from_wants(6, psi, q);
    CHECK(sampled_edges_after(6, psi, q, t, 200'000, rng) ==
          doctest::Approx(expected_edge_evolution(c, t)).epsilon(0.02));
  }
  {
    const std::vector<int> psi{3, 5, 2, 6};
    const std::vector<double> q{0.7, 0.9, 0.8, 0.75};
    const auto c = Cardinalities::from_wants(8, psi, q);
    CHECK(sampled_edges_after(8, psi, q, t, 200'000, rng) ==
          doctest::Approx(expected_edge_evolution(c, t)).epsilon(0.02));
  }
}

TEST_CASE("cardinality validation") {
  Cardinalities c;
  c.num_packets = 4;
  c.wants = {2};
  c.has = {1};
  c.reception_probs = {0.5};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(Cardinalities::from_wants(4, {2}, {0.0}), std::invalid_argument);
  const auto partial = FeedbackState::from_sets(3, {{1}}, {{2}});
  CHECK_THROWS_AS(Cardinalities::from_state(partial), std::invalid_argument);
}
