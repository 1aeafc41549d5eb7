#include <doctest.h>

#include <random>

#include "motifsets/eval.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace motifsets;

using Idx = std::vector<std::size_t>;

TEST_CASE("exact recovery scores perfectly") {
  const Idx truth{10, 100, 200, 300};
  const auto rep = score_single(truth, truth, 29);
  CHECK(rep.tp == 4);
  CHECK(rep.precision == 1.0);
  CHECK(rep.sensitivity == 1.0);
}

TEST_CASE("nothing found") {
  const auto rep = score_single(Idx{}, Idx{10, 100, 200, 300}, 29);
  CHECK(rep.tp == 0);
  CHECK(rep.fn == 4);
  CHECK(rep.sensitivity == 0.0);
  CHECK(rep.sensitivity_defined);
  CHECK_FALSE(rep.precision_defined);
  CHECK(rep.precision == 0.0);
}

TEST_CASE("tolerance is floor(n / 2)") {
  CHECK(score_single(Idx{113}, Idx{100}, 29).tp == 1);
  CHECK(score_single(Idx{87}, Idx{100}, 29).tp == 1);
  const auto miss = score_single(Idx{115}, Idx{100}, 29);
  CHECK(miss.tp == 0);
  CHECK(miss.fp == 1);
  CHECK(miss.fn == 1);
}

TEST_CASE("a second hit on one planted shape is a false positive") {
  const auto rep = score_single(Idx{98, 103}, Idx{100}, 29);
  CHECK(rep.tp == 1);
  CHECK(rep.fp == 1);
  CHECK(rep.precision == 0.5);
}

TEST_CASE("greedy assignment prefers the closest pairs") {
  // 106 pairs with 110 first (gap 4), leaving 100 for 90 (gap 10 <= 14)
  const auto rep = score_single(Idx{106, 90}, Idx{100, 110}, 29);
  CHECK(rep.tp == 2);
}

TEST_CASE("repeated indexes count once") {
  const auto rep = score_single(Idx{100, 100}, Idx{100}, 29);
  CHECK(rep.tp == 1);
  CHECK(rep.fp == 0);
}

TEST_CASE("matching score anchors") {
  CHECK(matching_score({{13}}, {{21}}, 29) == 8);
  CHECK(matching_score({{13}}, {}, 29) == 29);
  CHECK(matching_score({}, {{13}}, 29) == 29);
  CHECK(matching_score({{0}}, {{100}}, 29) == 29);
  CHECK(set_pair_cost(Idx{13}, Idx{21}, 29) == 8);
  CHECK(set_pair_cost(Idx{13, 50}, Idx{21}, 29) == 8 + 29);
}

TEST_CASE("identical sets score zero") {
  const IndexSets sets{{1, 50, 99}, {200, 260}};
  CHECK(matching_score(sets, sets, 29) == 0);
}

TEST_CASE("nothing found against two true sets") {
  CHECK(matching_score({}, {{1, 2, 3}, {10, 20, 30, 40}}, 29) == 203);
}

TEST_CASE("extra found sets are pure penalty") {
  CHECK(matching_score({{100}, {102}}, {{100}}, 29) == 29);
}

TEST_CASE("assignment on a known matrix") {
  const std::vector<std::vector<std::int64_t>> costs{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  CHECK(min_cost_assignment(costs) == 5);
  CHECK(min_cost_assignment({{7, 3}}) == 3);
  CHECK(min_cost_assignment({{7}, {3}}) == 3);
}

TEST_CASE("matching score equals exhaustive enumeration") {
  std::mt19937_64 rng(77);
  for (int c = 0; c < 500; ++c) {
    const std::size_t n = 1 + rng() % 30;
    const auto found = props::random_sets(rng, 3, 4, 120);
    const auto truth = props::random_sets(rng, 3, 4, 120);
    REQUIRE(matching_score(found, truth, n) == oracle::enumerate_matching(found, truth, n));
  }
}

TEST_CASE("eval invariants over generated cases") {
  for (const auto& outcome : {props::score_single_conservation(), props::matching_score_symmetry_bounds()}) {
    INFO(outcome.name << ": " << outcome.first_failure);
    CHECK(outcome.cases >= props::kCases);
    CHECK(outcome.failures == 0);
  }
}

TEST_CASE("t-test on the textbook pair") {
  const std::vector<double> a{1, 2, 3, 4, 5}, b{2, 3, 4, 5, 6};
  const auto res = t_test(a, b, 0.05);
  CHECK(res.t == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(res.degrees_of_freedom == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(res.p_value == doctest::Approx(0.34659350708733416).epsilon(1e-10));
  CHECK(res.p_value == doctest::Approx(oracle::student_two_sided_p(-1.0, 8.0)).epsilon(1e-8));
  CHECK_FALSE(res.significant);
}

TEST_CASE("welch statistics with unequal variances") {
  const std::vector<double> a{2.1, 3.4, 1.9, 5.6, 4.4, 3.0, 2.2}, b{8.0, 1.0, 12.5, 6.3};
  const auto expected = oracle::welch(a, b);
  const auto res = t_test(a, b, 0.05);
  CHECK(res.t == doctest::Approx(expected.t).epsilon(1e-12));
  CHECK(res.degrees_of_freedom == doctest::Approx(expected.df).epsilon(1e-12));
  CHECK(res.p_value == doctest::Approx(oracle::student_two_sided_p(expected.t, expected.df)).epsilon(1e-7));
}

TEST_CASE("identical samples are not significant") {
  const std::vector<double> a{1, 2, 3};
  const auto res = t_test(a, a, 0.05);
  CHECK(res.p_value == 1.0);
  CHECK_FALSE(res.significant);
  const std::vector<double> flat{4, 4, 4};
  const auto degenerate = t_test(flat, flat, 0.05);
  CHECK(degenerate.p_value == 1.0);
  CHECK_FALSE(degenerate.significant);
}

TEST_CASE("a one sigma shift over 1000 draws is significant") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> unit(0.0, 1.0);
  std::vector<double> a(1000), b(1000);
  for (auto& x : a) x = unit(rng);
  for (auto& x : b) x = 1.0 + unit(rng);
  CHECK(t_test(a, b, 0.05).significant);
}

TEST_CASE("t-test preconditions") {
  CHECK_THROWS_AS(t_test(std::vector<double>{1}, std::vector<double>{1, 2}, 0.05), InvalidParameter);
  CHECK_THROWS_AS(t_test(std::vector<double>{1, 2}, std::vector<double>{1, 2}, 1.5), InvalidParameter);
}

TEST_CASE("summary statistics") {
  const std::vector<double> xs{2, 4, 4, 4, 5, 5, 7, 9};
  CHECK(mean(xs) == 5.0);
  CHECK(standard_error(xs) == doctest::Approx(std::sqrt(32.0 / 7.0) / std::sqrt(8.0)));
  CHECK(standard_error(std::vector<double>{3}) == 0.0);
}
