#include <doctest.h>

#include "motifsets/set_finder.hpp"
#include "motifsets/synth.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace motifsets;

TEST_CASE("two planted shape classes give sets of three and two") {
  const auto a = shape_values({ShapeKind::Spike, 10, 10.0});
  const auto b = shape_values({ShapeKind::Step, 10, 10.0});
  const auto s = fixture::on_ramp(400, {{a, {0, 100, 200}}, {b, {250, 320}}});
  const double r = 1.0;
  REQUIRE(distance(a, b) > 2 * r);
  const auto counts = count_matches(s, 10, r);
  CHECK(counts[0] == 2);
  CHECK(counts[100] == 2);
  CHECK(counts[200] == 2);
  CHECK(counts[250] == 1);
  CHECK(counts[320] == 1);
  const auto sets = set_finder(s, 10, r);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].members == std::vector<std::size_t>{0, 100, 200});
  CHECK(sets[1].members == std::vector<std::size_t>{250, 320});
  CHECK_FALSE(sets[0].pair_distance.has_value());
}

TEST_CASE("noise with a tiny radius has no matches") {
  const TimeSeries s(oracle::noise(300, 2));
  const auto counts = count_matches(s, 20, 1e-6);
  for (auto c : counts) CHECK(c == 0);
  CHECK(set_finder(s, 20, 1e-6).empty());
  CHECK_THROWS_AS(set_finder(s, 20, 0.0), InvalidParameter);
  CHECK_THROWS_AS(set_finder(s, 301, 1.0), InvalidParameter);
}

TEST_CASE("counts equal an independent recount") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TimeSeries s(oracle::noise(300, seed));
    CHECK(count_matches(s, 20, 5.0) == oracle::recount(s, 20, 5.0));
    CHECK(count_matches(s, 20, 5.0, false) == oracle::recount(s, 20, 5.0));
  }
}

TEST_CASE("ranking is by descending count then ascending start") {
  const std::vector<std::size_t> counts{1, 3, 0, 3, 2};
  const auto ranked = rank_windows(counts);
  REQUIRE(ranked.size() == 5);
  CHECK(ranked[0].start == 1);
  CHECK(ranked[1].start == 3);
  CHECK(ranked[2].start == 4);
  CHECK(ranked[3].start == 0);
  CHECK(ranked[4].start == 2);
}

namespace {

// n = 2 windows of constant value at starts 0, 4, 8, 12.
TimeSeries constant_windows(std::vector<double> levels) {
  std::vector<double> v(4 * levels.size(), 99.0);
  for (std::size_t i = 0; i < levels.size(); ++i) v[4 * i] = v[4 * i + 1] = levels[i];
  return TimeSeries(std::move(v));
}

}  // namespace

TEST_CASE("separate keeps a lone window") {
  const auto s = constant_windows({0.0});
  const std::vector<RankedWindow> ranked{{0, 1}};
  const auto kept = separate(s, 2, ranked, 1.0);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].start == 0);
}

TEST_CASE("separate drops a lower-ranked window within 2r") {
  const auto s = constant_windows({0.0, 1.0});
  const std::vector<RankedWindow> ranked{{0, 5}, {4, 3}};
  const auto kept = separate(s, 2, ranked, 1.0);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].start == 0);
}

TEST_CASE("removed windows never block later ones") {
  // A = 0, B = 1, C = 2 (n = 2): d(A,B) = d(B,C) = 1.41 <= 2, d(A,C) = 2.83 > 2
  const auto s = constant_windows({0.0, 1.0, 2.0});
  REQUIRE(oracle::euclid(s, 0, 4, 2) <= 2.0);
  REQUIRE(oracle::euclid(s, 4, 8, 2) <= 2.0);
  REQUIRE(oracle::euclid(s, 0, 8, 2) > 2.0);
  const std::vector<RankedWindow> ranked{{0, 5}, {4, 4}, {8, 3}};
  const auto kept = separate(s, 2, ranked, 1.0);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].start == 0);
  CHECK(kept[1].start == 8);
}

TEST_CASE("separate skips zero counts") {
  const auto s = constant_windows({0.0, 10.0});
  const std::vector<RankedWindow> ranked{{0, 2}, {4, 0}};
  CHECK(separate(s, 2, ranked, 1.0).size() == 1);
}

TEST_CASE("condensed matches keep the closest member of each overlap run") {
  std::vector<double> v = oracle::noise(80, 6);
  // windows 40 and 41 both near window 0; 41 is the exact copy
  for (std::size_t k = 0; k < 5; ++k) v[41 + k] = v[k];
  const TimeSeries s(std::move(v));
  const double r = oracle::euclid(s, 0, 40, 5) + 1.0;
  const auto matches = condensed_matches(s, 5, 0, r);
  CHECK(std::find(matches.begin(), matches.end(), 41) != matches.end());
  CHECK(std::find(matches.begin(), matches.end(), 40) == matches.end());
  for (std::size_t i = 1; i < matches.size(); ++i) CHECK_FALSE(trivial_match(matches[i - 1], matches[i], 5));
}

TEST_CASE("set finder invariants over generated cases") {
  const auto outcome = props::set_finder_separation();
  INFO(outcome.first_failure);
  CHECK(outcome.cases >= props::kCases);
  CHECK(outcome.failures == 0);
}
