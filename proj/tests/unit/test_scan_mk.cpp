#include <doctest.h>

#include "motifsets/scan_mk.hpp"
#include "motifsets/synth.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace motifsets;

TEST_CASE("three exact copies form a single motif set") {
  const auto spike = shape_values({ShapeKind::Spike, 29, 10.0});
  const auto s = fixture::on_ramp(260, {{spike, {0, 100, 200}}});
  const auto sets = scan_mk(s, {29, 1.0});
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].members == std::vector<std::size_t>{0, 100, 200});
  CHECK(sets[0].representative == spike);
  REQUIRE(sets[0].pair_distance);
  CHECK(*sets[0].pair_distance == 0.0);
}

TEST_CASE("white noise with a tiny radius yields nothing") {
  const TimeSeries s(oracle::noise(400, 8));
  CHECK(scan_mk(s, {20, 1e-6}).empty());
}

TEST_CASE("invalid parameters are rejected") {
  const TimeSeries s(oracle::noise(100, 1));
  CHECK_THROWS_AS(scan_mk(s, {0, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(scan_mk(s, {10, -1.0}), InvalidParameter);
  CHECK_THROWS_AS(scan_mk(s, {101, 1.0}), InvalidParameter);
}

TEST_CASE("condense collapses an overlap run to its most central member") {
  std::vector<double> v = oracle::noise(70, 12);
  // window 60 duplicates window 11, pulling 11 to the centre of the run
  for (std::size_t k = 0; k < 4; ++k) v[60 + k] = v[11 + k];
  const TimeSeries s(std::move(v));
  const std::vector<std::size_t> members{10, 11, 12, 60};
  const auto total = [&](std::size_t a) {
    double t = 0;
    for (auto b : members) t += oracle::euclid(s, a, b, 4);
    return t;
  };
  REQUIRE(total(11) < total(10));
  REQUIRE(total(11) < total(12));
  CHECK(condense(s, 4, members, 1e6) == std::vector<std::size_t>{11, 60});
}

TEST_CASE("condense leaves a tight non-overlapping set unchanged") {
  const TimeSeries s(oracle::noise(100, 3));
  const std::vector<std::size_t> members{0, 20, 40, 80};
  CHECK(condense(s, 5, members, 1e6) == members);
}

TEST_CASE("condense drops the clashing member with the larger total distance") {
  // n = 2 windows of constant value: A = 0, B = -1, C = 1.3, r = 1
  // d(A,B) = 1.41, d(A,C) = 1.84, d(B,C) = 3.25 > 2r
  std::vector<double> v(12, 50.0);
  v[0] = v[1] = 0.0;
  v[4] = v[5] = -1.0;
  v[8] = v[9] = 1.3;
  const TimeSeries s(std::move(v));
  const double total_b = oracle::euclid(s, 4, 0, 2) + oracle::euclid(s, 4, 8, 2);
  const double total_c = oracle::euclid(s, 8, 0, 2) + oracle::euclid(s, 8, 4, 2);
  REQUIRE(total_b < total_c);
  CHECK(condense(s, 2, std::vector<std::size_t>{0, 4, 8}, 1.0) == std::vector<std::size_t>{0, 4});
}

TEST_CASE("condense removes the member with the most clashes first") {
  // D sits far from A, B, C which are mutually close: D clashes three times
  std::vector<double> v(20, 50.0);
  for (std::size_t k = 0; k < 2; ++k) {
    v[0 + k] = 0.0;
    v[4 + k] = 0.3;
    v[8 + k] = -0.3;
    v[12 + k] = 5.0;
  }
  const TimeSeries s(std::move(v));
  CHECK(condense(s, 2, std::vector<std::size_t>{0, 4, 8, 12}, 1.0) == std::vector<std::size_t>{0, 4, 8});
}

TEST_CASE("sets are ordered by cardinality then founding distance") {
  const auto spike = shape_values({ShapeKind::Spike, 10, 10.0});
  const auto step = shape_values({ShapeKind::Step, 10, 10.0});
  const auto s = fixture::on_ramp(400, {{spike, {0, 100}}, {step, {200, 250, 300}}});
  const auto sets = scan_mk(s, {10, 1.0});
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].members == std::vector<std::size_t>{200, 250, 300});
  CHECK(sets[1].members == std::vector<std::size_t>{0, 100});
}

TEST_CASE("scan mk invariants over generated cases") {
  const auto outcome = props::scan_mk_sets();
  INFO(outcome.first_failure);
  CHECK(outcome.cases >= props::kCases);
  CHECK(outcome.failures == 0);
}
