#include "doctest.h"

#include <cmath>

#include "citeheat/entropy.hpp"
#include "citeheat/errors.hpp"
#include "citeheat/summation.hpp"
#include "fixtures.hpp"

using namespace citeheat;

namespace {

bool close(double got, const oracle::Real& want, double rel = 1e-9, double abs_floor = 1e-15) {
  const double w = static_cast<double>(want);
  return std::abs(got - w) <= std::max(rel * std::abs(w), abs_floor);
}

AlignedTensor two_node(std::array<std::array<std::int64_t, 2>, 3> counts) {
  oracle::Tensor t;
  for (std::size_t y = 0; y < 3; ++y) {
    t[y] = {{0, counts[y][0]}, {counts[y][1], 0}};
  }
  return fixtures::aligned(t);
}

}  // namespace

TEST_CASE("kl term conventions") {
  CHECK(kl_term(0.0, 0.3) == 0.0);
  CHECK(kl_term(0.5, 0.25) == doctest::Approx(0.5));
  CHECK(triangle_score(0.25, 0.25, 0.25) == 0.0);
  CHECK(triangle_score_from_terms(1.0, 2.0, 4.0) == -1.0);
}

TEST_CASE("two-cell divergence matches the hand value") {
  // p = (1/2, 1/2), q = (1/4, 3/4): 0.25 log2(0.5) + 0.75 log2(1.5).
  const auto tensor = two_node({{{1, 1}, {1, 3}, {2, 2}}});
  const auto cells = cell_divergence(tensor, TransitionPair::t0_t1);
  CHECK(cells.grand_sum == doctest::Approx(0.188721875540867).epsilon(1e-12));
  REQUIRE(cells.values.size() == 2);
  CHECK(cells.values[0].value == doctest::Approx(-0.25));
  const auto cited = margin_totals(cells, Direction::cited);
  const auto citing = margin_totals(cells, Direction::citing);
  CHECK(cited.values[1] == doctest::Approx(-0.25));
  CHECK(citing.values[0] == doctest::Approx(-0.25));
  CHECK(cited.mean == doctest::Approx(0.188721875540867 / 2));
}

TEST_CASE("unit conversion and parsing") {
  CHECK(to_unit(1.5, Unit::mbits) == 1500.0);
  CHECK(to_unit(1.5, Unit::microbits) == 1.5e6);
  CHECK(parse_unit("microbits") == Unit::microbits);
  CHECK(unit_name(Unit::bits) == "bits");
  CHECK_THROWS_AS((void)parse_unit("nats"), ConfigError);
}

TEST_CASE("cells with a zero posterior count contribute zero") {
  oracle::Tensor t;
  t[0] = {{4, 2}, {1, 3}};
  t[1] = {{4, 0}, {1, 3}};
  t[2] = {{5, 1}, {1, 3}};
  const auto tensor = fixtures::aligned(t);
  const auto cells = cell_divergence(tensor, TransitionPair::t0_t1);
  CHECK(cells.values.size() == 4);
  CHECK(cells.values[1].cell == Cell{0, 1});
  CHECK(cells.values[1].value == 0.0);
  CHECK(close(cells.grand_sum, oracle::cell_kl(t[0], t[1]).grand));
  // (0,1) is missing in the middle year, so it is outside the triangle.
  CHECK(tensor.tri_valid().size() == 3);
  const auto rev = revision_of_prediction(tensor, Direction::cited);
  CHECK(rev.excluded_cells == 1);
}

TEST_CASE("divergences, margins, revision and triangle match the oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = fixtures::random_tensor(rng, 12, 0.45);
    const auto tensor = fixtures::aligned(t);
    for (auto pair : kTransitionPairs) {
      const auto want = oracle::cell_kl(t[prior_year(pair)], t[posterior_year(pair)]);
      const auto got = cell_divergence(tensor, pair);
      CHECK(close(got.grand_sum, want.grand));
      for (const auto& cv : got.values) CHECK(close(cv.value, want.value[cv.cell.citing][cv.cell.cited]));
      const auto cited = margin_totals(got, Direction::cited);
      const auto citing = margin_totals(got, Direction::citing);
      for (std::size_t n = 0; n < 12; ++n) {
        CHECK(close(cited.values[n], want.cited[n]));
        CHECK(close(citing.values[n], want.citing[n]));
      }
    }
    const auto want = oracle::node_triple(t);
    const auto rc = revision_of_prediction(tensor, Direction::cited);
    const auto ri = revision_of_prediction(tensor, Direction::citing);
    const auto tri = triangle_evaluation(tensor);
    const auto tc = triangle_margins(tri, Direction::cited);
    for (std::size_t n = 0; n < 12; ++n) {
      CHECK(close(rc.values[n], want.revision_cited[n]));
      CHECK(close(ri.values[n], want.revision_citing[n]));
      CHECK(close(tc.values[n], want.triangle_cited[n]));
    }
    for (const auto& cv : tri.values) CHECK(close(cv.value, want.triangle[cv.cell.citing][cv.cell.cited], 1e-9, 1e-14));
    std::vector<oracle::Real> cell_scores;
    for (const auto& cv : tri.values) cell_scores.push_back(want.triangle[cv.cell.citing][cv.cell.cited]);
    const auto [mean, sd] = oracle::moments(cell_scores);
    CHECK(close(tri.mean, mean, 1e-9, 1e-14));
    CHECK(close(tri.sd, sd, 1e-9, 1e-14));
  }
}

TEST_CASE("worker count does not change any bit of the results") {
  std::mt19937_64 rng(7);
  const auto t = fixtures::random_tensor(rng, 90, 0.7);
  const auto tensor = fixtures::aligned(t);
  for (auto pair : kTransitionPairs) {
    const auto one = cell_divergence(tensor, pair, 1);
    const auto many = cell_divergence(tensor, pair, 8);
    CHECK(one.grand_sum == many.grand_sum);
    CHECK(std::equal(one.values.begin(), one.values.end(), many.values.begin(),
                     [](const CellValue& a, const CellValue& b) { return a.cell == b.cell && a.value == b.value; }));
  }
  const auto a = triangle_evaluation(tensor, 1);
  const auto b = triangle_evaluation(tensor, 5);
  CHECK(a.total == b.total);
  CHECK(a.sd == b.sd);
  CHECK(revision_of_prediction(tensor, Direction::citing, 1).values ==
        revision_of_prediction(tensor, Direction::citing, 3).values);
}

TEST_CASE("compensated summation and population moments") {
  std::vector<double> v{1.0, 1e100, 1.0, -1e100};
  CHECK(compensated_total(v) == 2.0);
  std::vector<double> w{1, 2, 3, 4, 5};
  const auto m = population_moments(w);
  CHECK(m.mean == 3.0);
  CHECK(m.sd == doctest::Approx(std::sqrt(2.0)));
  CHECK(population_moments(std::span<const double>{}).sd == 0.0);
}
