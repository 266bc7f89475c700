#include "doctest.h"

#include <cmath>

#include "citeheat/errors.hpp"
#include "citeheat/flags.hpp"
#include "citeheat/summation.hpp"
#include "fixtures.hpp"

using namespace citeheat;

namespace {

JournalMargins margins(std::vector<double> v) {
  JournalMargins m;
  const auto mo = population_moments(v);
  m.values = std::move(v);
  m.mean = mo.mean;
  m.sd = mo.sd;
  return m;
}

}  // namespace

TEST_CASE("threshold is mean plus or minus k population SDs") {
  const std::vector<double> v{1, 2, 3, 4, 5};
  const auto t = compute_threshold(v, 1.0);
  CHECK(t.mean == 3.0);
  CHECK(t.sd == doctest::Approx(1.41421356237));
  CHECK(t.upper == doctest::Approx(4.41421356237));
  CHECK(t.lower == doctest::Approx(1.58578643763));
  CHECK(compute_threshold(v, 0.0).lower == 3.0);
  CHECK_THROWS_AS((void)compute_threshold(v, -1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)compute_threshold(std::span<const double>{}, 1.0), std::invalid_argument);
}

TEST_CASE("flags use strict inequalities") {
  // Values sitting exactly on the bound are not flagged.
  RevisionVector r;
  r.values = {-1, 1, -1, 1};
  r.mean = 0;
  r.sd = 1;
  const auto f = flag_revision(r, 1.0);
  CHECK(f.threshold.lower == -1.0);
  CHECK(f.nodes.empty());
  const auto g = flag_revision(r, 0.5);
  CHECK(g.nodes == std::vector<NodeId>{0, 2});
}

TEST_CASE("monotonic flags need both transitions") {
  auto first = margins({10, 0, 0, 0, 0, 0, -10, 0});
  auto second = margins({10, 10, 0, 0, 0, 0, -10, 0});
  const auto f = flag_monotonic(first, second, 1.0);
  CHECK(f.up == std::vector<NodeId>{0});
  CHECK(f.down == std::vector<NodeId>{6});
  second.values.pop_back();
  CHECK_THROWS_AS((void)flag_monotonic(first, second, 1.0), std::invalid_argument);
}

TEST_CASE("arithmetic anchor: terms of 1.251, 2.465 and 4.728 mbits") {
  const double score = triangle_score_from_terms(1.251e-3, 2.465e-3, 4.728e-3);
  CHECK(std::abs(score * 1e3 - (-1.012)) < 0.0005);
  TriangleCells tri;
  tri.node_count = 2;
  tri.values = {{Cell{0, 1}, score}, {Cell{1, 0}, 0.0}};
  const auto flagged = links_below(tri, -0.935e-3, true);
  REQUIRE(flagged.size() == 1);
  CHECK(flagged[0].cell == Cell{0, 1});
}

TEST_CASE("loops count toward the threshold but are dropped afterwards") {
  TriangleCells tri;
  tri.node_count = 2;
  tri.values = {{Cell{0, 0}, -5.0}, {Cell{0, 1}, -5.0}, {Cell{1, 0}, 1.0}, {Cell{1, 1}, 1.0}};
  const auto dropped = flag_links(tri, 0.5, true);
  CHECK(dropped.links.size() == 1);
  CHECK(dropped.loops_removed == 1);
  CHECK(dropped.threshold.mean == -2.0);
  const auto kept = flag_links(tri, 0.5, false);
  CHECK(kept.links.size() == 2);
}

TEST_CASE("k = 0 flags every non-loop cell below the mean") {
  std::mt19937_64 rng(5);
  const auto t = fixtures::random_tensor(rng, 15, 0.6);
  const auto tensor = fixtures::aligned(t);
  const auto tri = triangle_evaluation(tensor);
  const auto hot = flag_links(tri, 0.0);
  std::size_t expected = 0;
  for (const auto& cv : tri.values) expected += !cv.cell.is_loop() && cv.value < tri.mean;
  CHECK(hot.links.size() == expected);
  CHECK(expected > 0);
}

TEST_CASE("dyad fixture flags only the injected cell") {
  const auto t = fixtures::dyad_tensor();
  // Independent expectation: high-precision scores over all triple cells.
  const auto want = oracle::node_triple(t);
  std::vector<oracle::Real> scores;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      if (want.tri_valid[i][j]) scores.push_back(want.triangle[i][j]);
  const auto [mean, sd] = oracle::moments(scores);
  std::vector<Cell> expected;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      if (i != j && want.tri_valid[i][j] && want.triangle[i][j] < mean - sd)
        expected.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
  REQUIRE(expected == std::vector<Cell>{{1, 0}});

  const auto tensor = fixtures::aligned(t);
  const auto hot = flag_links(triangle_evaluation(tensor), 1.0);
  REQUIRE(hot.links.size() == 1);
  CHECK(hot.links[0].cell == Cell{1, 0});
}

TEST_CASE("removing outliers renormalizes the remaining tensor") {
  std::mt19937_64 rng(3);
  const auto t = fixtures::random_tensor(rng, 6, 0.8);
  const auto tensor = fixtures::aligned(t);
  const std::vector<std::string> drop{"J002"};
  const auto reduced = remove_outliers(tensor, drop);
  CHECK(reduced.node_count() == 5);
  CHECK_FALSE(reduced.registry().find("J002"));

  oracle::Tensor smaller;
  for (std::size_t y = 0; y < 3; ++y) {
    for (std::size_t i = 0; i < 6; ++i) {
      if (i == 2) continue;
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < 6; ++j)
        if (j != 2) row.push_back(t[y][i][j]);
      smaller[y].push_back(row);
    }
  }
  const auto want = oracle::cell_kl(smaller[0], smaller[2]);
  const auto got = cell_divergence(reduced, TransitionPair::t0_t2);
  CHECK(got.grand_sum == doctest::Approx(static_cast<double>(want.grand)).epsilon(1e-12));

  const std::vector<std::string> unknown{"nope"};
  CHECK_THROWS_AS((void)remove_outliers(tensor, unknown), DataError);
}

TEST_CASE("flag report assembles every indicator") {
  const auto tensor = fixtures::aligned(fixtures::dyad_tensor());
  const auto tri = triangle_evaluation(tensor);
  const auto ind = compute_journal_indicators(tensor, tri);
  const auto report = build_flag_report(ind, tri, {});
  CHECK(report.hot_links.links.size() == 1);
  CHECK(report.triangle_cited.nodes == std::vector<NodeId>{0});
  CHECK(report.triangle_citing.nodes == std::vector<NodeId>{1});
  double margin_sum = 0;
  for (double v : ind.cited[2].values) margin_sum += v;
  CHECK(margin_sum == doctest::Approx(ind.grand_sums[2]).epsilon(1e-12));
}
