#include "citeheat/flags.hpp"

#include <algorithm>

#include "citeheat/errors.hpp"
#include "citeheat/summation.hpp"

namespace citeheat {

ThresholdSpec compute_threshold(std::span<const double> values, double k) {
  if (values.empty()) throw std::invalid_argument("compute_threshold: empty value set");
  if (!(k >= 0.0)) throw std::invalid_argument("compute_threshold: k must be non-negative");
  const auto m = population_moments(values);
  return ThresholdSpec{k, m.mean, m.sd, m.mean + k * m.sd, m.mean - k * m.sd};
}

MonotonicFlags flag_monotonic(const JournalMargins& first, const JournalMargins& second, double k) {
  if (first.direction != second.direction) {
    throw std::invalid_argument("flag_monotonic: margins have different directions");
  }
  if (first.values.size() != second.values.size()) {
    throw std::invalid_argument("flag_monotonic: margins cover different node sets");
  }
  MonotonicFlags out;
  out.direction = first.direction;
  out.first = compute_threshold(first.values, k);
  out.second = compute_threshold(second.values, k);
  for (std::size_t i = 0; i < first.values.size(); ++i) {
    const double a = first.values[i];
    const double b = second.values[i];
    if (a > out.first.upper && b > out.second.upper) {
      out.up.push_back(static_cast<NodeId>(i));
    } else if (a < out.first.lower && b < out.second.lower) {
      out.down.push_back(static_cast<NodeId>(i));
    }
  }
  return out;
}

namespace {

NodeFlags below_lower(std::span<const double> values, Direction direction, double k) {
  NodeFlags out;
  out.direction = direction;
  out.threshold = compute_threshold(values, k);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < out.threshold.lower) out.nodes.push_back(static_cast<NodeId>(i));
  }
  return out;
}

}  // namespace

NodeFlags flag_revision(const RevisionVector& revision, double k) {
  return below_lower(revision.values, revision.direction, k);
}

NodeFlags flag_triangle_nodes(const JournalMargins& margins, double k) {
  return below_lower(margins.values, margins.direction, k);
}

std::vector<HotLink> links_below(const TriangleCells& triangle, double threshold, bool drop_loops,
                                 std::size_t* loops_removed) {
  std::vector<HotLink> links;
  std::size_t loops = 0;
  for (const auto& v : triangle.values) {
    if (!(v.value < threshold)) continue;
    if (drop_loops && v.cell.is_loop()) {
      ++loops;
      continue;
    }
    links.push_back({v.cell, v.value});
  }
  if (loops_removed) *loops_removed = loops;
  return links;
}

HotLinks flag_links(const TriangleCells& triangle, double k, bool drop_loops) {
  std::vector<double> scores;
  scores.reserve(triangle.values.size());
  for (const auto& v : triangle.values) scores.push_back(v.value);
  HotLinks out;
  out.threshold = compute_threshold(scores, k);
  out.links = links_below(triangle, out.threshold.lower, drop_loops, &out.loops_removed);
  return out;
}

AlignedTensor remove_outliers(const AlignedTensor& tensor, std::span<const std::string> names) {
  if (names.empty()) return tensor;
  const auto& registry = tensor.registry();
  std::vector<bool> removed(registry.size(), false);
  for (const auto& name : names) {
    const auto id = registry.find(name);
    if (!id) throw DataError("cannot exclude unknown node '" + name + "'");
    removed[*id] = true;
  }
  std::vector<YearMatrix> years;
  for (const auto& y : tensor.years()) {
    std::vector<CellCount> cells;
    for (const auto& c : y.cells()) {
      if (!removed[c.cell.citing] && !removed[c.cell.cited]) cells.push_back(c);
    }
    years.emplace_back(y.label(), y.names(), std::move(cells));
  }
  return build_common_set(registry, years);
}

JournalIndicators compute_journal_indicators(const AlignedTensor& tensor,
                                             const TriangleCells& triangle, unsigned threads) {
  JournalIndicators out;
  for (auto pair : kTransitionPairs) {
    const auto i = static_cast<std::size_t>(pair);
    const auto cells = cell_divergence(tensor, pair, threads);
    out.grand_sums[i] = cells.grand_sum;
    out.cited[i] = margin_totals(cells, Direction::cited);
    out.citing[i] = margin_totals(cells, Direction::citing);
  }
  out.revision_cited = revision_of_prediction(tensor, Direction::cited, threads);
  out.revision_citing = revision_of_prediction(tensor, Direction::citing, threads);
  out.triangle_cited = triangle_margins(triangle, Direction::cited);
  out.triangle_citing = triangle_margins(triangle, Direction::citing);
  return out;
}

FlagReport build_flag_report(const JournalIndicators& indicators, const TriangleCells& triangle,
                             const AnalysisOptions& options) {
  constexpr auto first = static_cast<std::size_t>(TransitionPair::t0_t1);
  constexpr auto second = static_cast<std::size_t>(TransitionPair::t1_t2);
  FlagReport report;
  report.options = options;
  report.monotonic_cited =
      flag_monotonic(indicators.cited[first], indicators.cited[second], options.k);
  report.monotonic_citing =
      flag_monotonic(indicators.citing[first], indicators.citing[second], options.k);
  report.revision_cited = flag_revision(indicators.revision_cited, options.k);
  report.revision_citing = flag_revision(indicators.revision_citing, options.k);
  report.triangle_cited = flag_triangle_nodes(indicators.triangle_cited, options.k);
  report.triangle_citing = flag_triangle_nodes(indicators.triangle_citing, options.k);
  report.hot_links = flag_links(triangle, options.k, options.drop_loops);
  return report;
}

}  // namespace citeheat
