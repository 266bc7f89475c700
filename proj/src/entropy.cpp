#include "citeheat/entropy.hpp"

#include <cmath>
#include <string>

#include "citeheat/errors.hpp"
#include "citeheat/summation.hpp"
#include "parallel.hpp"

namespace citeheat {

std::string_view direction_name(Direction d) noexcept {
  return d == Direction::cited ? "cited" : "citing";
}

double to_unit(double bits, Unit unit) noexcept {
  switch (unit) {
    case Unit::bits: return bits;
    case Unit::mbits: return bits * 1e3;
    case Unit::microbits: return bits * 1e6;
  }
  return bits;
}

std::string_view unit_name(Unit unit) noexcept {
  switch (unit) {
    case Unit::bits: return "bits";
    case Unit::mbits: return "mbits";
    case Unit::microbits: return "microbits";
  }
  return "?";
}

Unit parse_unit(std::string_view text) {
  if (text == "bits") return Unit::bits;
  if (text == "mbits") return Unit::mbits;
  if (text == "microbits") return Unit::microbits;
  throw ConfigError("unknown unit '" + std::string(text) + "' (expected bits, mbits or microbits)");
}

double kl_term(double q, double p) noexcept {
  if (q == 0.0) return 0.0;
  return q * std::log2(q / p);
}

double triangle_score(double p, double p_mid, double q) noexcept {
  return triangle_score_from_terms(kl_term(p_mid, p), kl_term(q, p_mid), kl_term(q, p));
}

TransitionCells cell_divergence(const Frequencies& prior, const Frequencies& posterior,
                                std::span<const Cell> mask, TransitionPair pair,
                                std::size_t node_count, unsigned threads) {
  TransitionCells out;
  out.pair = pair;
  out.node_count = node_count;

  for (const Cell& c : mask) {
    if (prior.at(c) <= 0.0) {
      throw std::logic_error("cell_divergence: masked cell (" + std::to_string(c.citing) + "," +
                             std::to_string(c.cited) + ") has zero prior frequency");
    }
  }
  const auto contributions = detail::parallel_map(mask.size(), threads, [&](std::size_t i) {
    return kl_term(posterior.at(mask[i]), prior.at(mask[i]));
  });

  out.values.reserve(mask.size());
  CompensatedSum total;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    out.values.push_back({mask[i], contributions[i]});
    total.add(contributions[i]);
  }
  out.grand_sum = total.value();
  return out;
}

TransitionCells cell_divergence(const AlignedTensor& tensor, TransitionPair pair, unsigned threads) {
  return cell_divergence(tensor.frequencies(prior_year(pair)),
                         tensor.frequencies(posterior_year(pair)), tensor.pair_valid(pair), pair,
                         tensor.node_count(), threads);
}

JournalMargins aggregate_margins(std::span<const CellValue> values, std::size_t node_count,
                                 Direction direction) {
  std::vector<CompensatedSum> sums(node_count);
  for (const auto& v : values) {
    const NodeId node = direction == Direction::cited ? v.cell.cited : v.cell.citing;
    sums.at(node).add(v.value);
  }
  JournalMargins m;
  m.direction = direction;
  m.values.reserve(node_count);
  for (const auto& s : sums) m.values.push_back(s.value());
  const auto moments = population_moments(m.values);
  m.mean = moments.mean;
  m.sd = moments.sd;
  return m;
}

JournalMargins margin_totals(const TransitionCells& cells, Direction direction) {
  return aggregate_margins(cells.values, cells.node_count, direction);
}

RevisionVector revision_of_prediction(const AlignedTensor& tensor, Direction direction,
                                      unsigned threads) {
  const Frequencies& p = tensor.frequencies(0);
  const Frequencies& p_mid = tensor.frequencies(1);
  const Frequencies& q = tensor.frequencies(2);

  RevisionVector out;
  out.direction = direction;
  for (const auto& v : q.values) {
    if (p.at(v.cell) == 0.0 || p_mid.at(v.cell) == 0.0) ++out.excluded_cells;
  }

  // q > 0 with p, p' > 0 is exactly the cells present in all three years;
  // every other cell of the prior mask has q = 0 and contributes nothing.
  const auto cells = tensor.tri_valid();
  const auto terms = detail::parallel_map(cells.size(), threads, [&](std::size_t i) {
    const Cell c = cells[i];
    return q.at(c) * std::log2(p_mid.at(c) / p.at(c));
  });
  std::vector<CellValue> values;
  values.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) values.push_back({cells[i], terms[i]});

  auto margins = aggregate_margins(values, tensor.node_count(), direction);
  out.values = std::move(margins.values);
  out.mean = margins.mean;
  out.sd = margins.sd;
  out.total = compensated_total(terms);
  return out;
}

TriangleCells triangle_evaluation(const AlignedTensor& tensor, unsigned threads) {
  const auto cells = tensor.tri_valid();
  if (cells.empty()) throw DataError("no cell is present in all three years");
  const Frequencies& p = tensor.frequencies(0);
  const Frequencies& p_mid = tensor.frequencies(1);
  const Frequencies& q = tensor.frequencies(2);

  const auto scores = detail::parallel_map(cells.size(), threads, [&](std::size_t i) {
    const Cell c = cells[i];
    return triangle_score(p.at(c), p_mid.at(c), q.at(c));
  });

  TriangleCells out;
  out.node_count = tensor.node_count();
  out.values.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) out.values.push_back({cells[i], scores[i]});
  const auto moments = population_moments(scores);
  out.mean = moments.mean;
  out.sd = moments.sd;
  out.total = compensated_total(scores);
  return out;
}

JournalMargins triangle_margins(const TriangleCells& cells, Direction direction) {
  return aggregate_margins(cells.values, cells.node_count, direction);
}

}  // namespace citeheat
