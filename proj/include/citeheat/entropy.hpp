#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "citeheat/corpus.hpp"

namespace citeheat {

// cited aggregates over the cells a node receives (matrix rows in the
// journal-citation convention), citing over the cells it gives (columns).
enum class Direction : std::uint8_t { cited, citing };

[[nodiscard]] std::string_view direction_name(Direction d) noexcept;

enum class Unit : std::uint8_t { bits, mbits, microbits };

[[nodiscard]] double to_unit(double bits, Unit unit) noexcept;
[[nodiscard]] std::string_view unit_name(Unit unit) noexcept;
// Throws ConfigError for anything but bits / mbits / microbits.
[[nodiscard]] Unit parse_unit(std::string_view text);

// Per-cell contributions q*log2(q/p) for one year pair, in bits.
struct TransitionCells {
  TransitionPair pair = TransitionPair::t0_t1;
  std::size_t node_count = 0;
  std::vector<CellValue> values;  // ascending by cell; exactly the pair mask
  double grand_sum = 0.0;
};

struct JournalMargins {
  Direction direction = Direction::cited;
  std::vector<double> values;  // indexed by NodeId, bits
  double mean = 0.0;
  double sd = 0.0;
};

// Per-node sum of q*log2(p'/p): positive when the middle year improves the
// prediction of the last year from the first, negative when it worsens it.
struct RevisionVector {
  Direction direction = Direction::cited;
  std::vector<double> values;
  double mean = 0.0;
  double sd = 0.0;
  double total = 0.0;
  // Cells with q > 0 whose p or p' is zero; they carry no finite revision.
  std::size_t excluded_cells = 0;
};

// Per-cell KL(p'|p) + KL(q|p') - KL(q|p) over cells present in all years.
struct TriangleCells {
  std::size_t node_count = 0;
  std::vector<CellValue> values;
  double mean = 0.0;
  double sd = 0.0;
  double total = 0.0;
};

// q*log2(q/p) with the convention 0*log(0/p) = 0. p must be positive.
[[nodiscard]] double kl_term(double q, double p) noexcept;

[[nodiscard]] double triangle_score(double p, double p_mid, double q) noexcept;

// Same score assembled from three precomputed KL terms.
[[nodiscard]] constexpr double triangle_score_from_terms(double kl_mid_given_prior,
                                                         double kl_post_given_mid,
                                                         double kl_post_given_prior) noexcept {
  return kl_mid_given_prior + kl_post_given_mid - kl_post_given_prior;
}

[[nodiscard]] TransitionCells cell_divergence(const Frequencies& prior, const Frequencies& posterior,
                                              std::span<const Cell> mask, TransitionPair pair,
                                              std::size_t node_count, unsigned threads = 1);
[[nodiscard]] TransitionCells cell_divergence(const AlignedTensor& tensor, TransitionPair pair,
                                              unsigned threads = 1);

[[nodiscard]] JournalMargins margin_totals(const TransitionCells& cells, Direction direction);

[[nodiscard]] RevisionVector revision_of_prediction(const AlignedTensor& tensor,
                                                    Direction direction, unsigned threads = 1);

[[nodiscard]] TriangleCells triangle_evaluation(const AlignedTensor& tensor, unsigned threads = 1);

[[nodiscard]] JournalMargins triangle_margins(const TriangleCells& cells, Direction direction);

// Margins of arbitrary cell values; both margin operations reduce to this.
[[nodiscard]] JournalMargins aggregate_margins(std::span<const CellValue> values,
                                               std::size_t node_count, Direction direction);

}  // namespace citeheat
