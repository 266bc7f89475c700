#pragma once

#include <span>
#include <string>
#include <vector>

#include "citeheat/corpus.hpp"
#include "citeheat/entropy.hpp"

namespace citeheat {

// Mean +/- k population standard deviations of one value set.
struct ThresholdSpec {
  double k = 1.0;
  double mean = 0.0;
  double sd = 0.0;
  double upper = 0.0;
  double lower = 0.0;
};

[[nodiscard]] ThresholdSpec compute_threshold(std::span<const double> values, double k);

// Nodes strictly beyond the threshold in both consecutive transitions.
struct MonotonicFlags {
  Direction direction = Direction::cited;
  ThresholdSpec first;   // t0 -> t1
  ThresholdSpec second;  // t1 -> t2
  std::vector<NodeId> up;
  std::vector<NodeId> down;
};

struct NodeFlags {
  Direction direction = Direction::cited;
  ThresholdSpec threshold;
  std::vector<NodeId> nodes;  // strictly below threshold.lower, ascending id
};

struct HotLink {
  Cell cell;
  double score = 0.0;  // bits
};

struct HotLinks {
  ThresholdSpec threshold;
  std::vector<HotLink> links;  // ascending by cell
  std::size_t loops_removed = 0;
};

[[nodiscard]] MonotonicFlags flag_monotonic(const JournalMargins& first,
                                            const JournalMargins& second, double k);

[[nodiscard]] NodeFlags flag_revision(const RevisionVector& revision, double k);

// Journal-level triangle margins, flagged below mean - k*sd like links.
[[nodiscard]] NodeFlags flag_triangle_nodes(const JournalMargins& margins, double k);

// Cells scoring strictly below mean - k*sd over all triangle cells. The
// threshold is computed with the diagonal included; loops are dropped after.
[[nodiscard]] HotLinks flag_links(const TriangleCells& triangle, double k, bool drop_loops = true);

// Same filter against an explicit threshold in bits.
[[nodiscard]] std::vector<HotLink> links_below(const TriangleCells& triangle, double threshold,
                                               bool drop_loops, std::size_t* loops_removed = nullptr);

// Deletes the named nodes (aliases accepted) and re-derives the common set,
// frequencies and masks. Throws DataError for names not in the registry.
[[nodiscard]] AlignedTensor remove_outliers(const AlignedTensor& tensor,
                                            std::span<const std::string> names);

struct AnalysisOptions {
  double k = 1.0;
  bool drop_loops = true;
  unsigned threads = 1;
};

// Every journal-level indicator for one tensor.
struct JournalIndicators {
  std::array<JournalMargins, 3> cited;   // indexed by TransitionPair
  std::array<JournalMargins, 3> citing;
  std::array<double, 3> grand_sums{};
  RevisionVector revision_cited;
  RevisionVector revision_citing;
  JournalMargins triangle_cited;
  JournalMargins triangle_citing;
};

struct FlagReport {
  AnalysisOptions options;
  std::vector<std::string> outliers_removed;
  MonotonicFlags monotonic_cited;
  MonotonicFlags monotonic_citing;
  NodeFlags revision_cited;
  NodeFlags revision_citing;
  NodeFlags triangle_cited;
  NodeFlags triangle_citing;
  HotLinks hot_links;
};

[[nodiscard]] JournalIndicators compute_journal_indicators(const AlignedTensor& tensor,
                                                           const TriangleCells& triangle,
                                                           unsigned threads = 1);

[[nodiscard]] FlagReport build_flag_report(const JournalIndicators& indicators,
                                           const TriangleCells& triangle,
                                           const AnalysisOptions& options);

}  // namespace citeheat
