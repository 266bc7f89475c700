#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citeheat {

using NodeId = std::uint32_t;

// One cell of a citation matrix. Ordering is (citing, cited) ascending,
// which is also the canonical summation order everywhere downstream.
struct Cell {
  NodeId citing = 0;
  NodeId cited = 0;

  [[nodiscard]] bool is_loop() const noexcept { return citing == cited; }
  auto operator<=>(const Cell&) const = default;
};

struct CellCount {
  Cell cell;
  std::int64_t count = 0;
};

struct CellValue {
  Cell cell;
  double value = 0.0;
};

// Canonical node identities. Ids are dense and follow lexicographic order
// of the canonical names; aliases map historical names onto canonical ones.
class JournalRegistry {
 public:
  JournalRegistry() = default;
  JournalRegistry(std::vector<std::string> canonical_names,
                  std::map<std::string, std::string> aliases);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& name(NodeId id) const { return names_.at(id); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] const std::map<std::string, std::string>& aliases() const noexcept {
    return aliases_;
  }

  // Canonical name for `name` (normalized, alias-resolved). Unknown names
  // are returned normalized but otherwise unchanged.
  [[nodiscard]] std::string resolve(std::string_view name) const;
  [[nodiscard]] std::optional<NodeId> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::string> aliases_;
};

// Sparse count matrix for one year. Ids index into names(); zero counts are
// never stored and duplicate cells are summed on construction.
class YearMatrix {
 public:
  YearMatrix() = default;
  YearMatrix(std::string label, std::vector<std::string> names, std::vector<CellCount> cells);

  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return names_.size(); }
  [[nodiscard]] std::span<const CellCount> cells() const noexcept { return cells_; }
  [[nodiscard]] std::int64_t count(Cell cell) const;

  // citing_totals()[n]: citations given by n. cited_totals()[n]: received.
  [[nodiscard]] const std::vector<std::int64_t>& citing_totals() const noexcept {
    return citing_totals_;
  }
  [[nodiscard]] const std::vector<std::int64_t>& cited_totals() const noexcept {
    return cited_totals_;
  }
  [[nodiscard]] std::int64_t grand_total() const noexcept { return grand_total_; }

 private:
  std::string label_;
  std::vector<std::string> names_;
  std::vector<CellCount> cells_;
  std::vector<std::int64_t> citing_totals_;
  std::vector<std::int64_t> cited_totals_;
  std::int64_t grand_total_ = 0;
};

// Relative frequencies n_ij / sum(n), sorted by cell.
struct Frequencies {
  std::vector<CellValue> values;

  // 0 for cells not present.
  [[nodiscard]] double at(Cell cell) const;
};

enum class TransitionPair : std::uint8_t { t0_t1 = 0, t1_t2 = 1, t0_t2 = 2 };

inline constexpr std::array<TransitionPair, 3> kTransitionPairs{
    TransitionPair::t0_t1, TransitionPair::t1_t2, TransitionPair::t0_t2};

[[nodiscard]] std::size_t prior_year(TransitionPair pair) noexcept;
[[nodiscard]] std::size_t posterior_year(TransitionPair pair) noexcept;
[[nodiscard]] std::string_view pair_label(TransitionPair pair) noexcept;

struct CommonSetStats {
  std::size_t registry_nodes = 0;
  std::size_t retained_nodes = 0;
  std::array<std::size_t, 3> year_nodes{};       // nodes appearing on either side
  std::array<std::size_t, 3> cited_only_nodes{};  // cited but never citing
  std::array<std::size_t, 3> year_links{};        // stored cells before restriction
};

// Three year matrices over one common node set plus the validity masks for
// each transition.
class AlignedTensor {
 public:
  AlignedTensor() = default;
  AlignedTensor(JournalRegistry registry, std::array<YearMatrix, 3> years, CommonSetStats stats);

  [[nodiscard]] const JournalRegistry& registry() const noexcept { return registry_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return registry_.size(); }
  [[nodiscard]] const YearMatrix& year(std::size_t index) const { return years_.at(index); }
  [[nodiscard]] const std::array<YearMatrix, 3>& years() const noexcept { return years_; }
  [[nodiscard]] const Frequencies& frequencies(std::size_t year_index) const {
    return frequencies_.at(year_index);
  }

  // Cells with a positive count in the prior year of `pair`.
  [[nodiscard]] std::span<const Cell> pair_valid(TransitionPair pair) const {
    return pair_valid_.at(static_cast<std::size_t>(pair));
  }
  // Cells with a positive count in all three years.
  [[nodiscard]] std::span<const Cell> tri_valid() const noexcept { return tri_valid_; }
  [[nodiscard]] const CommonSetStats& stats() const noexcept { return stats_; }

 private:
  JournalRegistry registry_;
  std::array<YearMatrix, 3> years_;
  std::array<Frequencies, 3> frequencies_;
  std::array<std::vector<Cell>, 3> pair_valid_;
  std::vector<Cell> tri_valid_;
  CommonSetStats stats_;
};

struct RenameRecord {
  std::string old_name;
  std::string new_name;
};

struct RenameResult {
  JournalRegistry registry;
  std::vector<YearMatrix> matrices;
  std::vector<std::string> warnings;
};

// Reads `citing<TAB>cited<TAB>count` records. '#' lines are comments and an
// optional `citing cited count` header row is skipped.
[[nodiscard]] YearMatrix parse_edge_list(const std::filesystem::path& path, std::string year_label);
[[nodiscard]] YearMatrix parse_edge_list(std::istream& in, std::string year_label,
                                         std::string_view source_name);

[[nodiscard]] std::vector<RenameRecord> parse_renames(const std::filesystem::path& path);
[[nodiscard]] std::vector<RenameRecord> parse_renames(std::istream& in,
                                                      std::string_view source_name);

// Maps every name onto its terminal successor under the rename relation and
// re-keys all matrices onto one registry; colliding cells are summed.
[[nodiscard]] RenameResult apply_name_changes(std::span<const YearMatrix> matrices,
                                              std::span<const RenameRecord> renames);

// Restricts to nodes that cite at least once in every year, dropping their
// rows and columns, until the node set is stable.
[[nodiscard]] AlignedTensor build_common_set(const JournalRegistry& registry,
                                             std::span<const YearMatrix> matrices);

[[nodiscard]] Frequencies relative_frequencies(const YearMatrix& matrix);

// Numeric comparison when both labels are integers, lexicographic otherwise.
[[nodiscard]] bool year_label_less(std::string_view a, std::string_view b);

}  // namespace citeheat
