#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citeheat/corpus.hpp"
#include "citeheat/entropy.hpp"
#include "citeheat/flags.hpp"
#include "citeheat/netgraph.hpp"

namespace citeheat {

// ---------------------------------------------------------------------------
// Pajek

// `*Vertices N`, one `i "label"` line per vertex (1-based), `*Edges`, then
// `i j w` with six significant digits. An empty graph is the header only.
void write_pajek_net(const HotLinkGraph& graph, std::ostream& out);
void write_pajek_net(const HotLinkGraph& graph, const std::filesystem::path& path);

[[nodiscard]] HotLinkGraph read_pajek_net(std::istream& in, std::string_view source_name = "<pajek>");
[[nodiscard]] HotLinkGraph read_pajek_net(const std::filesystem::path& path);

// `*Vertices N` then one 1-based cluster id per line.
void write_pajek_clu(std::span<const std::uint32_t> assignment, std::ostream& out);
void write_pajek_clu(std::span<const std::uint32_t> assignment, const std::filesystem::path& path);

[[nodiscard]] std::vector<std::uint32_t> read_pajek_clu(std::istream& in,
                                                        std::string_view source_name = "<clu>");
[[nodiscard]] std::vector<std::uint32_t> read_pajek_clu(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Base maps and VOSviewer

struct BaseMapRow {
  std::string label;
  std::string x;  // coordinates are kept as written
  std::string y;
  std::optional<std::string> cluster;
  std::optional<std::string> weight;
};

class BaseMap {
 public:
  BaseMap() = default;
  // Labels are normalized; duplicates after normalization throw DataError.
  BaseMap(std::vector<BaseMapRow> rows, bool has_cluster, bool has_weight);

  [[nodiscard]] std::span<const BaseMapRow> rows() const noexcept { return rows_; }
  [[nodiscard]] const BaseMapRow* find(std::string_view label) const;
  [[nodiscard]] bool has_cluster() const noexcept { return has_cluster_; }
  [[nodiscard]] bool has_weight() const noexcept { return has_weight_; }

 private:
  std::vector<BaseMapRow> rows_;
  std::vector<std::size_t> order_;  // row indices sorted by label
  bool has_cluster_ = false;
  bool has_weight_ = false;
};

// Tab-separated with a header naming `label`, `x`, `y` and optionally
// `cluster` and `weight` (VOSviewer's `weight<...>` headers are accepted).
[[nodiscard]] BaseMap read_basemap(std::istream& in, std::string_view source_name = "<basemap>");
[[nodiscard]] BaseMap read_basemap(const std::filesystem::path& path);

// Map file columns: id, label, [x, y,] cluster, weight. Cluster is the
// 1-based community; weight is the vertex degree. Coordinates appear only
// with a base map; vertices missing from it get empty x/y cells and are
// returned (and listed by the caller) as unmatched.
// Network file: `id1<TAB>id2<TAB>weight` per edge.
std::vector<std::string> write_vosviewer_files(const HotLinkGraph& graph,
                                               std::span<const std::uint32_t> communities,
                                               const BaseMap* basemap, std::ostream& map_out,
                                               std::ostream& network_out);

struct VosviewerData {
  HotLinkGraph graph;
  std::vector<std::uint32_t> communities;  // 0-based
  std::vector<std::optional<std::pair<std::string, std::string>>> coordinates;
};

[[nodiscard]] VosviewerData read_vosviewer_files(std::istream& map_in, std::istream& network_in);

struct OverlayCategory {
  std::string name;
  std::string color;
  std::vector<std::string> labels;
};

inline constexpr std::string_view kNeutralCategory = "none";
inline constexpr std::string_view kNeutralColor = "#d3d3d3";

struct OverlayResult {
  std::vector<std::size_t> colored;        // rows per category
  std::vector<std::string> unmatched;      // flagged labels absent from the map
};

// Base map rows plus `category` and `color` columns. A label listed under
// several categories takes the first one.
OverlayResult write_overlay(std::span<const OverlayCategory> categories, const BaseMap& basemap,
                            std::ostream& out);

// ---------------------------------------------------------------------------
// CSV reports (values in the configured unit, six decimals)

// RFC 4180 quoting when needed.
[[nodiscard]] std::string csv_field(std::string_view text);

// transition,mean,sd_cited,sd_citing,sum
void write_transition_summary(const JournalIndicators& indicators,
                              const std::array<std::string, 3>& year_labels, Unit unit,
                              std::ostream& out);

// rank,journal,t0_t1,t1_t2,t0_t2,flag -- ranked by t0_t2 descending.
void write_margin_ranking(const JournalIndicators& indicators, const MonotonicFlags& flags,
                          const JournalRegistry& registry, Unit unit, std::ostream& out);

// rank,journal,<value_column>,flagged -- ranked ascending.
void write_node_ranking(std::span<const double> values, const NodeFlags& flags,
                        const JournalRegistry& registry, Unit unit,
                        std::string_view value_column, std::ostream& out);

// rank,citing,cited,score -- ranked ascending.
void write_hot_links(const HotLinks& links, const JournalRegistry& registry, Unit unit,
                     std::ostream& out);

// component,size,members -- members joined by "; ".
void write_components(const HotLinkGraph& graph, const ComponentPartition& components,
                      std::ostream& out);

// rank,journal,degree,component -- ranked by degree descending.
void write_degree_ranking(const HotLinkGraph& graph, const ComponentPartition& components,
                          std::ostream& out);

// journal,community,component
void write_communities(const HotLinkGraph& graph, const CommunityPartition& communities,
                       const ComponentPartition& components, std::ostream& out);

struct ReportInputs {
  const JournalRegistry* registry = nullptr;
  std::array<std::string, 3> year_labels;
  Unit unit = Unit::mbits;
  const JournalIndicators* indicators = nullptr;
  const FlagReport* flags = nullptr;  // journal-level flag sets
  const HotLinks* hot_links = nullptr;
  const HotLinkGraph* graph = nullptr;
  const ComponentPartition* components = nullptr;
  const CommunityPartition* communities = nullptr;
};

// Writes every report whose inputs are present into `directory` and
// returns the file names written, in writing order.
std::vector<std::string> write_reports(const ReportInputs& inputs,
                                       const std::filesystem::path& directory);

// Opens `path` for writing in binary mode; throws IoError.
[[nodiscard]] std::ofstream open_output(const std::filesystem::path& path);
// Flushes and checks the stream; throws IoError naming `path`.
void finish_output(std::ofstream& out, const std::filesystem::path& path);

}  // namespace citeheat
