#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citeheat/corpus.hpp"
#include "citeheat/entropy.hpp"
#include "citeheat/flags.hpp"

namespace citeheat {

struct YearInput {
  std::string label;
  std::filesystem::path path;
};

struct RunConfig {
  std::vector<YearInput> years;
  std::optional<std::filesystem::path> renames;
  double k = 1.0;
  Unit unit = Unit::mbits;
  std::vector<std::string> exclude;
  bool drop_loops = true;
  std::uint64_t seed = 1;
  std::filesystem::path out;
  std::optional<std::filesystem::path> basemap;
  unsigned threads = 1;
};

// "label=path". Throws ConfigError.
[[nodiscard]] YearInput parse_year_spec(std::string_view spec);

// Flat `key = value` file. Keys: year (repeatable, label=path), renames, k,
// unit, exclude (repeatable), keep_loops, seed, out, basemap, threads.
// Relative paths resolve against the config file's directory.
[[nodiscard]] RunConfig read_config_file(const std::filesystem::path& path);

// Throws ConfigError naming the offending option.
void validate_config(const RunConfig& config, bool needs_inputs);

// Layout of the output directory shared by the stages.
namespace artifacts {
inline constexpr std::string_view kCacheDir = "cache";
inline constexpr std::string_view kTensor = "cache/tensor.tsv";
inline constexpr std::string_view kIngestJson = "cache/ingest.json";
inline constexpr std::string_view kJournalsJson = "cache/journals.json";
inline constexpr std::string_view kLinksTsv = "cache/hot_links.tsv";
inline constexpr std::string_view kLinksJson = "cache/links.json";
inline constexpr std::string_view kGraphJson = "cache/graph.json";
inline constexpr std::string_view kPajekNet = "hot_links.net";
inline constexpr std::string_view kCommunitiesClu = "communities.clu";
inline constexpr std::string_view kComponentsClu = "components.clu";
inline constexpr std::string_view kVosMap = "vosviewer_map.txt";
inline constexpr std::string_view kVosNetwork = "vosviewer_network.txt";
inline constexpr std::string_view kVosUnmatched = "vosviewer_unmatched.txt";
inline constexpr std::string_view kSummaryJson = "summary.json";
inline constexpr int kFormatVersion = 1;
}  // namespace artifacts

// Aligned tensor cache: header `citing cited <y0> <y1> <y2>` then one row of
// counts per cell present in any year.
void write_tensor_cache(const AlignedTensor& tensor, const std::filesystem::path& path);
[[nodiscard]] AlignedTensor read_tensor_cache(const std::filesystem::path& path);

// Parses inputs, applies renames, builds the common set, removes excluded
// nodes and caches the tensor. Prints a descriptive summary to `log`.
void run_ingest(const RunConfig& config, std::ostream& log);
// Journal-level indicators and flags.
void run_flag_journals(const RunConfig& config, std::ostream& log);
// Cell-level triangle scores and hot links.
void run_flag_links(const RunConfig& config, std::ostream& log);
// Hot-link graph, components, communities, degree ranking.
void run_graph(const RunConfig& config, std::ostream& log);
// VOSviewer files, overlays and the JSON summary.
void run_export(const RunConfig& config, std::ostream& log);

// All stages in order.
void run_pipeline(const RunConfig& config, std::ostream& log);

}  // namespace citeheat
