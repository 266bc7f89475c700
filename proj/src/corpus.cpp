#include "citeheat/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "citeheat/errors.hpp"
#include "citeheat/names.hpp"
#include "text.hpp"

namespace citeheat {

JournalRegistry::JournalRegistry(std::vector<std::string> canonical_names,
                                 std::map<std::string, std::string> aliases)
    : names_(std::move(canonical_names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  for (auto& [from, to] : aliases) {
    if (from != to && std::binary_search(names_.begin(), names_.end(), to)) {
      aliases_.emplace(from, to);
    }
  }
}

std::string JournalRegistry::resolve(std::string_view name) const {
  std::string normalized = normalize_name(name);
  if (auto it = aliases_.find(normalized); it != aliases_.end()) return it->second;
  return normalized;
}

std::optional<NodeId> JournalRegistry::find(std::string_view name) const {
  const std::string canonical = resolve(name);
  auto it = std::lower_bound(names_.begin(), names_.end(), canonical);
  if (it == names_.end() || *it != canonical) return std::nullopt;
  return static_cast<NodeId>(it - names_.begin());
}

YearMatrix::YearMatrix(std::string label, std::vector<std::string> names,
                       std::vector<CellCount> cells)
    : label_(std::move(label)), names_(std::move(names)) {
  const auto n = names_.size();
  for (const auto& c : cells) {
    if (c.count <= 0) {
      throw DataError("year " + label_ + ": non-positive count " + std::to_string(c.count));
    }
    if (c.cell.citing >= n || c.cell.cited >= n) {
      throw DataError("year " + label_ + ": cell id outside the name table");
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const CellCount& a, const CellCount& b) { return a.cell < b.cell; });
  cells_.reserve(cells.size());
  for (const auto& c : cells) {
    if (!cells_.empty() && cells_.back().cell == c.cell) {
      cells_.back().count += c.count;
    } else {
      cells_.push_back(c);
    }
  }
  citing_totals_.assign(n, 0);
  cited_totals_.assign(n, 0);
  for (const auto& c : cells_) {
    citing_totals_[c.cell.citing] += c.count;
    cited_totals_[c.cell.cited] += c.count;
    grand_total_ += c.count;
  }
}

std::int64_t YearMatrix::count(Cell cell) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell,
                             [](const CellCount& a, Cell b) { return a.cell < b; });
  return (it != cells_.end() && it->cell == cell) ? it->count : 0;
}

double Frequencies::at(Cell cell) const {
  auto it = std::lower_bound(values.begin(), values.end(), cell,
                             [](const CellValue& a, Cell b) { return a.cell < b; });
  return (it != values.end() && it->cell == cell) ? it->value : 0.0;
}

std::size_t prior_year(TransitionPair pair) noexcept {
  return pair == TransitionPair::t1_t2 ? 1 : 0;
}

std::size_t posterior_year(TransitionPair pair) noexcept {
  return pair == TransitionPair::t0_t1 ? 1 : 2;
}

std::string_view pair_label(TransitionPair pair) noexcept {
  switch (pair) {
    case TransitionPair::t0_t1: return "t0->t1";
    case TransitionPair::t1_t2: return "t1->t2";
    case TransitionPair::t0_t2: return "t0->t2";
  }
  return "?";
}

AlignedTensor::AlignedTensor(JournalRegistry registry, std::array<YearMatrix, 3> years,
                             CommonSetStats stats)
    : registry_(std::move(registry)), years_(std::move(years)), stats_(stats) {
  for (std::size_t y = 0; y < 3; ++y) {
    if (years_[y].names() != registry_.names()) {
      throw DataError("year " + years_[y].label() + " is not keyed on the tensor registry");
    }
    frequencies_[y] = relative_frequencies(years_[y]);
  }
  for (auto pair : kTransitionPairs) {
    auto& mask = pair_valid_[static_cast<std::size_t>(pair)];
    const auto prior = years_[prior_year(pair)].cells();
    mask.reserve(prior.size());
    for (const auto& c : prior) mask.push_back(c.cell);
  }
  for (const auto& c : years_[0].cells()) {
    if (years_[1].count(c.cell) > 0 && years_[2].count(c.cell) > 0) {
      tri_valid_.push_back(c.cell);
    }
  }
}

namespace {

struct RawRecord {
  std::uint32_t citing;
  std::uint32_t cited;
  std::int64_t count;
};

class NameInterner {
 public:
  std::uint32_t intern(std::string name) {
    auto [it, inserted] = ids_.emplace(std::move(name), static_cast<std::uint32_t>(ids_.size()));
    if (inserted) order_.push_back(&it->first);
    return it->second;
  }

  // Lexicographic names plus the provisional-id → sorted-id map.
  std::pair<std::vector<std::string>, std::vector<NodeId>> finish() const {
    std::vector<std::uint32_t> perm(order_.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [this](std::uint32_t a, std::uint32_t b) { return *order_[a] < *order_[b]; });
    std::vector<std::string> names;
    names.reserve(perm.size());
    std::vector<NodeId> remap(perm.size());
    for (std::uint32_t rank = 0; rank < perm.size(); ++rank) {
      names.push_back(*order_[perm[rank]]);
      remap[perm[rank]] = rank;
    }
    return {std::move(names), std::move(remap)};
  }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<const std::string*> order_;
};

std::string location(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

std::string field_name(std::string_view raw, std::string_view source, std::size_t line) {
  std::string name = normalize_name(raw);
  if (name.empty()) throw DataError(location(source, line) + ": empty name");
  return name;
}

}  // namespace

YearMatrix parse_edge_list(std::istream& in, std::string year_label, std::string_view source_name) {
  NameInterner names;
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 3) {
      throw DataError(location(source_name, line_no) + ": expected 3 tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    if (!seen_data && fields[0] == "citing" && fields[1] == "cited" && fields[2] == "count") {
      seen_data = true;
      continue;
    }
    seen_data = true;
    const auto count = detail::parse_int(fields[2]);
    if (!count) {
      throw DataError(location(source_name, line_no) + ": invalid count '" +
                      std::string(fields[2]) + "'");
    }
    if (*count <= 0) {
      throw DataError(location(source_name, line_no) + ": non-positive count " +
                      std::to_string(*count));
    }
    const auto citing = names.intern(field_name(fields[0], source_name, line_no));
    const auto cited = names.intern(field_name(fields[1], source_name, line_no));
    records.push_back({citing, cited, *count});
  }
  if (in.bad()) throw IoError("read failure on " + std::string(source_name));

  auto [sorted_names, remap] = names.finish();
  std::vector<CellCount> cells;
  cells.reserve(records.size());
  for (const auto& r : records) {
    cells.push_back({Cell{remap[r.citing], remap[r.cited]}, r.count});
  }
  return YearMatrix(std::move(year_label), std::move(sorted_names), std::move(cells));
}

YearMatrix parse_edge_list(const std::filesystem::path& path, std::string year_label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open edge list " + path.string());
  return parse_edge_list(in, std::move(year_label), path.string());
}

std::vector<RenameRecord> parse_renames(std::istream& in, std::string_view source_name) {
  std::vector<RenameRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::skip_line(line)) continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 2) {
      throw DataError(location(source_name, line_no) + ": expected 2 tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    if (!seen_data && fields[0] == "old_name" && fields[1] == "new_name") {
      seen_data = true;
      continue;
    }
    seen_data = true;
    records.push_back({field_name(fields[0], source_name, line_no),
                       field_name(fields[1], source_name, line_no)});
  }
  if (in.bad()) throw IoError("read failure on " + std::string(source_name));
  return records;
}

std::vector<RenameRecord> parse_renames(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rename file " + path.string());
  return parse_renames(in, path.string());
}

RenameResult apply_name_changes(std::span<const YearMatrix> matrices,
                                std::span<const RenameRecord> renames) {
  RenameResult result;

  std::map<std::string, std::string> successor;
  for (const auto& r : renames) {
    std::string from = normalize_name(r.old_name);
    std::string to = normalize_name(r.new_name);
    if (from == to) {
      result.warnings.push_back("rename of '" + from + "' to itself ignored");
      continue;
    }
    auto [it, inserted] = successor.emplace(from, to);
    if (!inserted && it->second != to) {
      throw DataError("name '" + from + "' renamed to both '" + it->second + "' and '" + to + "'");
    }
  }
  // Warnings in canonical order so permuted inputs give identical output.
  std::sort(result.warnings.begin(), result.warnings.end());
  result.warnings.erase(std::unique(result.warnings.begin(), result.warnings.end()),
                        result.warnings.end());

  std::map<std::string, std::string> terminal;
  for (const auto& [from, to] : successor) {
    std::set<std::string> visited{from};
    std::string current = to;
    while (true) {
      if (!visited.insert(current).second) {
        throw DataError("rename cycle involving '" + from + "'");
      }
      auto next = successor.find(current);
      if (next == successor.end()) break;
      current = next->second;
    }
    terminal.emplace(from, current);
  }

  auto resolve = [&terminal](const std::string& name) -> const std::string& {
    auto it = terminal.find(name);
    return it == terminal.end() ? name : it->second;
  };

  std::vector<std::string> canonical;
  for (const auto& m : matrices) {
    for (const auto& name : m.names()) canonical.push_back(resolve(name));
  }
  result.registry = JournalRegistry(std::move(canonical), terminal);

  const auto& registry_names = result.registry.names();
  for (const auto& m : matrices) {
    std::vector<NodeId> remap(m.node_count());
    for (std::size_t i = 0; i < remap.size(); ++i) {
      const auto& target = resolve(m.names()[i]);
      auto it = std::lower_bound(registry_names.begin(), registry_names.end(), target);
      remap[i] = static_cast<NodeId>(it - registry_names.begin());
    }
    std::vector<CellCount> cells;
    cells.reserve(m.cells().size());
    for (const auto& c : m.cells()) {
      cells.push_back({Cell{remap[c.cell.citing], remap[c.cell.cited]}, c.count});
    }
    result.matrices.emplace_back(m.label(), registry_names, std::move(cells));
  }
  return result;
}

AlignedTensor build_common_set(const JournalRegistry& registry,
                               std::span<const YearMatrix> matrices) {
  if (matrices.size() != 3) {
    throw DataError("expected exactly 3 year matrices, got " + std::to_string(matrices.size()));
  }
  for (const auto& m : matrices) {
    if (m.names() != registry.names()) {
      throw DataError("year " + m.label() + " is not keyed on the registry");
    }
  }
  if (!year_label_less(matrices[0].label(), matrices[1].label()) ||
      !year_label_less(matrices[1].label(), matrices[2].label())) {
    throw DataError("year labels must be strictly increasing: " + matrices[0].label() + ", " +
                    matrices[1].label() + ", " + matrices[2].label());
  }

  const std::size_t n = registry.size();
  CommonSetStats stats;
  stats.registry_nodes = n;
  for (std::size_t y = 0; y < 3; ++y) {
    const auto& m = matrices[y];
    for (std::size_t i = 0; i < n; ++i) {
      const bool citing = m.citing_totals()[i] > 0;
      const bool cited = m.cited_totals()[i] > 0;
      if (citing || cited) ++stats.year_nodes[y];
      if (cited && !citing) ++stats.cited_only_nodes[y];
    }
    stats.year_links[y] = m.cells().size();
  }

  // Dropping a node can leave another node without any retained citing
  // edge, so repeat until the node set is stable.
  std::vector<bool> alive(n, true);
  while (true) {
    std::vector<bool> next(n, true);
    for (const auto& m : matrices) {
      std::vector<bool> cites(n, false);
      for (const auto& c : m.cells()) {
        if (alive[c.cell.citing] && alive[c.cell.cited]) cites[c.cell.citing] = true;
      }
      for (std::size_t i = 0; i < n; ++i) next[i] = next[i] && cites[i];
    }
    for (std::size_t i = 0; i < n; ++i) next[i] = next[i] && alive[i];
    if (next == alive) break;
    alive = std::move(next);
  }

  std::vector<std::string> kept;
  std::vector<NodeId> remap(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    remap[i] = static_cast<NodeId>(kept.size());
    kept.push_back(registry.names()[i]);
  }
  if (kept.empty()) throw DataError("common node set is empty");
  stats.retained_nodes = kept.size();

  JournalRegistry reduced(kept, registry.aliases());
  std::array<YearMatrix, 3> years;
  for (std::size_t y = 0; y < 3; ++y) {
    std::vector<CellCount> cells;
    for (const auto& c : matrices[y].cells()) {
      if (alive[c.cell.citing] && alive[c.cell.cited]) {
        cells.push_back({Cell{remap[c.cell.citing], remap[c.cell.cited]}, c.count});
      }
    }
    years[y] = YearMatrix(matrices[y].label(), reduced.names(), std::move(cells));
  }
  return AlignedTensor(std::move(reduced), std::move(years), stats);
}

Frequencies relative_frequencies(const YearMatrix& matrix) {
  if (matrix.grand_total() <= 0) {
    throw DataError("relative frequencies of empty matrix (year " + matrix.label() + ")");
  }
  Frequencies f;
  f.values.reserve(matrix.cells().size());
  const double total = static_cast<double>(matrix.grand_total());
  for (const auto& c : matrix.cells()) {
    f.values.push_back({c.cell, static_cast<double>(c.count) / total});
  }
  return f;
}

bool year_label_less(std::string_view a, std::string_view b) {
  const auto ia = detail::parse_int(a);
  const auto ib = detail::parse_int(b);
  if (ia && ib) return *ia < *ib;
  return a < b;
}

}  // namespace citeheat
