#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "citeheat/errors.hpp"
#include "citeheat/io_export.hpp"
#include "citeheat/names.hpp"
#include "text.hpp"

namespace citeheat {

BaseMap::BaseMap(std::vector<BaseMapRow> rows, bool has_cluster, bool has_weight)
    : rows_(std::move(rows)), has_cluster_(has_cluster), has_weight_(has_weight) {
  for (auto& row : rows_) row.label = normalize_name(row.label);
  order_.resize(rows_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  std::sort(order_.begin(), order_.end(),
            [this](std::size_t a, std::size_t b) { return rows_[a].label < rows_[b].label; });
  for (std::size_t i = 1; i < order_.size(); ++i) {
    if (rows_[order_[i]].label == rows_[order_[i - 1]].label) {
      throw DataError("base map lists '" + rows_[order_[i]].label + "' twice");
    }
  }
}

const BaseMapRow* BaseMap::find(std::string_view label) const {
  const std::string key = normalize_name(label);
  auto it = std::lower_bound(order_.begin(), order_.end(), key,
                             [this](std::size_t i, const std::string& k) { return rows_[i].label < k; });
  if (it == order_.end() || rows_[*it].label != key) return nullptr;
  return &rows_[*it];
}

namespace {

struct Columns {
  std::optional<std::size_t> id, label, x, y, cluster, weight;
};

Columns header_columns(const std::vector<std::string_view>& header) {
  Columns c;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto name = detail::trim(header[i]);
    if (name == "id") c.id = i;
    else if (name == "label") c.label = i;
    else if (name == "x") c.x = i;
    else if (name == "y") c.y = i;
    else if (name == "cluster") c.cluster = i;
    else if (name == "weight" || name.starts_with("weight<")) c.weight = i;
  }
  return c;
}

std::string_view field_at(const std::vector<std::string_view>& fields, std::size_t index,
                          std::string_view source, std::size_t line_no) {
  if (index >= fields.size()) {
    throw DataError(std::string(source) + ":" + std::to_string(line_no) + ": missing column");
  }
  return fields[index];
}

// Reads the next non-blank line; false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!detail::trim(line).empty()) return true;
  }
  return false;
}

}  // namespace

BaseMap read_basemap(std::istream& in, std::string_view source_name) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw DataError(std::string(source_name) + ": empty base map");
  const auto columns = header_columns(detail::split_tabs(line));
  if (!columns.label || !columns.x || !columns.y) {
    throw DataError(std::string(source_name) + ": header must name label, x and y columns");
  }
  std::vector<BaseMapRow> rows;
  while (next_line(in, line, line_no)) {
    const auto fields = detail::split_tabs(line);
    BaseMapRow row;
    row.label = std::string(field_at(fields, *columns.label, source_name, line_no));
    row.x = std::string(detail::trim(field_at(fields, *columns.x, source_name, line_no)));
    row.y = std::string(detail::trim(field_at(fields, *columns.y, source_name, line_no)));
    if (!detail::parse_double(row.x) || !detail::parse_double(row.y)) {
      throw DataError(std::string(source_name) + ":" + std::to_string(line_no) +
                      ": coordinates must be numeric");
    }
    if (columns.cluster) {
      row.cluster = std::string(detail::trim(field_at(fields, *columns.cluster, source_name, line_no)));
    }
    if (columns.weight) {
      row.weight = std::string(detail::trim(field_at(fields, *columns.weight, source_name, line_no)));
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw IoError("read failure on " + std::string(source_name));
  return BaseMap(std::move(rows), columns.cluster.has_value(), columns.weight.has_value());
}

BaseMap read_basemap(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open base map " + path.string());
  return read_basemap(in, path.string());
}

std::vector<std::string> write_vosviewer_files(const HotLinkGraph& graph,
                                               std::span<const std::uint32_t> communities,
                                               const BaseMap* basemap, std::ostream& map_out,
                                               std::ostream& network_out) {
  if (communities.size() != graph.vertex_count()) {
    throw std::invalid_argument("write_vosviewer_files: partition does not cover the graph");
  }
  const auto degree = degree_centrality(graph);
  std::vector<std::string> unmatched;

  map_out << (basemap ? "id\tlabel\tx\ty\tcluster\tweight\n" : "id\tlabel\tcluster\tweight\n");
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    const auto& label = graph.labels()[i];
    map_out << (i + 1) << '\t' << label;
    if (basemap) {
      if (const auto* row = basemap->find(label)) {
        map_out << '\t' << row->x << '\t' << row->y;
      } else {
        map_out << "\t\t";
        unmatched.push_back(label);
      }
    }
    map_out << '\t' << (communities[i] + 1) << '\t' << degree[i] << '\n';
  }
  for (const auto& e : graph.edges()) {
    network_out << (e.u + 1) << '\t' << (e.v + 1) << '\t' << detail::format_sig6(e.weight) << '\n';
  }
  return unmatched;
}

VosviewerData read_vosviewer_files(std::istream& map_in, std::istream& network_in) {
  constexpr std::string_view kMap = "<vosviewer map>";
  constexpr std::string_view kNetwork = "<vosviewer network>";
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(map_in, line, line_no)) throw DataError("empty VOSviewer map file");
  const auto columns = header_columns(detail::split_tabs(line));
  if (!columns.id || !columns.label || !columns.cluster) {
    throw DataError("VOSviewer map header must name id, label and cluster");
  }
  const bool has_coordinates = columns.x && columns.y;

  std::map<std::int64_t, std::size_t> position;  // file id -> vertex
  VosviewerData data;
  std::vector<std::string> labels;
  while (next_line(map_in, line, line_no)) {
    const auto fields = detail::split_tabs(line);
    const auto id = detail::parse_int(field_at(fields, *columns.id, kMap, line_no));
    const auto cluster = detail::parse_int(field_at(fields, *columns.cluster, kMap, line_no));
    if (!id || !cluster || *cluster < 1) {
      throw DataError(std::string(kMap) + ":" + std::to_string(line_no) + ": bad id or cluster");
    }
    if (!position.emplace(*id, labels.size()).second) {
      throw DataError(std::string(kMap) + ":" + std::to_string(line_no) + ": duplicate id");
    }
    labels.emplace_back(field_at(fields, *columns.label, kMap, line_no));
    data.communities.push_back(static_cast<std::uint32_t>(*cluster - 1));
    if (has_coordinates) {
      const auto x = field_at(fields, *columns.x, kMap, line_no);
      const auto y = field_at(fields, *columns.y, kMap, line_no);
      if (x.empty() && y.empty()) {
        data.coordinates.emplace_back(std::nullopt);
      } else {
        data.coordinates.emplace_back(std::pair{std::string(x), std::string(y)});
      }
    } else {
      data.coordinates.emplace_back(std::nullopt);
    }
  }

  std::vector<Edge> edges;
  line_no = 0;
  while (next_line(network_in, line, line_no)) {
    const auto fields = detail::split_whitespace(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw DataError(std::string(kNetwork) + ":" + std::to_string(line_no) +
                      ": expected 'id1 id2 [weight]'");
    }
    const auto a = detail::parse_int(fields[0]);
    const auto b = detail::parse_int(fields[1]);
    if (!a || !b || !position.contains(*a) || !position.contains(*b)) {
      throw DataError(std::string(kNetwork) + ":" + std::to_string(line_no) + ": unknown id");
    }
    Edge e;
    e.u = static_cast<VertexIndex>(position[*a]);
    e.v = static_cast<VertexIndex>(position[*b]);
    if (fields.size() == 3) {
      const auto w = detail::parse_double(fields[2]);
      if (!w) throw DataError(std::string(kNetwork) + ":" + std::to_string(line_no) + ": bad weight");
      e.weight = *w;
    }
    edges.push_back(e);
  }
  try {
    data.graph = HotLinkGraph(std::move(labels), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("VOSviewer files: ") + e.what());
  }
  return data;
}

OverlayResult write_overlay(std::span<const OverlayCategory> categories, const BaseMap& basemap,
                            std::ostream& out) {
  OverlayResult result;
  result.colored.assign(categories.size(), 0);

  std::map<std::string, std::size_t> category_of;
  std::set<std::string> unmatched;
  for (std::size_t c = 0; c < categories.size(); ++c) {
    for (const auto& raw : categories[c].labels) {
      const std::string label = normalize_name(raw);
      category_of.emplace(label, c);  // first category wins
      if (!basemap.find(label)) unmatched.insert(label);
    }
  }
  result.unmatched.assign(unmatched.begin(), unmatched.end());

  out << "label\tx\ty";
  if (basemap.has_cluster()) out << "\tcluster";
  if (basemap.has_weight()) out << "\tweight";
  out << "\tcategory\tcolor\n";
  for (const auto& row : basemap.rows()) {
    out << row.label << '\t' << row.x << '\t' << row.y;
    if (basemap.has_cluster()) out << '\t' << row.cluster.value_or("");
    if (basemap.has_weight()) out << '\t' << row.weight.value_or("");
    if (auto it = category_of.find(row.label); it != category_of.end()) {
      const auto& category = categories[it->second];
      out << '\t' << category.name << '\t' << category.color << '\n';
      ++result.colored[it->second];
    } else {
      out << '\t' << kNeutralCategory << '\t' << kNeutralColor << '\n';
    }
  }
  return result;
}

}  // namespace citeheat
