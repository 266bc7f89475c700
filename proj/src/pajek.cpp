#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "citeheat/errors.hpp"
#include "citeheat/io_export.hpp"
#include "text.hpp"

namespace citeheat {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failure on " + path.string());
}

void write_pajek_net(const HotLinkGraph& graph, std::ostream& out) {
  out << "*Vertices " << graph.vertex_count() << '\n';
  if (graph.empty()) return;
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    const auto& label = graph.labels()[i];
    if (label.find('"') != std::string::npos || label.find('\n') != std::string::npos) {
      throw DataError("label cannot be written to Pajek: " + label);
    }
    out << (i + 1) << " \"" << label << "\"\n";
  }
  out << "*Edges\n";
  for (const auto& e : graph.edges()) {
    out << (e.u + 1) << ' ' << (e.v + 1) << ' ' << detail::format_sig6(e.weight) << '\n';
  }
}

void write_pajek_net(const HotLinkGraph& graph, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_pajek_net(graph, out);
  finish_output(out, path);
}

namespace {

std::string at_line(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  if (line.size() < keyword.size()) return false;
  for (std::size_t i = 0; i < keyword.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(line[i])) !=
        std::tolower(static_cast<unsigned char>(keyword[i]))) {
      return false;
    }
  }
  return true;
}

std::size_t parse_vertex_header(std::string_view line, std::string_view source, std::size_t line_no) {
  if (!starts_with_keyword(line, "*vertices")) {
    throw DataError(at_line(source, line_no) + "expected '*Vertices N'");
  }
  const auto fields = detail::split_whitespace(line);
  const auto n = fields.size() >= 2 ? detail::parse_int(fields[1]) : std::nullopt;
  if (!n || *n < 0) throw DataError(at_line(source, line_no) + "bad vertex count");
  return static_cast<std::size_t>(*n);
}

std::size_t parse_index(std::string_view field, std::size_t n, std::string_view source,
                        std::size_t line_no) {
  const auto value = detail::parse_int(field);
  if (!value || *value < 1 || static_cast<std::size_t>(*value) > n) {
    throw DataError(at_line(source, line_no) + "vertex index '" + std::string(field) +
                    "' outside 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(*value - 1);
}

}  // namespace

HotLinkGraph read_pajek_net(std::istream& in, std::string_view source_name) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!detail::trim(line).empty() && line.front() != '%') return true;
    }
    return false;
  };

  if (!next_line()) throw DataError(std::string(source_name) + ": missing '*Vertices' header");
  const std::size_t n = parse_vertex_header(line, source_name, line_no);

  std::vector<std::string> labels(n);
  std::vector<bool> seen(n, false);
  bool in_edges = false;
  std::vector<Edge> edges;
  while (next_line()) {
    if (line.front() == '*') {
      if (in_edges || !starts_with_keyword(line, "*edges")) {
        throw DataError(at_line(source_name, line_no) + "unexpected section '" + line + "'");
      }
      in_edges = true;
      continue;
    }
    const auto fields = detail::split_whitespace(line);
    if (!in_edges) {
      const auto open = line.find('"');
      const auto close = open == std::string::npos ? open : line.find('"', open + 1);
      if (fields.empty() || close == std::string::npos) {
        throw DataError(at_line(source_name, line_no) + "expected 'index \"label\"'");
      }
      const auto index = parse_index(fields[0], n, source_name, line_no);
      if (seen[index]) throw DataError(at_line(source_name, line_no) + "duplicate vertex");
      seen[index] = true;
      labels[index] = line.substr(open + 1, close - open - 1);
      continue;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw DataError(at_line(source_name, line_no) + "expected 'i j [weight]'");
    }
    Edge e;
    e.u = static_cast<VertexIndex>(parse_index(fields[0], n, source_name, line_no));
    e.v = static_cast<VertexIndex>(parse_index(fields[1], n, source_name, line_no));
    if (fields.size() == 3) {
      const auto w = detail::parse_double(fields[2]);
      if (!w) throw DataError(at_line(source_name, line_no) + "bad edge weight");
      e.weight = *w;
    }
    edges.push_back(e);
  }
  if (in.bad()) throw IoError("read failure on " + std::string(source_name));
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DataError(std::string(source_name) + ": fewer vertex lines than declared");
  }
  try {
    return HotLinkGraph(std::move(labels), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(source_name) + ": " + e.what());
  }
}

HotLinkGraph read_pajek_net(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pajek_net(in, path.string());
}

void write_pajek_clu(std::span<const std::uint32_t> assignment, std::ostream& out) {
  out << "*Vertices " << assignment.size() << '\n';
  for (auto c : assignment) out << (c + 1) << '\n';
}

void write_pajek_clu(std::span<const std::uint32_t> assignment, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_pajek_clu(assignment, out);
  finish_output(out, path);
}

std::vector<std::uint32_t> read_pajek_clu(std::istream& in, std::string_view source_name) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<std::uint32_t> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty() || line.front() == '%') continue;
    if (!n) {
      n = parse_vertex_header(line, source_name, line_no);
      out.reserve(*n);
      continue;
    }
    const auto value = detail::parse_int(line);
    if (!value || *value < 1) {
      throw DataError(at_line(source_name, line_no) + "cluster ids are positive integers");
    }
    out.push_back(static_cast<std::uint32_t>(*value - 1));
  }
  if (in.bad()) throw IoError("read failure on " + std::string(source_name));
  if (!n) throw DataError(std::string(source_name) + ": missing '*Vertices' header");
  if (out.size() != *n) {
    throw DataError(std::string(source_name) + ": expected " + std::to_string(*n) +
                    " cluster lines, got " + std::to_string(out.size()));
  }
  return out;
}

std::vector<std::uint32_t> read_pajek_clu(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pajek_clu(in, path.string());
}

}  // namespace citeheat
