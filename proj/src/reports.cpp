#include <algorithm>
#include <numeric>
#include <ostream>

#include "citeheat/errors.hpp"
#include "citeheat/io_export.hpp"
#include "text.hpp"

namespace citeheat {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string value(double bits, Unit unit) { return detail::format_fixed6(to_unit(bits, unit)); }

bool contains(const std::vector<NodeId>& sorted, NodeId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

// Indices 0..n-1 ordered by value (ascending or descending), ties by index.
std::vector<std::size_t> ranking(std::span<const double> values, bool descending) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return descending ? values[a] > values[b] : values[a] < values[b];
  });
  return order;
}

}  // namespace

void write_transition_summary(const JournalIndicators& indicators,
                              const std::array<std::string, 3>& year_labels, Unit unit,
                              std::ostream& out) {
  out << "transition,mean,sd_cited,sd_citing,sum\n";
  for (auto pair : kTransitionPairs) {
    const auto i = static_cast<std::size_t>(pair);
    const std::string name =
        year_labels[prior_year(pair)] + "->" + year_labels[posterior_year(pair)];
    out << csv_field(name) << ',' << value(indicators.cited[i].mean, unit) << ','
        << value(indicators.cited[i].sd, unit) << ',' << value(indicators.citing[i].sd, unit)
        << ',' << value(indicators.grand_sums[i], unit) << '\n';
  }
  out << "revision," << value(indicators.revision_cited.mean, unit) << ','
      << value(indicators.revision_cited.sd, unit) << ','
      << value(indicators.revision_citing.sd, unit) << ','
      << value(indicators.revision_cited.total, unit) << '\n';
}

void write_margin_ranking(const JournalIndicators& indicators, const MonotonicFlags& flags,
                          const JournalRegistry& registry, Unit unit, std::ostream& out) {
  const auto& margins = flags.direction == Direction::cited ? indicators.cited : indicators.citing;
  const auto& overall = margins[static_cast<std::size_t>(TransitionPair::t0_t2)].values;
  out << "rank,journal,t0_t1,t1_t2,t0_t2,flag\n";
  std::size_t rank = 0;
  for (std::size_t node : ranking(overall, true)) {
    const auto id = static_cast<NodeId>(node);
    const char* flag = contains(flags.up, id) ? "up" : contains(flags.down, id) ? "down" : "";
    out << ++rank << ',' << csv_field(registry.name(id));
    for (const auto& m : margins) out << ',' << value(m.values[node], unit);
    out << ',' << flag << '\n';
  }
}

void write_node_ranking(std::span<const double> values, const NodeFlags& flags,
                        const JournalRegistry& registry, Unit unit, std::string_view value_column,
                        std::ostream& out) {
  out << "rank,journal," << value_column << ",flagged\n";
  std::size_t rank = 0;
  for (std::size_t node : ranking(values, false)) {
    const auto id = static_cast<NodeId>(node);
    out << ++rank << ',' << csv_field(registry.name(id)) << ',' << value(values[node], unit) << ','
        << (contains(flags.nodes, id) ? 1 : 0) << '\n';
  }
}

void write_hot_links(const HotLinks& links, const JournalRegistry& registry, Unit unit,
                     std::ostream& out) {
  std::vector<double> scores;
  scores.reserve(links.links.size());
  for (const auto& l : links.links) scores.push_back(l.score);
  out << "rank,citing,cited,score\n";
  std::size_t rank = 0;
  for (std::size_t i : ranking(scores, false)) {
    const auto& l = links.links[i];
    out << ++rank << ',' << csv_field(registry.name(l.cell.citing)) << ','
        << csv_field(registry.name(l.cell.cited)) << ',' << value(l.score, unit) << '\n';
  }
}

void write_components(const HotLinkGraph& graph, const ComponentPartition& components,
                      std::ostream& out) {
  out << "component,size,members\n";
  for (std::size_t c = 0; c < components.members.size(); ++c) {
    std::string members;
    for (VertexIndex v : components.members[c]) {
      if (!members.empty()) members += "; ";
      members += graph.labels()[v];
    }
    out << (c + 1) << ',' << components.members[c].size() << ',' << csv_field(members) << '\n';
  }
}

void write_degree_ranking(const HotLinkGraph& graph, const ComponentPartition& components,
                          std::ostream& out) {
  const auto degree = degree_centrality(graph);
  std::vector<double> as_double(degree.begin(), degree.end());
  out << "rank,journal,degree,component\n";
  std::size_t rank = 0;
  for (std::size_t v : ranking(as_double, true)) {
    out << ++rank << ',' << csv_field(graph.labels()[v]) << ',' << degree[v] << ','
        << (components.assignment[v] + 1) << '\n';
  }
}

void write_communities(const HotLinkGraph& graph, const CommunityPartition& communities,
                       const ComponentPartition& components, std::ostream& out) {
  out << "journal,community,component\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    out << csv_field(graph.labels()[v]) << ',' << (communities.assignment[v] + 1) << ','
        << (components.assignment[v] + 1) << '\n';
  }
}

std::vector<std::string> write_reports(const ReportInputs& in,
                                       const std::filesystem::path& directory) {
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, auto&& body) {
    const auto path = directory / name;
    auto out = open_output(path);
    body(out);
    finish_output(out, path);
    written.push_back(name);
  };

  if (in.indicators && in.registry) {
    const auto& ind = *in.indicators;
    emit("journals_summary.csv",
         [&](std::ostream& o) { write_transition_summary(ind, in.year_labels, in.unit, o); });
    if (in.flags) {
      const auto& f = *in.flags;
      const auto& reg = *in.registry;
      emit("margins_cited.csv",
           [&](std::ostream& o) { write_margin_ranking(ind, f.monotonic_cited, reg, in.unit, o); });
      emit("margins_citing.csv",
           [&](std::ostream& o) { write_margin_ranking(ind, f.monotonic_citing, reg, in.unit, o); });
      emit("revision_cited.csv", [&](std::ostream& o) {
        write_node_ranking(ind.revision_cited.values, f.revision_cited, reg, in.unit, "revision", o);
      });
      emit("revision_citing.csv", [&](std::ostream& o) {
        write_node_ranking(ind.revision_citing.values, f.revision_citing, reg, in.unit, "revision", o);
      });
      emit("triangle_journals_cited.csv", [&](std::ostream& o) {
        write_node_ranking(ind.triangle_cited.values, f.triangle_cited, reg, in.unit, "score", o);
      });
      emit("triangle_journals_citing.csv", [&](std::ostream& o) {
        write_node_ranking(ind.triangle_citing.values, f.triangle_citing, reg, in.unit, "score", o);
      });
    }
  }
  if (in.hot_links && in.registry) {
    emit("hot_links.csv",
         [&](std::ostream& o) { write_hot_links(*in.hot_links, *in.registry, in.unit, o); });
  }
  if (in.graph && in.components) {
    emit("components.csv", [&](std::ostream& o) { write_components(*in.graph, *in.components, o); });
    emit("degree.csv", [&](std::ostream& o) { write_degree_ranking(*in.graph, *in.components, o); });
    if (in.communities) {
      emit("communities.csv", [&](std::ostream& o) {
        write_communities(*in.graph, *in.communities, *in.components, o);
      });
    }
  }
  return written;
}

}  // namespace citeheat
