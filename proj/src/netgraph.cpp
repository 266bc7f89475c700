#include "citeheat/netgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "citeheat/summation.hpp"

namespace citeheat {

HotLinkGraph::HotLinkGraph(std::vector<std::string> labels, std::vector<Edge> edges,
                           std::vector<NodeId> ids)
    : labels_(std::move(labels)), ids_(std::move(ids)) {
  const std::size_t n = labels_.size();
  if (ids_.empty()) {
    ids_.resize(n);
    std::iota(ids_.begin(), ids_.end(), NodeId{0});
  } else if (ids_.size() != n) {
    throw std::invalid_argument("HotLinkGraph: ids and labels differ in length");
  }

  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("HotLinkGraph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("HotLinkGraph: self-loop on vertex " + labels_[e.u]);
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("HotLinkGraph: edge weight must be positive and finite");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const auto& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().weight += e.weight;
    } else {
      edges_.push_back(e);
    }
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 0) throw std::invalid_argument("HotLinkGraph: isolated vertex " + labels_[i]);
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  CompensatedSum total;
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.weight};
    adjacency_[cursor[e.v]++] = {e.u, e.weight};
    total.add(e.weight);
  }
  total_weight_ = total.value();
}

HotLinkGraph build_graph(std::span<const HotLink> links, const JournalRegistry& registry) {
  std::vector<NodeId> ids;
  for (const auto& l : links) {
    if (l.cell.is_loop()) throw std::invalid_argument("build_graph: hot links contain a loop");
    ids.push_back(l.cell.citing);
    ids.push_back(l.cell.cited);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto index_of = [&ids](NodeId id) {
    return static_cast<VertexIndex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(links.size());
  for (const auto& l : links) {
    edges.push_back({index_of(l.cell.citing), index_of(l.cell.cited), std::fabs(l.score)});
  }
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (NodeId id : ids) labels.push_back(registry.name(id));
  return HotLinkGraph(std::move(labels), std::move(edges), std::move(ids));
}

std::vector<std::size_t> ComponentPartition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.size());
  return out;
}

ComponentPartition connected_components(const HotLinkGraph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(n, kUnseen);
  std::vector<std::vector<VertexIndex>> groups;
  std::vector<VertexIndex> stack;
  for (VertexIndex start = 0; start < n; ++start) {
    if (label[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(groups.size());
    auto& group = groups.emplace_back();
    label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      group.push_back(v);
      for (const auto& nb : graph.neighbors(v)) {
        if (label[nb.vertex] == kUnseen) {
          label[nb.vertex] = id;
          stack.push_back(nb.vertex);
        }
      }
    }
    std::sort(group.begin(), group.end());
  }
  // Discovery order already ties by smallest member; stable sort keeps it.
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  ComponentPartition out;
  out.assignment.assign(n, 0);
  for (std::uint32_t c = 0; c < groups.size(); ++c) {
    for (VertexIndex v : groups[c]) out.assignment[v] = c;
  }
  out.members = std::move(groups);
  return out;
}

double modularity(const HotLinkGraph& graph, std::span<const std::uint32_t> assignment) {
  const std::size_t n = graph.vertex_count();
  if (assignment.size() != n) {
    throw std::invalid_argument("modularity: partition covers " + std::to_string(assignment.size()) +
                                " of " + std::to_string(n) + " vertices");
  }
  const double m = graph.total_weight();
  if (n == 0 || m <= 0.0) return 0.0;

  std::map<std::uint32_t, std::pair<CompensatedSum, CompensatedSum>> communities;  // e_c, d_c
  for (const auto& e : graph.edges()) {
    if (assignment[e.u] == assignment[e.v]) communities[assignment[e.u]].first.add(e.weight);
    communities[assignment[e.u]].second.add(e.weight);
    communities[assignment[e.v]].second.add(e.weight);
  }
  CompensatedSum q;
  for (const auto& [c, sums] : communities) {
    const double share = sums.second.value() / (2.0 * m);
    q.add(sums.first.value() / m - share * share);
  }
  return q.value();
}

std::vector<std::uint32_t> degree_centrality(const HotLinkGraph& graph) {
  std::vector<std::uint32_t> degree(graph.vertex_count(), 0);
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    degree[v] = static_cast<std::uint32_t>(graph.neighbors(v).size());
  }
  return degree;
}

}  // namespace citeheat
