#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "citeheat/corpus.hpp"
#include "citeheat/flags.hpp"

namespace citeheat {

using VertexIndex = std::uint32_t;

struct Edge {
  VertexIndex u = 0;  // u < v
  VertexIndex v = 0;
  double weight = 1.0;

  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  VertexIndex vertex = 0;
  double weight = 0.0;
};

// Undirected simple weighted graph of hot links. Vertices are positions
// 0..n-1 ordered by ascending node id; labels travel with the vertices.
class HotLinkGraph {
 public:
  HotLinkGraph() = default;
  // Parallel (a,b)/(b,a) edges merge with summed weight. Throws
  // std::invalid_argument on self-loops, out-of-range endpoints, non-positive
  // weights or isolated vertices. `ids` defaults to 0..n-1.
  HotLinkGraph(std::vector<std::string> labels, std::vector<Edge> edges,
               std::vector<NodeId> ids = {});

  [[nodiscard]] std::size_t vertex_count() const noexcept { return labels_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] bool empty() const noexcept { return labels_.empty(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::vector<NodeId>& ids() const noexcept { return ids_; }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Neighbor> neighbors(VertexIndex v) const {
    return {adjacency_.data() + offsets_.at(v), adjacency_.data() + offsets_.at(v + 1)};
  }
  [[nodiscard]] double total_weight() const noexcept { return total_weight_; }

  // Labels and edges; ids are not part of the interchange formats.
  friend bool operator==(const HotLinkGraph& a, const HotLinkGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<NodeId> ids_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  double total_weight_ = 0.0;
};

// Edge weight is |score| in bits.
[[nodiscard]] HotLinkGraph build_graph(std::span<const HotLink> links,
                                       const JournalRegistry& registry);

struct ComponentPartition {
  std::vector<std::uint32_t> assignment;             // vertex -> component
  std::vector<std::vector<VertexIndex>> members;     // ascending per component
  [[nodiscard]] std::size_t count() const noexcept { return members.size(); }
  [[nodiscard]] std::vector<std::size_t> sizes() const;
};

// Components ordered by size descending, ties by smallest member.
[[nodiscard]] ComponentPartition connected_components(const HotLinkGraph& graph);

struct CommunityPartition {
  std::vector<std::uint32_t> assignment;  // vertex -> community, first-seen order
  std::size_t community_count = 0;
  double modularity = 0.0;
  std::vector<double> level_modularity;  // Q after each aggregation level
  std::uint64_t seed = 0;
};

// Q = sum_c [e_c/m - (d_c/2m)^2]. Throws std::invalid_argument when the
// assignment does not cover every vertex.
[[nodiscard]] double modularity(const HotLinkGraph& graph,
                                std::span<const std::uint32_t> assignment);

inline constexpr unsigned kDefaultLouvainRestarts = 8;

// Multilevel modularity optimization: local moving (including moves to an
// empty community), refinement of each community before aggregation, and
// vertex-level rounds restarted from the result until Q stops improving.
// The best of `restarts` seeded runs is returned; communities are connected
// and numbered in order of first appearance. Deterministic for a given
// seed. Throws std::invalid_argument on an empty graph.
[[nodiscard]] CommunityPartition louvain(const HotLinkGraph& graph, std::uint64_t seed,
                                         unsigned restarts = kDefaultLouvainRestarts);

// Number of incident edges per vertex.
[[nodiscard]] std::vector<std::uint32_t> degree_centrality(const HotLinkGraph& graph);

}  // namespace citeheat
