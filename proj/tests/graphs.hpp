#pragma once

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "citeheat/netgraph.hpp"
#include "oracle.hpp"

namespace graphs {

// G(n, p) with weights drawn from {0.25, 0.5, ..., 4} (exact in six
// significant digits); isolated vertices are dropped.
inline citeheat::HotLinkGraph random_graph(std::mt19937_64& rng, std::size_t n, double p,
                                           bool unit_weights = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> quarter(1, 16);
  std::vector<citeheat::Edge> raw;
  std::vector<bool> touched(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(rng) < p) {
        raw.push_back({static_cast<citeheat::VertexIndex>(i), static_cast<citeheat::VertexIndex>(j),
                       unit_weights ? 1.0 : quarter(rng) / 4.0});
        touched[i] = touched[j] = true;
      }
  if (raw.empty() && n >= 2) {
    raw.push_back({0, 1, 1.0});
    touched[0] = touched[1] = true;
  }
  std::vector<citeheat::VertexIndex> index(n, 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (!touched[i]) continue;
    index[i] = static_cast<citeheat::VertexIndex>(labels.size());
    char buf[32];
    std::snprintf(buf, sizeof buf, "v%02zu", i);
    labels.emplace_back(buf);
  }
  for (auto& e : raw) {
    e.u = index[e.u];
    e.v = index[e.v];
  }
  return citeheat::HotLinkGraph(std::move(labels), std::move(raw));
}

inline oracle::Adjacency dense(const citeheat::HotLinkGraph& g) {
  oracle::Adjacency a(g.vertex_count(), std::vector<double>(g.vertex_count(), 0.0));
  for (const auto& e : g.edges()) {
    a[e.u][e.v] += e.weight;
    a[e.v][e.u] += e.weight;
  }
  return a;
}

// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline citeheat::HotLinkGraph two_triangles() {
  return citeheat::HotLinkGraph({"a", "b", "c", "d", "e", "f"},
                                {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}});
}

}  // namespace graphs
