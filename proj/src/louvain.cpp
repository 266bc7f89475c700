#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "citeheat/netgraph.hpp"

namespace citeheat {
namespace {

// Working graph of one aggregation level. Self-loops hold the internal
// weight of a collapsed community, counted once.
struct LevelGraph {
  std::vector<std::vector<Neighbor>> adjacency;
  std::vector<double> self_loop;
  std::vector<double> strength;  // sum of incident weights, self-loops twice
  double two_m = 0.0;

  [[nodiscard]] std::size_t size() const noexcept { return adjacency.size(); }
};

LevelGraph level_from(const HotLinkGraph& graph) {
  LevelGraph g;
  const std::size_t n = graph.vertex_count();
  g.adjacency.resize(n);
  g.self_loop.assign(n, 0.0);
  g.strength.assign(n, 0.0);
  for (VertexIndex v = 0; v < n; ++v) {
    const auto nbs = graph.neighbors(v);
    g.adjacency[v].assign(nbs.begin(), nbs.end());
    for (const auto& nb : nbs) g.strength[v] += nb.weight;
    g.two_m += g.strength[v];
  }
  return g;
}

// Fisher-Yates driven directly by mt19937_64, whose output sequence is
// fixed by the standard (std::shuffle's is not).
void seeded_shuffle(std::vector<std::uint32_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

// Moves nodes between neighbouring communities while modularity strictly
// improves, starting from `community` (ids below the node count).
void local_moves(const LevelGraph& g, std::vector<std::uint32_t>& community, std::mt19937_64& rng,
                 bool& moved_any) {
  const std::size_t n = g.size();
  std::vector<double> total(n, 0.0);
  std::vector<std::size_t> members(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    total[community[i]] += g.strength[i];
    ++members[community[i]];
  }
  // Unused ids, so a node can also leave for a community of its own.
  std::vector<std::uint32_t> empty;
  for (std::uint32_t c = static_cast<std::uint32_t>(n); c-- > 0;) {
    if (members[c] == 0) empty.push_back(c);
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  seeded_shuffle(order, rng);

  std::vector<double> link(n, 0.0);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> touched;
  moved_any = false;

  constexpr int kMaxPasses = 1000;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool moved = false;
    for (std::uint32_t i : order) {
      const std::uint32_t home = community[i];
      const double k = g.strength[i];

      touched.clear();
      for (const auto& nb : g.adjacency[i]) {
        const std::uint32_t c = community[nb.vertex];
        if (!seen[c]) {
          seen[c] = true;
          touched.push_back(c);
        }
        link[c] += nb.weight;
      }
      std::sort(touched.begin(), touched.end());

      total[home] -= k;
      std::uint32_t best = home;
      double best_gain = link[home] - total[home] * k / g.two_m;
      const double eps = 1e-12 * (k > 0.0 ? k : 1.0);
      // Ascending ids with a strict margin: equal gains keep the lowest id.
      for (std::uint32_t c : touched) {
        if (c == home) continue;
        const double gain = link[c] - total[c] * k / g.two_m;
        if (gain > best_gain + eps) {
          best = c;
          best_gain = gain;
        }
      }
      if (members[home] > 1 && !empty.empty() && 0.0 > best_gain + eps) {
        best = empty.back();
        empty.pop_back();
      }
      total[best] += k;
      community[i] = best;
      if (best != home) {
        moved = true;
        --members[home];
        ++members[best];
        if (members[home] == 0) empty.push_back(home);
      }

      for (std::uint32_t c : touched) {
        seen[c] = false;
        link[c] = 0.0;
      }
    }
    if (!moved) break;
    moved_any = true;
  }
}

// Renumbers community ids 0..c-1 in order of first appearance; returns c.
std::size_t renumber(std::vector<std::uint32_t>& assignment) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> remap(assignment.size() + 1, kUnset);
  std::uint32_t next = 0;
  for (auto& a : assignment) {
    if (a >= remap.size()) remap.resize(a + 1, kUnset);
    if (remap[a] == kUnset) remap[a] = next++;
    a = remap[a];
  }
  return next;
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<std::uint32_t>& community,
                     std::size_t count) {
  struct Arc {
    std::uint32_t from;
    std::uint32_t to;
    double weight;
  };
  LevelGraph out;
  out.adjacency.resize(count);
  out.self_loop.assign(count, 0.0);
  out.strength.assign(count, 0.0);
  out.two_m = g.two_m;

  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::uint32_t a = community[i];
    out.self_loop[a] += g.self_loop[i];
    for (const auto& nb : g.adjacency[i]) {
      const std::uint32_t b = community[nb.vertex];
      if (a == b) {
        out.self_loop[a] += nb.weight / 2.0;  // each internal edge is seen from both ends
      } else {
        arcs.push_back({a, b, nb.weight});
      }
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return x.from != y.from ? x.from < y.from : x.to < y.to;
  });
  for (const auto& arc : arcs) {
    auto& list = out.adjacency[arc.from];
    if (!list.empty() && list.back().vertex == arc.to) {
      list.back().weight += arc.weight;
    } else {
      list.push_back({arc.to, arc.weight});
    }
  }
  for (std::size_t c = 0; c < count; ++c) {
    double s = 2.0 * out.self_loop[c];
    for (const auto& nb : out.adjacency[c]) s += nb.weight;
    out.strength[c] = s;
  }
  return out;
}

// Splits every community into its connected pieces. Never lowers Q: the
// pieces share no edges and the squared degree term can only shrink.
void split_disconnected(const HotLinkGraph& graph, std::vector<std::uint32_t>& assignment) {
  const std::size_t n = graph.vertex_count();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> piece(n, kUnset);
  std::vector<VertexIndex> stack;
  std::uint32_t next = 0;
  for (VertexIndex start = 0; start < n; ++start) {
    if (piece[start] != kUnset) continue;
    piece[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (const auto& nb : graph.neighbors(v)) {
        if (piece[nb.vertex] == kUnset && assignment[nb.vertex] == assignment[v]) {
          piece[nb.vertex] = next;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++next;
  }
  assignment = std::move(piece);
}

// Splits each community into sub-communities by greedily merging singleton
// nodes into the best-connected piece of their own community. Returns
// piece ids below the node count.
std::vector<std::uint32_t> refine(const LevelGraph& g, const std::vector<std::uint32_t>& community,
                                  std::mt19937_64& rng) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> piece(n);
  std::iota(piece.begin(), piece.end(), 0U);
  std::vector<double> total(g.strength);
  std::vector<std::size_t> size(n, 1);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  seeded_shuffle(order, rng);

  std::vector<double> link(n, 0.0);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t i : order) {
    if (size[piece[i]] != 1) continue;  // only singletons move
    const double k = g.strength[i];
    touched.clear();
    for (const auto& nb : g.adjacency[i]) {
      if (community[nb.vertex] != community[i]) continue;
      const std::uint32_t r = piece[nb.vertex];
      if (r == piece[i]) continue;
      if (!seen[r]) {
        seen[r] = true;
        touched.push_back(r);
      }
      link[r] += nb.weight;
    }
    std::sort(touched.begin(), touched.end());
    std::uint32_t best = piece[i];
    double best_gain = 1e-12 * (k > 0.0 ? k : 1.0);  // staying put gains zero
    for (std::uint32_t r : touched) {
      const double gain = link[r] - total[r] * k / g.two_m;
      if (gain > best_gain) {
        best = r;
        best_gain = gain;
      }
      seen[r] = false;
      link[r] = 0.0;
    }
    if (best != piece[i]) {
      --size[piece[i]];
      total[piece[i]] -= k;
      piece[i] = best;
      ++size[best];
      total[best] += k;
    }
  }
  return piece;
}

// One multi-level sweep starting from `membership`: local moves, then
// refinement and aggregation by the refined pieces, with each aggregate
// node starting in its parent community. Ends when refinement merges
// nothing.
void sweep(const HotLinkGraph& graph, std::vector<std::uint32_t>& membership, std::mt19937_64& rng,
           std::vector<double>& level_modularity) {
  LevelGraph level = level_from(graph);
  std::vector<std::uint32_t> community = membership;
  std::vector<std::uint32_t> node_of(graph.vertex_count());
  std::iota(node_of.begin(), node_of.end(), 0U);
  double previous = modularity(graph, membership);
  while (true) {
    bool moved = false;
    local_moves(level, community, rng, moved);
    for (std::size_t v = 0; v < node_of.size(); ++v) membership[v] = community[node_of[v]];
    const double q = modularity(graph, membership);
    if (q < previous - 1e-12) {
      throw std::logic_error("louvain: modularity decreased between levels");
    }
    level_modularity.push_back(q);
    previous = q;

    auto piece = refine(level, community, rng);
    const std::size_t count = renumber(piece);
    if (count == level.size()) break;
    std::vector<std::uint32_t> parent(count);
    for (std::size_t i = 0; i < piece.size(); ++i) parent[piece[i]] = community[i];
    renumber(parent);
    level = aggregate(level, piece, count);
    for (auto& v : node_of) v = piece[v];
    community = std::move(parent);
  }
}

// One optimization run: Louvain local moves with refined aggregation,
// repeated in rounds that restart vertex-level moves from the previous
// partition. Rounds stop once Q stops improving.
CommunityPartition optimize(const HotLinkGraph& graph, std::mt19937_64& rng) {
  const std::size_t n = graph.vertex_count();
  CommunityPartition out;
  std::vector<std::uint32_t> membership(n);
  std::iota(membership.begin(), membership.end(), 0U);
  double best = modularity(graph, membership);

  constexpr int kMaxRounds = 64;
  for (int round = 0; round < kMaxRounds; ++round) {
    auto candidate = membership;
    sweep(graph, candidate, rng, out.level_modularity);
    split_disconnected(graph, candidate);
    renumber(candidate);
    const double q = modularity(graph, candidate);
    if (q < best - 1e-12) throw std::logic_error("louvain: refinement lowered modularity");
    const bool improved = q > best + 1e-9;
    membership = std::move(candidate);
    best = std::max(best, q);
    if (!improved) break;
  }

  out.community_count = renumber(membership);
  out.assignment = std::move(membership);
  out.modularity = modularity(graph, out.assignment);
  if (out.level_modularity.empty()) out.level_modularity.push_back(out.modularity);
  return out;
}

}  // namespace

CommunityPartition louvain(const HotLinkGraph& graph, std::uint64_t seed, unsigned restarts) {
  if (graph.empty()) throw std::invalid_argument("louvain: empty graph");
  CommunityPartition best;
  for (unsigned r = 0; r < std::max(restarts, 1U); ++r) {
    // Run 0 uses the seed directly; later runs mix in the run index through
    // seed_seq, whose algorithm is fixed by the standard.
    std::mt19937_64 rng(seed);
    if (r > 0) {
      std::seed_seq mix{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), r};
      rng.seed(mix);
    }
    auto run = optimize(graph, rng);
    if (r == 0 || run.modularity > best.modularity + 1e-12) best = std::move(run);
  }
  best.seed = seed;
  return best;
}

}  // namespace citeheat
