#pragma once

// Independent reference computations for the tests. Dense, slow and written
// straight from the definitions; nothing here calls into the library's
// numerics.

#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real log2(const Real& x) { return boost::multiprecision::log(x) / boost::multiprecision::log(Real(2)); }

// counts[y][i][j]: citations from i (citing) to j (cited) in year y.
using Dense = std::vector<std::vector<std::int64_t>>;
using Tensor = std::array<Dense, 3>;

struct Freq {
  std::vector<std::vector<Real>> f;
};

inline Freq frequencies(const Dense& counts) {
  Real total = 0;
  for (const auto& row : counts)
    for (auto c : row) total += c;
  Freq out;
  out.f.assign(counts.size(), std::vector<Real>(counts.size(), Real(0)));
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = 0; j < counts.size(); ++j) out.f[i][j] = Real(counts[i][j]) / total;
  return out;
}

inline Real kl(const Real& q, const Real& p) {
  if (q == 0) return Real(0);
  return q * log2(q / p);
}

// Cell-level divergence of posterior from prior; cells with a zero prior
// count are outside the support and reported as absent.
struct CellKl {
  std::vector<std::vector<Real>> value;
  std::vector<std::vector<bool>> valid;
  Real grand = 0;
  std::vector<Real> cited, citing;
};

inline CellKl cell_kl(const Dense& prior, const Dense& posterior) {
  const auto n = prior.size();
  const auto p = frequencies(prior);
  const auto q = frequencies(posterior);
  CellKl out;
  out.value.assign(n, std::vector<Real>(n, Real(0)));
  out.valid.assign(n, std::vector<bool>(n, false));
  out.cited.assign(n, Real(0));
  out.citing.assign(n, Real(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (prior[i][j] == 0) continue;
      out.valid[i][j] = true;
      out.value[i][j] = kl(q.f[i][j], p.f[i][j]);
      out.grand += out.value[i][j];
      out.cited[j] += out.value[i][j];
      out.citing[i] += out.value[i][j];
    }
  }
  return out;
}

// Node-level quantities over the cells present in all three years.
struct NodeTriple {
  std::vector<Real> revision_cited, revision_citing;   // sum q log2(p'/p)
  std::vector<Real> iqp_cited, iqp_citing;             // sum q log2(q/p)
  std::vector<Real> iqpm_cited, iqpm_citing;           // sum q log2(q/p')
  std::vector<std::vector<Real>> triangle;             // per cell
  std::vector<std::vector<bool>> tri_valid;
  std::vector<Real> triangle_cited, triangle_citing;
};

inline NodeTriple node_triple(const Tensor& t) {
  const auto n = t[0].size();
  const auto p = frequencies(t[0]);
  const auto pm = frequencies(t[1]);
  const auto q = frequencies(t[2]);
  NodeTriple out;
  auto zeros = [n] { return std::vector<Real>(n, Real(0)); };
  out.revision_cited = out.revision_citing = zeros();
  out.iqp_cited = out.iqp_citing = out.iqpm_cited = out.iqpm_citing = zeros();
  out.triangle_cited = out.triangle_citing = zeros();
  out.triangle.assign(n, std::vector<Real>(n, Real(0)));
  out.tri_valid.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t[0][i][j] == 0 || t[1][i][j] == 0 || t[2][i][j] == 0) continue;
      out.tri_valid[i][j] = true;
      const Real& a = p.f[i][j];
      const Real& b = pm.f[i][j];
      const Real& c = q.f[i][j];
      const Real rev = c * log2(b / a);
      const Real iqp = c * log2(c / a);
      const Real iqpm = c * log2(c / b);
      const Real tri = b * log2(b / a) + iqpm - iqp;
      out.revision_cited[j] += rev;
      out.revision_citing[i] += rev;
      out.iqp_cited[j] += iqp;
      out.iqp_citing[i] += iqp;
      out.iqpm_cited[j] += iqpm;
      out.iqpm_citing[i] += iqpm;
      out.triangle[i][j] = tri;
      out.triangle_cited[j] += tri;
      out.triangle_citing[i] += tri;
    }
  }
  return out;
}

// Mean and population SD.
inline std::pair<Real, Real> moments(const std::vector<Real>& v) {
  Real mean = 0;
  for (const auto& x : v) mean += x;
  mean /= Real(v.size());
  Real var = 0;
  for (const auto& x : v) var += (x - mean) * (x - mean);
  var /= Real(v.size());
  return {mean, boost::multiprecision::sqrt(var)};
}

// ---------------------------------------------------------------------------
// Graphs

// Symmetric dense weights, zero diagonal.
using Adjacency = std::vector<std::vector<double>>;

inline long double modularity(const Adjacency& a, const std::vector<int>& part) {
  const auto n = a.size();
  std::vector<long double> k(n, 0.0L);
  long double two_m = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += a[i][j];
      two_m += a[i][j];
    }
  long double q = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (part[i] == part[j]) q += a[i][j] - k[i] * k[j] / two_m;
  return q / two_m;
}

// Calls `visit` on every set partition of {0..n-1} as a restricted growth
// string.
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> rgs(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_used) {
    if (i == n) {
      visit(rgs);
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(max_used, c));
    }
  };
  if (n == 0) return;
  rgs[0] = 0;
  rec(1, 0);
}

inline long double max_modularity(const Adjacency& a) {
  long double best = -1.0L;
  for_each_partition(a.size(), [&](const std::vector<int>& p) { best = std::max(best, modularity(a, p)); });
  return best;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace oracle
