// Brute-force reference implementations shared by the unit and acceptance
// tests. Each one is deliberately naive and independent of the library code
// it checks.
#ifndef ASYMTSP_TESTS_ORACLES_HPP
#define ASYMTSP_TESTS_ORACLES_HPP

#include "asymtsp/instance.hpp"
#include "asymtsp/spanning.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using asymtsp::Cost;
using asymtsp::CostMatrix;
using asymtsp::Vertex;
using asymtsp::VertexPair;

/// Cheapest cyclic order over all (n-1)! permutations of 1..n-1.
inline Cost tsp_optimum(const CostMatrix& c) {
  const int n = static_cast<int>(c.rows());
  if (n <= 1) return 0;
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  Cost best = std::numeric_limits<Cost>::max();
  do {
    Cost total = 0;
    for (int i = n - 1; i >= 0; --i) total += c(p[i], p[(i + 1) % n]);
    best = std::min(best, total);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return best;
}

/// Minimum perfect matching by recursive pairing of the first free vertex.
inline Cost matching_optimum(const CostMatrix& sym, std::vector<Vertex> vs) {
  if (vs.empty()) return 0;
  Cost best = std::numeric_limits<Cost>::max();
  const Vertex a = vs.front();
  for (std::size_t i = 1; i < vs.size(); ++i) {
    std::vector<Vertex> rest;
    for (std::size_t j = 1; j < vs.size(); ++j)
      if (j != i) rest.push_back(vs[j]);
    best = std::min(best, sym(a, vs[i]) + matching_optimum(sym, rest));
  }
  return best;
}

/// Cheapest arborescence rooted at `root` over all n^(n-1) parent maps.
inline Cost arborescence_optimum(const CostMatrix& c, int root) {
  const int n = static_cast<int>(c.rows());
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  Cost best = std::numeric_limits<Cost>::max();
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      for (int x = 0; x < n; ++x) {
        int y = x;
        for (int steps = 0; y != root; ++steps) {
          if (steps > n) return;
          y = parent[y];
        }
      }
      Cost total = 0;
      for (int x = 0; x < n; ++x)
        if (x != root) total += c(parent[x], x);
      best = std::min(best, total);
      return;
    }
    if (v == root) {
      rec(v + 1);
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (p == v) continue;
      parent[v] = p;
      rec(v + 1);
    }
  };
  rec(0);
  return n == 1 ? 0 : best;
}

/// Smallest vertex cover size by scanning subsets in increasing popcount.
inline int cover_optimum(int n, const std::vector<VertexPair>& edges) {
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (const auto& e : edges)
      if (!(mask >> e.a & 1) && !(mask >> e.b & 1)) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

inline CostMatrix random_symmetric(int n, std::uint64_t seed, Cost max_cost = 50) {
  std::mt19937_64 rng(seed);
  CostMatrix c = CostMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c(i, j) = c(j, i) = static_cast<Cost>(rng() % static_cast<std::uint64_t>(max_cost + 1));
  return c;
}

inline std::vector<VertexPair> random_graph(int n, std::uint64_t seed, int percent) {
  std::mt19937_64 rng(seed);
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(i, j);
  return edges;
}

/// Random partition of 0..n-1 into at most `blocks` non-empty sets.
inline std::vector<std::vector<Vertex>> random_blocks(int n, int blocks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(blocks));
  for (Vertex v = 0; v < n; ++v) out[v < blocks ? v : rng() % static_cast<std::uint64_t>(blocks)].push_back(v);
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& b) { return b.empty(); }), out.end());
  return out;
}

}  // namespace oracle

#endif
