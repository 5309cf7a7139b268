#ifndef ASYMTSP_EXACT_HPP
#define ASYMTSP_EXACT_HPP

#include "asymtsp/instance.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

namespace asymtsp {

inline constexpr int kDefaultHeldKarpLimit = 22;
inline constexpr int kBruteForceLimit = 10;

namespace detail {

// Bitmask DP over subsets of {1..n-1}; vertex 0 is the fixed start.
// Scalar is the DP entry type, chosen by the caller so that the table stays
// small when every tour cost fits in 32 bits.
template <typename Scalar, typename Derived>
std::vector<Vertex> held_karp_dp(const Eigen::MatrixBase<Derived>& costs) {
  const int n = static_cast<int>(costs.rows());
  const int m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  constexpr Scalar inf = std::numeric_limits<Scalar>::max();
  std::vector<Scalar> dp(subsets * static_cast<std::size_t>(m), inf);
  auto at = [&](std::size_t mask, int j) -> Scalar& { return dp[mask * m + j]; };
  for (int j = 0; j < m; ++j) at(std::size_t{1} << j, j) = static_cast<Scalar>(costs(0, j + 1));
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      const Scalar here = at(mask, j);
      if (here == inf) continue;
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        const Scalar cand = here + static_cast<Scalar>(costs(j + 1, k + 1));
        Scalar& slot = at(mask | (std::size_t{1} << k), k);
        if (cand < slot) slot = cand;
      }
    }
  }
  const std::size_t full = subsets - 1;
  int last = 0;
  Scalar best = inf;
  for (int j = 0; j < m; ++j) {
    const Scalar total = at(full, j) + static_cast<Scalar>(costs(j + 1, 0));
    if (total < best) {
      best = total;
      last = j;
    }
  }
  // walk the table backwards; lowest predecessor wins ties
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::size_t mask = full;
  int j = last;
  for (int pos = n - 1; pos >= 1; --pos) {
    order[pos] = j + 1;
    const std::size_t prev = mask & ~(std::size_t{1} << j);
    if (prev == 0) break;
    for (int i = 0; i < m; ++i) {
      if (!(prev >> i & 1)) continue;
      if (at(prev, i) != inf && at(prev, i) + static_cast<Scalar>(costs(i + 1, j + 1)) == at(mask, j)) {
        mask = prev;
        j = i;
        break;
      }
    }
  }
  order[0] = 0;
  return order;
}

}  // namespace detail

/// Optimal tour by Held-Karp. Works on any non-negative cost matrix,
/// including non-metric minors. Throws CapacityError above `limit`.
template <typename Derived>
Tour held_karp(const Eigen::MatrixBase<Derived>& costs, int limit = kDefaultHeldKarpLimit) {
  const int n = static_cast<int>(costs.rows());
  if (n > limit)
    throw CapacityError("Held-Karp needs " + std::to_string(n) + " vertices, limit is " +
                        std::to_string(limit));
  if (n <= 0) return Tour{};
  if (n <= 2) {
    Tour t;
    for (int v = 0; v < n; ++v) t.order.push_back(v);
    return t;
  }
  const Cost max_edge = costs.maxCoeff();
  const bool fits32 = max_edge < std::numeric_limits<std::int32_t>::max() / (2 * n);
  return Tour{fits32 ? detail::held_karp_dp<std::int32_t>(costs) : detail::held_karp_dp<Cost>(costs)};
}

inline Tour held_karp(const Instance& instance, int limit = kDefaultHeldKarpLimit) {
  return held_karp(instance.costs(), limit);
}

/// Exhaustive search over the (n-1)! cyclic orders starting at vertex 0.
template <typename Derived>
Tour brute_force_tour(const Eigen::MatrixBase<Derived>& costs) {
  const int n = static_cast<int>(costs.rows());
  if (n > kBruteForceLimit)
    throw CapacityError("brute force limited to " + std::to_string(kBruteForceLimit) + " vertices");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  if (n <= 2) return Tour{order};
  std::vector<Vertex> best = order;
  Cost best_cost = tour_cost(costs, std::span<const Vertex>(order));
  while (std::next_permutation(order.begin() + 1, order.end())) {
    const Cost c = tour_cost(costs, std::span<const Vertex>(order));
    if (c < best_cost) {
      best_cost = c;
      best = order;
    }
  }
  return Tour{best};
}

inline Tour brute_force_tour(const Instance& instance) { return brute_force_tour(instance.costs()); }

/// Lower bound on any tour: the larger of the summed cheapest out-edges and
/// the summed cheapest in-edges.
Cost tour_lower_bound(const CostMatrix& costs);

struct Matching {
  std::vector<VertexPair> pairs;
  Cost total_cost = 0;
};

/// Exact minimum-weight perfect matching of `vertices` under the symmetric
/// view `sym` (indexed by original ids). O(m^3) weighted blossom.
Matching min_weight_perfect_matching(const CostMatrix& sym, std::span<const Vertex> vertices);

/// Undirected multigraph; parallel edges are listed repeatedly.
struct Multigraph {
  int n = 0;
  std::vector<VertexPair> edges;

  void add(Vertex u, Vertex v, int multiplicity = 1) {
    for (int i = 0; i < multiplicity; ++i) edges.emplace_back(u, v);
  }
};

/// Hierholzer. Closed circuit when start == end, otherwise an open trail.
/// Throws ValidationError on parity or connectivity violations.
Trail eulerian_trail(const Multigraph& graph, Vertex start, Vertex end);

/// Minimum-cardinality vertex cover by bounded search-tree branching.
std::vector<Vertex> vertex_cover_exact(int n, const std::vector<VertexPair>& edges);

/// Maximal-matching 2-approximation.
std::vector<Vertex> vertex_cover_2approx(int n, const std::vector<VertexPair>& edges);

bool covers(const std::vector<Vertex>& cover, const std::vector<VertexPair>& edges);

}  // namespace asymtsp

#endif
