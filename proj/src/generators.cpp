#include "asymtsp/generators.hpp"

#include <random>

namespace asymtsp {

GkInstance gen_gk(int k) {
  if (k <= 2) throw ValidationError("G_k needs k >= 3, got " + std::to_string(k));
  GkInstance out;
  out.k = k;
  const int n = 2 * k;
  auto gray = [](int i) { return i - 1; };
  auto black = [k](int i) { return k + i - 1; };
  auto wrap = [k](int i) { return (i - 1) % k + 1; };

  PartialGraph pg(n);
  for (int i = 1; i <= k; ++i) {
    pg.add_symmetric(gray(i), gray(wrap(i + 1)), 2);
    pg.add_symmetric(black(i), black(wrap(i + 1)), 2);
    pg.add_edge(gray(i), black(i), 1);
    pg.add_edge(black(i), gray(i), 2);
    pg.add_symmetric(black(i), gray(wrap(i + 1)), 1);
  }
  // zig-zag b_1, b_k, b_2, b_{k-1}, ...
  std::vector<Vertex> zigzag;
  for (int lo = 1, hi = k; lo <= hi; ++lo, --hi) {
    zigzag.push_back(black(lo));
    if (hi != lo) zigzag.push_back(black(hi));
  }
  out.zigzag_mst.vertices.assign(zigzag.begin(), zigzag.end());
  std::sort(out.zigzag_mst.vertices.begin(), out.zigzag_mst.vertices.end());
  for (std::size_t i = 0; i + 1 < zigzag.size(); ++i) {
    pg.add_symmetric(zigzag[i], zigzag[i + 1], 2);
    out.zigzag_mst.edges.push_back(Edge{zigzag[i], zigzag[i + 1]});
  }
  out.partial = pg;
  out.instance = polygon_complete(pg, "G_" + std::to_string(k));

  for (int i = 1; i <= k; ++i) {
    out.gray_cover.push_back(gray(i));
    out.optimal_tour.order.push_back(gray(i));
    out.optimal_tour.order.push_back(black(i));
  }
  // kernel vertices ascending: g_1..g_k, b_1 -> local ids 0..k-1, k
  out.kernel_tour.order = {0, k};
  for (int i = 2; i <= k; ++i) out.kernel_tour.order.push_back(i - 1);
  return out;
}

CycleFamily gen_cycle_family(int m) {
  if (m < 2) throw ValidationError("cycle family needs m >= 2, got " + std::to_string(m));
  const int n = 2 * m;
  PartialGraph pg(n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (i == m - 1 || i == n - 1)
      pg.add_edge(i, j, 1);
    else
      pg.add_symmetric(i, j, 1);
  }
  CycleFamily out;
  out.m = m;
  out.instance = polygon_complete(pg, "cycle_" + std::to_string(m));
  out.arborescence.root = 0;
  out.arborescence.parent.assign(static_cast<std::size_t>(n), -1);
  for (int v = 1; v < n; ++v) out.arborescence.parent[v] = v - 1;
  out.arborescence.total_cost = n - 1;
  out.representatives = {m - 1, n - 1};
  for (int v = 0; v < n; ++v) out.optimal_tour.order.push_back(v);
  return out;
}

Instance gen_random_metric(int n, std::uint64_t seed, const Ratio& asymmetry_strength) {
  if (n < 1) throw ValidationError("instance needs at least one vertex");
  if (asymmetry_strength.is_infinite()) throw ValidationError("asymmetry strength must be finite");
  std::mt19937_64 rng(seed);
  // raw engine output keeps the sequence identical across standard libraries
  auto draw = [&rng](std::uint64_t bound) { return static_cast<Cost>(rng() % (bound + 1)); };
  CostMatrix costs = CostMatrix::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Cost base = 1 + draw(99);
      const auto spread = static_cast<std::uint64_t>(base * asymmetry_strength.num() / asymmetry_strength.den());
      costs(u, v) = base + draw(spread);
      costs(v, u) = base + draw(spread);
    }
  }
  const std::string name = "rand" + std::to_string(n) + "_s" + std::to_string(seed) + "_a" +
                           asymmetry_strength.decimal(2);
  return metric_closure(Instance(costs, name));
}

Instance gen_random_instance(int n, std::uint64_t seed, Cost max_cost) {
  if (n < 1) throw ValidationError("instance needs at least one vertex");
  std::mt19937_64 rng(seed);
  CostMatrix costs = CostMatrix::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) costs(u, v) = static_cast<Cost>(rng() % static_cast<std::uint64_t>(max_cost + 1));
  return Instance(costs, "raw" + std::to_string(n) + "_s" + std::to_string(seed));
}

MetricLift metric_lift(const Instance& g) {
  const int n = g.size();
  if (n < 2) throw ValidationError("metric lift needs at least two vertices");
  const int size = n * (n - 1);
  auto id = [n](int u, int v) { return u * (n - 1) + (v < u ? v : v - 1); };
  const Cost missing = g.costs().maxCoeff() + 1;
  CostMatrix costs = CostMatrix::Constant(size, size, missing);
  costs.diagonal().setZero();
  std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      costs(id(u, v), id(v, u)) = g(u, v);
      blocks[u].push_back(id(u, v));
    }
  }
  return MetricLift{Instance(costs, g.name() + "_lift"), Partition(size, std::move(blocks))};
}

}  // namespace asymtsp
