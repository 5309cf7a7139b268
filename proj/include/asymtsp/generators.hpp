#ifndef ASYMTSP_GENERATORS_HPP
#define ASYMTSP_GENERATORS_HPP

#include "asymtsp/metric.hpp"
#include "asymtsp/spanning.hpp"

#include <cstdint>

namespace asymtsp {

/// The 2k-vertex family on which generalized Christofides with an
/// adversarial cover and spanning tree costs at least 5k - 3 while the
/// optimum is 2k. Gray g_i is vertex i-1, black b_i is vertex k+i-1.
struct GkInstance {
  int k = 0;
  PartialGraph partial{0};
  Instance instance;
  /// the gray vertices, a minimum cover of the asymmetric pairs
  std::vector<Vertex> gray_cover;
  /// zig-zag path b_1, b_k, b_2, b_{k-1}, ... over the black vertices
  TreeComponent zigzag_mst;
  /// g_1 b_1 g_2 b_2 ... g_k b_k, cost 2k
  Tour optimal_tour;
  /// g_1 b_1 g_2 g_3 ... g_k on the kernel gray + {b_1}, in kernel-local ids
  Tour kernel_tour;
};

GkInstance gen_gk(int k);

/// Cycle v_1..v_2m with unit edges; only v_m -> v_{m+1} and v_2m -> v_1 are
/// one-directional. Vertex v_i is i-1.
struct CycleFamily {
  int m = 0;
  Instance instance;
  /// the path v_1 -> v_2 -> ... -> v_2m rooted at v_1
  Arborescence arborescence;
  /// v_m and v_2m
  std::vector<Vertex> representatives;
  Tour optimal_tour;
};

CycleFamily gen_cycle_family(int m);

/// Integer costs in [1, 100] per pair, each direction raised independently
/// by up to `asymmetry_strength` times the base cost, then closed metrically.
Instance gen_random_metric(int n, std::uint64_t seed, const Ratio& asymmetry_strength);

/// Arbitrary (possibly non-metric) instance with costs in [0, max_cost].
Instance gen_random_instance(int n, std::uint64_t seed, Cost max_cost = 100);

struct MetricLift {
  Instance instance;
  Partition blocks;
};

/// Metric instance on n(n-1) vertices u_v (u != v) whose contraction by the
/// blocks V_u = {u_v} gives back `g`. Missing edges cost max(g) + 1.
MetricLift metric_lift(const Instance& g);

}  // namespace asymtsp

#endif
