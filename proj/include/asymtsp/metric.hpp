#ifndef ASYMTSP_METRIC_HPP
#define ASYMTSP_METRIC_HPP

#include "asymtsp/instance.hpp"

#include <limits>
#include <map>
#include <vector>

namespace asymtsp {

/// Exact cover of 0..n-1 by disjoint non-empty blocks, kept in canonical
/// order (sorted by minimum element, each block sorted).
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless `blocks` is an exact cover of 0..n-1.
  Partition(int n, std::vector<std::vector<Vertex>> blocks);

  static Partition singletons(int n);

  int vertex_count() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& block(int i) const { return blocks_[i]; }
  int block_of(Vertex v) const { return owner_[v]; }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<int> owner_;
};

/// Minor of an instance obtained by contracting each partition block to a
/// single vertex. Generally not metric.
struct MetaGraph {
  CostMatrix costs;
  Partition origin;
  /// argmin cross edge realising costs(i, j), ties to lowest (source, target).
  DenseMatrix<Edge> witness;

  int size() const { return static_cast<int>(costs.rows()); }
};

template <typename Derived>
CostMatrix floyd_warshall(const Eigen::MatrixBase<Derived>& costs) {
  CostMatrix dist = costs;
  const auto n = dist.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const Cost dik = dist(i, k);
      if (dik == std::numeric_limits<Cost>::max()) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        const Cost dkj = dist(k, j);
        if (dkj == std::numeric_limits<Cost>::max()) continue;
        if (dik + dkj < dist(i, j)) dist(i, j) = dik + dkj;
      }
    }
  }
  return dist;
}

/// All-pairs shortest path costs. The result is metric and idempotent.
Instance metric_closure(const Instance& instance);

/// Keeps the first occurrence of every vertex. With `pin_endpoints` the last
/// vertex of the input stays last (unless it equals the first).
Trail metric_shortcut(const Trail& trail, bool pin_endpoints = false);

Tour shortcut_to_tour(const Instance& instance, const Trail& trail);

MetaGraph contract(const Instance& instance, const Partition& partition);

/// Incomplete directed graph; missing ordered pairs have no edge.
class PartialGraph {
 public:
  explicit PartialGraph(int n) : n_(n) {}
  void add_edge(Vertex u, Vertex v, Cost cost);
  /// Adds both directions with the same cost.
  void add_symmetric(Vertex u, Vertex v, Cost cost) {
    add_edge(u, v, cost);
    add_edge(v, u, cost);
  }
  int size() const { return n_; }
  const std::map<Edge, Cost>& edges() const { return edges_; }

 private:
  int n_;
  std::map<Edge, Cost> edges_;
};

/// Completes a strongly connected graph satisfying the polygon inequality by
/// giving every missing edge the cost of the cheapest path. Existing costs
/// are preserved exactly.
Instance polygon_complete(const PartialGraph& graph, std::string name = {});

}  // namespace asymtsp

#endif
