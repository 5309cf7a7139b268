#include "asymtsp/metric.hpp"

#include <algorithm>

namespace asymtsp {

namespace {
constexpr Cost kNoEdge = std::numeric_limits<Cost>::max();
}

Partition::Partition(int n, std::vector<std::vector<Vertex>> blocks)
    : n_(n), blocks_(std::move(blocks)), owner_(static_cast<std::size_t>(n), -1) {
  for (auto& b : blocks_) {
    if (b.empty()) throw ValidationError("empty partition block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (int i = 0; i < block_count(); ++i) {
    for (Vertex v : blocks_[i]) {
      if (v < 0 || v >= n) throw ValidationError("partition vertex out of range");
      if (owner_[v] != -1) throw ValidationError("vertex " + std::to_string(v) + " in two blocks");
      owner_[v] = i;
    }
  }
  if (std::find(owner_.begin(), owner_.end(), -1) != owner_.end())
    throw ValidationError("partition does not cover every vertex");
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex v = 0; v < n; ++v) blocks.push_back({v});
  return Partition(n, std::move(blocks));
}

Instance metric_closure(const Instance& instance) {
  return Instance(floyd_warshall(instance.costs()), instance.name(), MetricState::metric);
}

Trail metric_shortcut(const Trail& trail, bool pin_endpoints) {
  const auto& w = trail.vertices;
  Trail out;
  out.closed = trail.closed;
  if (w.empty()) return out;
  const Vertex last = w.back();
  const bool pin_last = pin_endpoints && w.size() > 1 && last != w.front();
  const Vertex max_v = *std::max_element(w.begin(), w.end());
  std::vector<char> mark(static_cast<std::size_t>(max_v) + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vertex v = w[i];
    if (pin_last && v == last && i + 1 != w.size()) continue;
    if (mark[v]) continue;
    mark[v] = 1;
    out.vertices.push_back(v);
  }
  return out;
}

Tour shortcut_to_tour(const Instance& instance, const Trail& trail) {
  Tour tour{metric_shortcut(trail).vertices};
  validate_tour(instance, tour);
  return tour;
}

MetaGraph contract(const Instance& instance, const Partition& partition) {
  if (partition.vertex_count() != instance.size())
    throw ValidationError("partition size does not match instance");
  const int m = partition.block_count();
  MetaGraph meta{CostMatrix::Zero(m, m), partition, DenseMatrix<Edge>(m, m)};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        meta.witness(i, j) = Edge{partition.block(i).front(), partition.block(i).front()};
        continue;
      }
      Cost best = kNoEdge;
      Edge arg{};
      for (Vertex s : partition.block(i)) {
        for (Vertex t : partition.block(j)) {
          if (instance(s, t) < best) {
            best = instance(s, t);
            arg = Edge{s, t};
          }
        }
      }
      meta.costs(i, j) = best;
      meta.witness(i, j) = arg;
    }
  }
  return meta;
}

void PartialGraph::add_edge(Vertex u, Vertex v, Cost cost) {
  if (u == v) throw ValidationError("self-loop in partial graph");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ValidationError("edge endpoint out of range");
  if (cost < 0) throw ValidationError("negative edge cost");
  edges_[Edge{u, v}] = cost;
}

Instance polygon_complete(const PartialGraph& graph, std::string name) {
  const int n = graph.size();
  CostMatrix raw = CostMatrix::Constant(n, n, kNoEdge);
  for (Vertex v = 0; v < n; ++v) raw(v, v) = 0;
  for (const auto& [e, c] : graph.edges()) raw(e.from, e.to) = c;

  const CostMatrix dist = floyd_warshall(raw);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (dist(u, v) == kNoEdge)
        throw ValidationError("graph is not strongly connected: no path " + std::to_string(u) +
                              " -> " + std::to_string(v));
  for (const auto& [e, c] : graph.edges()) {
    if (dist(e.from, e.to) < c)
      throw ValidationError("polygon inequality violated: edge (" + std::to_string(e.from) + "," +
                            std::to_string(e.to) + ") costs " + std::to_string(c) +
                            " but a path costs " + std::to_string(dist(e.from, e.to)));
  }
  return Instance(dist, std::move(name), MetricState::metric);
}

}  // namespace asymtsp
