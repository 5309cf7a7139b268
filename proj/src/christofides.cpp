#include "asymtsp/christofides.hpp"

#include "asymtsp/metric.hpp"

#include <algorithm>

namespace asymtsp {

namespace {

std::vector<Vertex> sorted_vertices(std::span<const Vertex> vertices) {
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (vs.empty()) throw ValidationError("Christofides needs at least one vertex");
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw ValidationError("duplicate vertex in input set");
  return vs;
}

Cost directed_cost(const CostMatrix& costs, const std::vector<Vertex>& closed_walk) {
  Cost total = 0;
  for (std::size_t i = 0; i + 1 < closed_walk.size(); ++i) total += costs(closed_walk[i], closed_walk[i + 1]);
  return total;
}

}  // namespace

ChristofidesTrace christofides_trace(const CostMatrix& sym, std::span<const Vertex> vertices,
                                     const std::optional<TreeComponent>& injected_mst) {
  const auto vs = sorted_vertices(vertices);
  ChristofidesTrace trace;
  if (vs.size() <= 3) {
    trace.tree.vertices = vs;
    trace.order = vs;
    trace.circuit.vertices = vs;
    trace.circuit.vertices.push_back(vs.front());
    trace.circuit.closed = false;
    return trace;
  }

  trace.tree = mst_undirected(sym, vs);
  if (injected_mst) {
    validate_spanning_tree(*injected_mst, vs);
    const Cost minimum = tree_cost(sym, trace.tree);
    const Cost injected = tree_cost(sym, *injected_mst);
    if (injected != minimum)
      throw ValidationError("injected tree costs " + std::to_string(injected) + ", minimum is " +
                            std::to_string(minimum));
    trace.tree = *injected_mst;
    trace.tree.vertices = vs;
  }

  // local ids keep the multigraph compact
  const int m = static_cast<int>(vs.size());
  auto local = [&](Vertex v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::vector<int> degree(static_cast<std::size_t>(m), 0);
  Multigraph mg{m, {}};
  for (const Edge& e : trace.tree.edges) {
    ++degree[local(e.from)];
    ++degree[local(e.to)];
    mg.add(local(e.from), local(e.to));
  }
  std::vector<Vertex> odd;
  for (int i = 0; i < m; ++i)
    if (degree[i] % 2 == 1) odd.push_back(vs[i]);
  trace.matching = min_weight_perfect_matching(sym, odd);
  for (const auto& p : trace.matching.pairs) {
    ++degree[local(p.a)];
    ++degree[local(p.b)];
    mg.add(local(p.a), local(p.b));
  }
  for (int d : degree)
    if (d % 2 != 0) throw std::logic_error("tree plus matching has an odd-degree vertex");

  const Trail local_circuit = eulerian_trail(mg, 0, 0);
  trace.circuit.closed = false;
  for (Vertex v : local_circuit.vertices) trace.circuit.vertices.push_back(vs[v]);
  trace.order = metric_shortcut(trace.circuit).vertices;
  return trace;
}

CostMatrix min_direction_view(const CostMatrix& costs) { return costs.cwiseMin(costs.transpose()); }

ChristofidesTrace relaxed_christofides_trace(const Instance& instance, std::span<const Vertex> vertices,
                                             const std::optional<TreeComponent>& injected_mst) {
  const CostMatrix view = min_direction_view(instance.costs());
  ChristofidesTrace trace = christofides_trace(view, vertices, injected_mst);
  auto walk = trace.circuit.vertices;
  const Cost forward = directed_cost(instance.costs(), walk);
  std::reverse(walk.begin(), walk.end());
  const Cost backward = directed_cost(instance.costs(), walk);
  if (backward < forward) trace.circuit.vertices = std::move(walk);
  trace.order = metric_shortcut(trace.circuit).vertices;
  return trace;
}

}  // namespace asymtsp
