#include "asymtsp/gen_treedouble.hpp"

#include <algorithm>

namespace asymtsp {

namespace {

void require_metric(const Instance& instance) {
  if (!is_metric(instance))
    throw ValidationError("instance '" + instance.name() + "' is not metric; apply metric_closure first");
}

// Bound on the component paths: every kept tree edge is walked at most once
// per direction, and a kept edge's reverse costs at most beta times its
// forward cost. Zero forward costs can only be bounded by their reverse cost.
bool paths_within_bound(const Instance& instance, const GTDPlan& plan, Cost paths_cost) {
  if (plan.beta.is_infinite()) return true;
  Cost forward = 0;
  Cost zero_slack = 0;
  for (const auto& comp : plan.forest.components) {
    for (const Edge& e : comp.edges) {
      forward += instance(e.from, e.to);
      if (instance(e.from, e.to) == 0) zero_slack += instance(e.to, e.from);
    }
  }
  const Ratio one_plus_beta = Ratio(1) + plan.beta;
  return static_cast<__int128>(paths_cost - zero_slack) * one_plus_beta.den() <=
         static_cast<__int128>(forward) * one_plus_beta.num();
}

Cost path_cost(const Instance& instance, const std::vector<Vertex>& path) {
  Cost total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) total += instance(path[i], path[i + 1]);
  return total;
}

}  // namespace

std::vector<Vertex> adjusted_tree_doubling(const TreeComponent& component, Vertex v_in, Vertex v_out) {
  auto vs = component.vertices;
  std::sort(vs.begin(), vs.end());
  const int m = static_cast<int>(vs.size());
  auto local = [&](Vertex v) {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) throw ValidationError("vertex " + std::to_string(v) + " not in component");
    return static_cast<int>(it - vs.begin());
  };
  const int s = local(v_in);
  const int t = local(v_out);
  if (m == 1) return {v_in};

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(m));
  for (int id = 0; id < static_cast<int>(component.edges.size()); ++id) {
    const Edge& e = component.edges[id];
    adj[local(e.from)].emplace_back(local(e.to), id);
    adj[local(e.to)].emplace_back(local(e.from), id);
  }
  // tree path s -> t by parent pointers from a DFS at s
  std::vector<int> via(static_cast<std::size_t>(m), -1);
  std::vector<int> prev(static_cast<std::size_t>(m), -1);
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (auto [y, id] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      prev[y] = x;
      via[y] = id;
      stack.push_back(y);
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != m) throw ValidationError("component edges do not form a tree");
  std::vector<char> on_path(component.edges.size(), 0);
  for (int x = t; x != s; x = prev[x]) on_path[via[x]] = 1;

  Multigraph mg{m, {}};
  for (int id = 0; id < static_cast<int>(component.edges.size()); ++id) {
    const Edge& e = component.edges[id];
    mg.add(local(e.from), local(e.to), on_path[id] ? 1 : 2);
  }
  const Trail trail = eulerian_trail(mg, s, t);
  Trail global;
  for (int x : trail.vertices) global.vertices.push_back(vs[x]);
  return metric_shortcut(global, true).vertices;
}

GTDResult gtd_solve(const Instance& instance, const GTDOptions& options) {
  require_metric(instance);
  const int n = instance.size();
  GTDResult result;
  GTDPlan& plan = result.plan;
  plan.beta = options.beta;
  if (options.injected_arborescence)
    plan.arborescence = accept_arborescence(instance, *options.injected_arborescence);
  else if (options.root)
    plan.arborescence = msa(instance, *options.root);
  else
    plan.arborescence = msa_best_root(instance);

  const auto removed = one_way_edges(instance, plan.arborescence, options.beta, options.zero_substitute);
  plan.parameter_k = static_cast<int>(removed.size());
  plan.forest = split_components(plan.arborescence, removed);
  plan.meta = contract(instance, plan.forest.partition(n));
  const int blocks = plan.meta.size();
  if (blocks > options.kernel_limit)
    throw CapacityError("meta-graph has " + std::to_string(blocks) + " vertices (k = " +
                        std::to_string(plan.parameter_k) + "), Held-Karp limit is " +
                        std::to_string(options.kernel_limit));
  plan.meta_tour = held_karp(plan.meta.costs, options.kernel_limit);

  plan.endpoints.assign(static_cast<std::size_t>(blocks), {-1, -1});
  if (blocks == 1) {
    const Vertex root = plan.arborescence.root;
    plan.endpoints[0] = {root, root};
  } else {
    const auto& order = plan.meta_tour.order;
    for (int i = 0; i < blocks; ++i) {
      const int a = order[i];
      const int b = order[(i + 1) % blocks];
      const Edge w = plan.meta.witness(a, b);
      plan.endpoints[a].second = w.from;
      plan.endpoints[b].first = w.to;
    }
  }
  plan.component_paths.resize(static_cast<std::size_t>(blocks));
  Cost paths_cost = 0;
  for (int b = 0; b < blocks; ++b) {
    const auto [v_in, v_out] = plan.endpoints[b];
    plan.component_paths[b] = adjusted_tree_doubling(plan.forest.components[b], v_in, v_out);
    paths_cost += path_cost(instance, plan.component_paths[b]);
  }
  if (!paths_within_bound(instance, plan, paths_cost))
    throw std::logic_error("component paths exceed the (1 + beta) tree bound");

  Trail joined;
  joined.closed = true;
  for (int b : plan.meta_tour.order)
    for (Vertex v : plan.component_paths[b]) joined.vertices.push_back(v);
  result.tour = shortcut_to_tour(instance, joined);
  result.tour_cost = tour_cost(instance, result.tour);
  return result;
}

GTDKernel gtd_kernelize(const Instance& instance, const Arborescence& arb, const Ratio& beta,
                        const std::optional<std::vector<Vertex>>& injected,
                        const std::optional<Ratio>& zero_substitute) {
  require_metric(instance);
  validate_arborescence(instance, arb);
  GTDKernel kernel;
  const auto removed = one_way_edges(instance, arb, beta, zero_substitute);
  kernel.parameter_k = static_cast<int>(removed.size());
  kernel.forest = split_components(arb, removed);
  const int blocks = static_cast<int>(kernel.forest.components.size());
  if (injected) {
    if (static_cast<int>(injected->size()) != blocks)
      throw ValidationError("need exactly one representative per component");
    const Partition part = kernel.forest.partition(instance.size());
    kernel.representatives.assign(static_cast<std::size_t>(blocks), -1);
    for (Vertex v : *injected) {
      if (v < 0 || v >= instance.size()) throw ValidationError("representative out of range");
      const int b = part.block_of(v);
      if (kernel.representatives[b] >= 0) throw ValidationError("two representatives in one component");
      kernel.representatives[b] = v;
    }
  } else {
    for (const auto& comp : kernel.forest.components) kernel.representatives.push_back(comp.vertices.front());
  }
  kernel.kernel_instance = instance.induced(kernel.representatives);
  return kernel;
}

Tour gtd_lift(const Instance& instance, const GTDKernel& kernel, const Tour& kernel_tour) {
  validate_tour(kernel.kernel_instance, kernel_tour);
  Trail joined;
  joined.closed = true;
  for (int b : kernel_tour.order) {
    const Vertex rep = kernel.representatives[b];
    for (Vertex v : adjusted_tree_doubling(kernel.forest.components[b], rep, rep)) joined.vertices.push_back(v);
  }
  return shortcut_to_tour(instance, joined);
}

}  // namespace asymtsp
