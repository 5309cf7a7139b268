#include "asymtsp/gen_christofides.hpp"

#include "asymtsp/metric.hpp"

#include <algorithm>

namespace asymtsp {

namespace {

std::vector<Vertex> rotated_to(std::vector<Vertex> order, Vertex first) {
  auto it = std::find(order.begin(), order.end(), first);
  if (it == order.end()) throw std::logic_error("rotation vertex missing from tour");
  std::rotate(order.begin(), it, order.end());
  return order;
}

void require_metric(const Instance& instance) {
  if (!is_metric(instance))
    throw ValidationError("instance '" + instance.name() + "' is not metric; apply metric_closure first");
}

}  // namespace

GCKernel gc_kernelize(const Instance& instance, const GCOptions& options) {
  require_metric(instance);
  const int n = instance.size();
  const auto pairs = beta_asymmetric_pairs(instance, options.beta, options.zero_substitute);

  GCKernel kernel;
  kernel.beta = options.beta;
  if (options.cover_mode == CoverMode::injected || options.injected_cover) {
    if (!options.injected_cover) throw ValidationError("injected cover mode without a cover");
    kernel.cover = *options.injected_cover;
    std::sort(kernel.cover.begin(), kernel.cover.end());
    kernel.cover.erase(std::unique(kernel.cover.begin(), kernel.cover.end()), kernel.cover.end());
    for (Vertex v : kernel.cover)
      if (v < 0 || v >= n) throw ValidationError("injected cover vertex out of range");
    if (!covers(kernel.cover, pairs)) throw ValidationError("injected cover misses a beta-asymmetric pair");
    if (options.claim_minimum_cover && vertex_cover_exact(n, pairs).size() < kernel.cover.size())
      throw ValidationError("injected cover is not minimum");
  } else if (options.cover_mode == CoverMode::approx) {
    kernel.cover = vertex_cover_2approx(n, pairs);
  } else {
    kernel.cover = vertex_cover_exact(n, pairs);
  }
  kernel.parameter_z = static_cast<int>(kernel.cover.size());

  std::vector<char> in_cover(static_cast<std::size_t>(n), 0);
  for (Vertex v : kernel.cover) in_cover[v] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!in_cover[v]) kernel.complement_vertices.push_back(v);
  if (!kernel.complement_vertices.empty()) kernel.glue_vertex = kernel.complement_vertices.front();

  kernel.kernel_vertices = kernel.cover;
  if (kernel.glue_vertex) kernel.kernel_vertices.push_back(*kernel.glue_vertex);
  std::sort(kernel.kernel_vertices.begin(), kernel.kernel_vertices.end());
  kernel.kernel_instance = instance.induced(kernel.kernel_vertices);
  return kernel;
}

Tour gc_lift(const Instance& instance, const GCKernel& kernel, const Tour& kernel_tour,
             const std::optional<TreeComponent>& injected_mst, std::vector<Vertex>* host_order) {
  validate_tour(kernel.kernel_instance, kernel_tour);
  std::vector<Vertex> kernel_order;
  for (Vertex v : kernel_tour.order) kernel_order.push_back(kernel.kernel_vertices[v]);
  if (!kernel.glue_vertex) {
    Tour tour{kernel_order};
    validate_tour(instance, tour);
    return tour;
  }
  const Vertex glue = *kernel.glue_vertex;
  std::vector<Vertex> host = relaxed_christofides(instance, kernel.complement_vertices, injected_mst);
  host = rotated_to(std::move(host), glue);
  if (host_order) *host_order = host;

  Trail joined;
  joined.closed = true;
  joined.vertices = host;
  for (Vertex v : rotated_to(std::move(kernel_order), glue)) joined.vertices.push_back(v);
  return shortcut_to_tour(instance, joined);
}

GCResult gc_solve(const Instance& instance, const GCOptions& options) {
  GCResult result;
  result.kernel = gc_kernelize(instance, options);
  const auto& kernel = result.kernel;
  const int size = kernel.kernel_instance.size();
  if (options.injected_kernel_tour) {
    result.kernel_tour = *options.injected_kernel_tour;
    validate_tour(kernel.kernel_instance, result.kernel_tour);
    const Cost cost = tour_cost(kernel.kernel_instance, result.kernel_tour);
    if (!options.allow_gamma && cost != tour_lower_bound(kernel.kernel_instance.costs()))
      throw ValidationError("injected kernel tour is not certified optimal");
  } else {
    if (size > options.kernel_limit)
      throw CapacityError("kernel has " + std::to_string(size) + " vertices (z = " +
                          std::to_string(kernel.parameter_z) + "), Held-Karp limit is " +
                          std::to_string(options.kernel_limit));
    result.kernel_tour = held_karp(kernel.kernel_instance, options.kernel_limit);
  }
  result.tour = gc_lift(instance, kernel, result.kernel_tour, options.injected_mst, &result.host_order);
  result.tour_cost = tour_cost(instance, result.tour);
  return result;
}

}  // namespace asymtsp
