#ifndef ASYMTSP_GEN_CHRISTOFIDES_HPP
#define ASYMTSP_GEN_CHRISTOFIDES_HPP

#include "asymtsp/christofides.hpp"
#include "asymtsp/exact.hpp"

#include <optional>

namespace asymtsp {

enum class CoverMode { exact, approx, injected };

struct GCKernel {
  Instance kernel_instance;
  /// cover plus glue vertex, ascending; kernel_instance follows this order
  std::vector<Vertex> kernel_vertices;
  /// absent when the cover is the whole vertex set
  std::optional<Vertex> glue_vertex;
  std::vector<Vertex> cover;
  std::vector<Vertex> complement_vertices;
  Ratio beta{1};
  int parameter_z = 0;
};

struct GCOptions {
  Ratio beta{1};
  CoverMode cover_mode = CoverMode::exact;
  std::optional<std::vector<Vertex>> injected_cover;
  /// with an injected cover, also check that no smaller cover exists
  bool claim_minimum_cover = false;
  /// spanning tree forced on the complement side
  std::optional<TreeComponent> injected_mst;
  /// kernel tour in kernel-local indices; must be certified optimal by
  /// tour_lower_bound unless allow_gamma is set
  std::optional<Tour> injected_kernel_tour;
  bool allow_gamma = false;
  int kernel_limit = kDefaultHeldKarpLimit;
  std::optional<Ratio> zero_substitute = kDefaultZeroSubstitute;
};

struct GCResult {
  GCKernel kernel;
  Tour kernel_tour;
  /// tour computed on the complement plus glue vertex (original ids)
  std::vector<Vertex> host_order;
  Tour tour;
  Cost tour_cost = 0;
};

/// Throws ValidationError for non-metric input.
GCKernel gc_kernelize(const Instance& instance, const GCOptions& options);

Tour gc_lift(const Instance& instance, const GCKernel& kernel, const Tour& kernel_tour,
             const std::optional<TreeComponent>& injected_mst = std::nullopt,
             std::vector<Vertex>* host_order = nullptr);

GCResult gc_solve(const Instance& instance, const GCOptions& options);

}  // namespace asymtsp

#endif
