#ifndef ASYMTSP_GEN_TREEDOUBLE_HPP
#define ASYMTSP_GEN_TREEDOUBLE_HPP

#include "asymtsp/exact.hpp"
#include "asymtsp/metric.hpp"
#include "asymtsp/spanning.hpp"

#include <optional>

namespace asymtsp {

/// Spanning path of a tree component from v_in to v_out: the tree path
/// between them is used once, every other edge twice, and the resulting
/// Eulerian trail is shortcut with both endpoints pinned. v_in == v_out
/// doubles everything and opens the circuit at that vertex.
std::vector<Vertex> adjusted_tree_doubling(const TreeComponent& component, Vertex v_in, Vertex v_out);

struct GTDPlan {
  Arborescence arborescence;
  ComponentForest forest;
  MetaGraph meta;
  Tour meta_tour;
  /// (v_in, v_out) per component, indexed like forest.components
  std::vector<std::pair<Vertex, Vertex>> endpoints;
  std::vector<std::vector<Vertex>> component_paths;
  int parameter_k = 0;
  Ratio beta{1};
};

struct GTDOptions {
  Ratio beta{1};
  /// fixed MSA root; empty means the cheapest arborescence over all roots
  std::optional<Vertex> root = 0;
  std::optional<Arborescence> injected_arborescence;
  int kernel_limit = kDefaultHeldKarpLimit;
  std::optional<Ratio> zero_substitute = kDefaultZeroSubstitute;
};

struct GTDResult {
  GTDPlan plan;
  Tour tour;
  Cost tour_cost = 0;
};

GTDResult gtd_solve(const Instance& instance, const GTDOptions& options);

struct GTDKernel {
  std::vector<Vertex> representatives;
  Instance kernel_instance;
  ComponentForest forest;
  int parameter_k = 0;
};

/// One representative per component: the lowest index, or `injected`
/// (which must hit every component exactly once).
GTDKernel gtd_kernelize(const Instance& instance, const Arborescence& arb, const Ratio& beta,
                        const std::optional<std::vector<Vertex>>& injected = std::nullopt,
                        const std::optional<Ratio>& zero_substitute = kDefaultZeroSubstitute);

/// Replaces every representative by the doubled-tree cycle of its component
/// opened at the representative.
Tour gtd_lift(const Instance& instance, const GTDKernel& kernel, const Tour& kernel_tour);

}  // namespace asymtsp

#endif
