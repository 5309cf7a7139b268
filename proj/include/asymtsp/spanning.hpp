#ifndef ASYMTSP_SPANNING_HPP
#define ASYMTSP_SPANNING_HPP

#include "asymtsp/instance.hpp"
#include "asymtsp/metric.hpp"

#include <optional>
#include <vector>

namespace asymtsp {

/// Rooted spanning arborescence stored as a parent map; parent[root] == -1.
struct Arborescence {
  Vertex root = 0;
  std::vector<Vertex> parent;
  Cost total_cost = 0;

  int size() const { return static_cast<int>(parent.size()); }
  std::vector<Edge> edges() const;
};

/// Tree on a vertex subset. Edges keep the orientation they had in the
/// arborescence they came from but are meant to be read as undirected.
struct TreeComponent {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct ComponentForest {
  std::vector<TreeComponent> components;
  std::vector<Edge> removed_edges;

  Partition partition(int n) const;
};

/// Throws ValidationError unless `arb` is a spanning arborescence of
/// `instance` with a consistent total cost.
void validate_arborescence(const Instance& instance, const Arborescence& arb);

/// Chu-Liu/Edmonds on the dense matrix. Among equal-cost candidate edges
/// the smaller (source, target) wins.
Arborescence msa(const Instance& instance, Vertex root = 0);

/// Cheapest arborescence over all roots (ties to the lowest root).
Arborescence msa_best_root(const Instance& instance);

/// Validates an externally supplied arborescence and checks it is minimum
/// for its root.
Arborescence accept_arborescence(const Instance& instance, Arborescence arb);

/// Arborescence edges (u, v) with c(u,v) < c(v,u) whose asymmetry factor
/// exceeds `beta`. beta == 1 yields the plain one-way edges.
std::vector<Edge> one_way_edges(const Instance& instance, const Arborescence& arb, const Ratio& beta,
                                const std::optional<Ratio>& zero_substitute = std::nullopt);

/// Components of the arborescence after deleting `removed`, ordered by
/// their smallest vertex.
ComponentForest split_components(const Arborescence& arb, const std::vector<Edge>& removed);

/// Minimum spanning tree of `vertices` under the symmetric view `sym`
/// (indexed by original vertex ids). Kruskal with (cost, u, v) ordering.
TreeComponent mst_undirected(const CostMatrix& sym, std::span<const Vertex> vertices);

Cost tree_cost(const CostMatrix& sym, const TreeComponent& tree);

/// Throws ValidationError unless `tree` spans `vertices` as a tree.
void validate_spanning_tree(const TreeComponent& tree, std::span<const Vertex> vertices);

}  // namespace asymtsp

#endif
