#ifndef ASYMTSP_CHRISTOFIDES_HPP
#define ASYMTSP_CHRISTOFIDES_HPP

#include "asymtsp/exact.hpp"
#include "asymtsp/spanning.hpp"

#include <optional>

namespace asymtsp {

/// Intermediate objects of one Christofides run, kept for inspection.
struct ChristofidesTrace {
  TreeComponent tree;
  Matching matching;
  /// Eulerian circuit of tree + matching; first vertex repeated at the end.
  Trail circuit;
  /// Visiting order over the input vertex set (original ids).
  std::vector<Vertex> order;
};

/// Christofides on the symmetric metric view `sym` restricted to `vertices`.
/// An injected tree must span `vertices` and be minimum, otherwise
/// ValidationError.
ChristofidesTrace christofides_trace(const CostMatrix& sym, std::span<const Vertex> vertices,
                                     const std::optional<TreeComponent>& injected_mst = std::nullopt);

inline std::vector<Vertex> christofides(const CostMatrix& sym, std::span<const Vertex> vertices,
                                        const std::optional<TreeComponent>& injected_mst = std::nullopt) {
  return christofides_trace(sym, vertices, injected_mst).order;
}

/// min(c, c^T): the cheaper direction of every pair.
CostMatrix min_direction_view(const CostMatrix& costs);

/// Christofides on the min-direction view, with the circuit evaluated in the
/// original directed costs in both directions (forward wins ties) and
/// shortcut in the original instance.
ChristofidesTrace relaxed_christofides_trace(const Instance& instance, std::span<const Vertex> vertices,
                                             const std::optional<TreeComponent>& injected_mst = std::nullopt);

inline std::vector<Vertex> relaxed_christofides(const Instance& instance, std::span<const Vertex> vertices,
                                                const std::optional<TreeComponent>& injected_mst = std::nullopt) {
  return relaxed_christofides_trace(instance, vertices, injected_mst).order;
}

}  // namespace asymtsp

#endif
