#ifndef ASYMTSP_INSTANCE_HPP
#define ASYMTSP_INSTANCE_HPP

#include "asymtsp/types.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asymtsp {

enum class MetricState { unknown, metric, violating };

/// Complete directed instance with non-negative integer costs and a zero
/// diagonal. Immutable after construction apart from the metric flag cache.
class Instance {
 public:
  Instance() = default;
  /// Throws ValidationError unless `costs` is square, non-negative and has a
  /// zero diagonal.
  explicit Instance(CostMatrix costs, std::string name = {},
                    MetricState state = MetricState::unknown);

  int size() const { return static_cast<int>(costs_.rows()); }
  Cost operator()(Vertex u, Vertex v) const { return costs_(u, v); }
  const CostMatrix& costs() const { return costs_; }
  const std::string& name() const { return name_; }
  MetricState metric_state() const { return state_; }

  Instance renamed(std::string name) const;
  /// Subinstance induced by `vertices`, in the given order.
  Instance induced(std::span<const Vertex> vertices) const;
  Instance transposed() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.costs_ == b.costs_;
  }

 private:
  friend std::vector<std::array<Vertex, 3>> check_metric(Instance&, std::size_t);
  CostMatrix costs_;
  std::string name_;
  MetricState state_ = MetricState::unknown;
};

/// Cyclic visiting order of all vertices.
struct Tour {
  std::vector<Vertex> order;
  friend bool operator==(const Tour&, const Tour&) = default;
};

/// Vertex sequence with repeats allowed; `closed` adds the edge back to the
/// first vertex.
struct Trail {
  std::vector<Vertex> vertices;
  bool closed = false;
};

struct AsymmetryReport {
  double symmetric_pair_fraction = 0.0;
  std::optional<Ratio> median_factor;
  std::optional<Ratio> max_factor;
  double zero_cost_pair_fraction = 0.0;
  std::size_t pair_count = 0;
};

/// Throws ValidationError if `tour` is not a permutation of 0..n-1.
void validate_tour(const Instance& instance, const Tour& tour);

Cost tour_cost(const Instance& instance, const Tour& tour);

template <typename Derived>
Cost tour_cost(const Eigen::MatrixBase<Derived>& costs, std::span<const Vertex> order) {
  Cost total = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) total += costs(order[i], order[(i + 1) % n]);
  return total;
}

Cost trail_cost(const Instance& instance, const Trail& trail);

/// Returns up to `max_violations` triples (u, v, w) with
/// c(u,v) + c(v,w) < c(u,w) and records the outcome on the instance.
std::vector<std::array<Vertex, 3>> check_metric(Instance& instance,
                                                std::size_t max_violations = 16);
/// Non-caching variant.
std::vector<std::array<Vertex, 3>> find_metric_violations(const Instance& instance,
                                                          std::size_t max_violations = 16);
inline bool is_metric(const Instance& instance) {
  return instance.metric_state() == MetricState::metric ||
         find_metric_violations(instance, 1).empty();
}

/// max(a/b, b/a) with zero costs replaced by `zero_substitute` when given.
/// Empty when a zero is involved and no substitute is set; 1 when a == b.
std::optional<Ratio> asymmetry_factor(Cost a, Cost b,
                                      const std::optional<Ratio>& zero_substitute);

AsymmetryReport asymmetry_report(const Instance& instance,
                                 const std::optional<Ratio>& zero_substitute = std::nullopt);

/// Pairs whose asymmetry factor strictly exceeds `beta`. A zero cost without
/// substitute counts as an infinite factor.
std::vector<VertexPair> beta_asymmetric_pairs(const Instance& instance, const Ratio& beta,
                                              const std::optional<Ratio>& zero_substitute);

inline const Ratio kDefaultZeroSubstitute{1, 10};

}  // namespace asymtsp

#endif
