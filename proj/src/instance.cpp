#include "asymtsp/instance.hpp"

#include <algorithm>

namespace asymtsp {

Instance::Instance(CostMatrix costs, std::string name, MetricState state)
    : costs_(std::move(costs)), name_(std::move(name)), state_(state) {
  if (costs_.rows() != costs_.cols())
    throw ValidationError("cost matrix is not square");
  for (Eigen::Index i = 0; i < costs_.rows(); ++i) {
    if (costs_(i, i) != 0)
      throw ValidationError("diagonal entry " + std::to_string(i) + " is not zero");
  }
  if ((costs_.array() < 0).any()) throw ValidationError("negative cost");
}

Instance Instance::renamed(std::string name) const {
  Instance copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Instance Instance::induced(std::span<const Vertex> vertices) const {
  const auto m = static_cast<Eigen::Index>(vertices.size());
  CostMatrix sub(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = costs_(vertices[i], vertices[j]);
  // induced subgraphs of metric instances stay metric
  return Instance(std::move(sub), name_, state_ == MetricState::metric ? state_ : MetricState::unknown);
}

Instance Instance::transposed() const {
  return Instance(costs_.transpose(), name_, state_);
}

void validate_tour(const Instance& instance, const Tour& tour) {
  const int n = instance.size();
  if (static_cast<int>(tour.order.size()) != n)
    throw ValidationError("tour has " + std::to_string(tour.order.size()) +
                          " vertices, instance has " + std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : tour.order) {
    if (v < 0 || v >= n) throw ValidationError("tour vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw ValidationError("tour repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
}

Cost tour_cost(const Instance& instance, const Tour& tour) {
  validate_tour(instance, tour);
  return tour_cost(instance.costs(), std::span<const Vertex>(tour.order));
}

Cost trail_cost(const Instance& instance, const Trail& trail) {
  Cost total = 0;
  const auto& w = trail.vertices;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) total += instance(w[i], w[i + 1]);
  if (trail.closed && w.size() > 1) total += instance(w.back(), w.front());
  return total;
}

std::vector<std::array<Vertex, 3>> find_metric_violations(const Instance& instance,
                                                          std::size_t max_violations) {
  std::vector<std::array<Vertex, 3>> out;
  const int n = instance.size();
  const auto& c = instance.costs();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      const Cost cuv = c(u, v);
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (cuv + c(v, w) < c(u, w)) {
          if (out.size() >= max_violations) return out;
          out.push_back({u, v, w});
        }
      }
    }
  }
  return out;
}

std::vector<std::array<Vertex, 3>> check_metric(Instance& instance, std::size_t max_violations) {
  auto found = find_metric_violations(instance, std::max<std::size_t>(max_violations, 1));
  instance.state_ = found.empty() ? MetricState::metric : MetricState::violating;
  if (found.size() > max_violations) found.resize(max_violations);
  return found;
}

std::optional<Ratio> asymmetry_factor(Cost a, Cost b, const std::optional<Ratio>& zero_substitute) {
  if (a == b) return Ratio(1);
  if (a == 0 || b == 0) {
    if (!zero_substitute) return std::nullopt;
    // put both on the substitute's denominator
    const auto p = zero_substitute->num();
    const auto q = zero_substitute->den();
    const auto sa = a == 0 ? p : a * q;
    const auto sb = b == 0 ? p : b * q;
    return sa > sb ? Ratio(sa, sb) : Ratio(sb, sa);
  }
  return a > b ? Ratio(a, b) : Ratio(b, a);
}

AsymmetryReport asymmetry_report(const Instance& instance, const std::optional<Ratio>& zero_substitute) {
  AsymmetryReport report;
  const int n = instance.size();
  std::size_t symmetric = 0;
  std::size_t zero_pairs = 0;
  std::vector<Ratio> factors;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Cost a = instance(u, v);
      const Cost b = instance(v, u);
      ++report.pair_count;
      if (a == 0 || b == 0) ++zero_pairs;
      if (a == b) {
        ++symmetric;
        continue;
      }
      if (auto f = asymmetry_factor(a, b, zero_substitute)) factors.push_back(*f);
    }
  }
  if (report.pair_count > 0) {
    report.symmetric_pair_fraction = static_cast<double>(symmetric) / report.pair_count;
    report.zero_cost_pair_fraction = static_cast<double>(zero_pairs) / report.pair_count;
  } else {
    report.symmetric_pair_fraction = 1.0;
  }
  if (!factors.empty()) {
    std::sort(factors.begin(), factors.end());
    const auto m = factors.size();
    report.median_factor =
        m % 2 == 1 ? factors[m / 2] : (factors[m / 2 - 1] + factors[m / 2]) * Ratio(1, 2);
    report.max_factor = factors.back();
  }
  return report;
}

std::vector<VertexPair> beta_asymmetric_pairs(const Instance& instance, const Ratio& beta,
                                              const std::optional<Ratio>& zero_substitute) {
  std::vector<VertexPair> out;
  const int n = instance.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Cost a = instance(u, v);
      const Cost b = instance(v, u);
      if (a == b) continue;
      const auto f = asymmetry_factor(a, b, zero_substitute);
      const Ratio factor = f ? *f : Ratio::infinity();
      if (factor > beta) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace asymtsp
