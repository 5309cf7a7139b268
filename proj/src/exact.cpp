#include "asymtsp/exact.hpp"

#include <bit>
#include <cstdint>

namespace asymtsp {

Cost tour_lower_bound(const CostMatrix& costs) {
  const auto n = costs.rows();
  if (n <= 1) return 0;
  Cost out_sum = 0;
  Cost in_sum = 0;
  for (Eigen::Index v = 0; v < n; ++v) {
    Cost best_out = std::numeric_limits<Cost>::max();
    Cost best_in = std::numeric_limits<Cost>::max();
    for (Eigen::Index u = 0; u < n; ++u) {
      if (u == v) continue;
      best_out = std::min(best_out, costs(v, u));
      best_in = std::min(best_in, costs(u, v));
    }
    out_sum += best_out;
    in_sum += best_in;
  }
  return std::max(out_sum, in_sum);
}

Trail eulerian_trail(const Multigraph& graph, Vertex start, Vertex end) {
  const int n = graph.n;
  if (start < 0 || start >= n || end < 0 || end >= n) throw ValidationError("trail endpoint out of range");
  std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(n));
  for (int id = 0; id < static_cast<int>(graph.edges.size()); ++id) {
    const auto& e = graph.edges[id];
    if (e.a == e.b) throw ValidationError("self-loop in multigraph");
    adj[e.a].emplace_back(e.b, id);
    adj[e.b].emplace_back(e.a, id);
  }
  std::vector<Vertex> bad;
  for (Vertex v = 0; v < n; ++v) {
    const bool odd = adj[v].size() % 2 == 1;
    const bool want_odd = start != end && (v == start || v == end);
    if (odd != want_odd) bad.push_back(v);
  }
  if (!bad.empty()) {
    std::string list;
    for (Vertex v : bad) list += (list.empty() ? "" : ",") + std::to_string(v);
    throw ValidationError("degree parity violated at vertices " + list);
  }

  std::vector<char> used(graph.edges.size(), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> circuit;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto& i = next[v];
    while (i < adj[v].size() && used[adj[v][i].second]) ++i;
    if (i == adj[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[adj[v][i].second] = 1;
      stack.push_back(adj[v][i].first);
    }
  }
  if (circuit.size() != graph.edges.size() + 1)
    throw ValidationError("multigraph edges are not connected to the start vertex");
  std::reverse(circuit.begin(), circuit.end());
  // For an open trail Hierholzer ends at the other odd vertex; reversing the
  // pop order puts `start` first.
  return Trail{std::move(circuit), false};
}

namespace {

class CoverSearch {
 public:
  CoverSearch(int n, const std::vector<VertexPair>& edges)
      : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {
    for (const auto& e : edges) {
      if (e.a == e.b) throw ValidationError("self-loop in cover instance");
      set(row(e.a), e.b);
      set(row(e.b), e.a);
    }
  }

  std::vector<Vertex> run(std::vector<Vertex> upper_bound) {
    best_ = std::move(upper_bound);
    std::vector<std::uint64_t> alive(words_, 0);
    for (Vertex v = 0; v < n_; ++v) set(alive.data(), v);
    std::vector<Vertex> chosen;
    search(alive, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  static void set(std::uint64_t* bits, int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
  static void clear(std::uint64_t* bits, int i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  static bool test(const std::uint64_t* bits, int i) { return bits[i >> 6] >> (i & 63) & 1; }
  std::uint64_t* row(int v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }

  int degree(const std::vector<std::uint64_t>& alive, Vertex v) {
    int d = 0;
    const auto* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w] & alive[w]);
    return d;
  }

  Vertex first_neighbor(const std::vector<std::uint64_t>& alive, Vertex v) {
    const auto* r = row(v);
    for (int w = 0; w < words_; ++w)
      if (auto bits = r[w] & alive[w]) return w * 64 + std::countr_zero(bits);
    return -1;
  }

  // greedy maximal matching size: every cover needs one endpoint per edge
  int matching_bound(const std::vector<std::uint64_t>& alive) {
    auto free = alive;
    int size = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (!test(free.data(), v)) continue;
      const auto* r = row(v);
      for (int w = 0; w < words_; ++w) {
        if (auto bits = r[w] & free[w]) {
          const int u = w * 64 + std::countr_zero(bits);
          clear(free.data(), u);
          clear(free.data(), v);
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void search(std::vector<std::uint64_t> alive, std::vector<Vertex> chosen) {
    if (++nodes_ > kNodeLimit)
      throw CapacityError("vertex cover search exceeded " + std::to_string(kNodeLimit) + " nodes");
    // degree-0 and degree-1 reductions
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v = 0; v < n_; ++v) {
        if (!test(alive.data(), v)) continue;
        const int d = degree(alive, v);
        if (d == 0) {
          clear(alive.data(), v);
          changed = true;
        } else if (d == 1) {
          const Vertex u = first_neighbor(alive, v);
          chosen.push_back(u);
          clear(alive.data(), u);
          clear(alive.data(), v);
          changed = true;
        }
      }
    }
    if (chosen.size() >= best_.size()) return;
    Vertex pivot = -1;
    int pivot_degree = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (!test(alive.data(), v)) continue;
      const int d = degree(alive, v);
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    }
    if (pivot < 0) {
      best_ = std::move(chosen);
      return;
    }
    if (chosen.size() + static_cast<std::size_t>(matching_bound(alive)) >= best_.size()) return;

    {
      auto a = alive;
      auto c = chosen;
      clear(a.data(), pivot);
      c.push_back(pivot);
      search(std::move(a), std::move(c));
    }
    {
      const auto* r = row(pivot);
      for (Vertex u = 0; u < n_; ++u) {
        if (test(r, u) && test(alive.data(), u)) {
          chosen.push_back(u);
          clear(alive.data(), u);
        }
      }
      clear(alive.data(), pivot);
      search(std::move(alive), std::move(chosen));
    }
  }

  static constexpr long long kNodeLimit = 20'000'000;
  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
  std::vector<Vertex> best_;
  long long nodes_ = 0;
};

}  // namespace

std::vector<Vertex> vertex_cover_2approx(int n, const std::vector<VertexPair>& edges) {
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> cover;
  for (const auto& e : sorted) {
    if (taken[e.a] || taken[e.b]) continue;
    taken[e.a] = taken[e.b] = 1;
    cover.push_back(e.a);
    cover.push_back(e.b);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

std::vector<Vertex> vertex_cover_exact(int n, const std::vector<VertexPair>& edges) {
  if (edges.empty()) return {};
  CoverSearch search(n, edges);
  return search.run(vertex_cover_2approx(n, edges));
}

bool covers(const std::vector<Vertex>& cover, const std::vector<VertexPair>& edges) {
  auto in = [&](Vertex v) { return std::find(cover.begin(), cover.end(), v) != cover.end(); };
  return std::all_of(edges.begin(), edges.end(), [&](const VertexPair& e) { return in(e.a) || in(e.b); });
}

}  // namespace asymtsp
