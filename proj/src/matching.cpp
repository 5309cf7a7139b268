#include "asymtsp/exact.hpp"

#include <deque>

namespace asymtsp {

namespace {

// Maximum-weight matching on a dense graph with positive integer weights,
// O(m^3) primal-dual blossom. Vertices 1..m, blossoms m+1..2m, 0 = none.
// Labels are kept doubled so every dual update stays integral.
class DenseBlossom {
 public:
  explicit DenseBlossom(int m)
      : n_(m),
        size_(2 * m + 1),
        g_(static_cast<std::size_t>(size_) * size_),
        lab_(size_, 0),
        match_(size_, 0),
        slack_(size_, 0),
        st_(size_, 0),
        pa_(size_, 0),
        s_(size_, 0),
        vis_(size_, 0),
        flo_(size_),
        flo_from_(static_cast<std::size_t>(size_) * (m + 1), 0) {
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) g(u, v) = EdgeW{u, v, 0};
  }

  void set_weight(int u, int v, Cost w) {
    g(u, v).w = w;
    g(v, u).w = w;
  }

  std::vector<int> solve() {
    n_x_ = n_;
    for (int u = 0; u <= n_; ++u) {
      st_[u] = u;
      flo_[u].clear();
    }
    Cost w_max = 0;
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) {
        flo_from(u, v) = (u == v ? u : 0);
        w_max = std::max(w_max, g(u, v).w);
      }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (matching()) {
    }
    return {match_.begin(), match_.begin() + n_ + 1};
  }

 private:
  struct EdgeW {
    int u = 0;
    int v = 0;
    Cost w = 0;
  };

  EdgeW& g(int u, int v) { return g_[static_cast<std::size_t>(u) * size_ + v]; }
  int& flo_from(int b, int x) { return flo_from_[static_cast<std::size_t>(b) * (n_ + 1) + x]; }

  Cost e_delta(const EdgeW& e) const { return lab_[e.u] + lab_[e.v] - e.w * 2; }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(g(u, x)) < e_delta(g(slack_[x], x))) slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (g(u, x).w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int y : flo_[x]) q_push(y);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int y : flo_[x]) set_st(y, b);
  }

  int get_pr(int b, int xr) {
    auto& f = flo_[b];
    const int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = g(u, v).v;
    if (u <= n_) return;
    const EdgeW e = g(u, v);
    const int xr = flo_from(u, e.u);
    const int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) set_match(flo_[u][i], flo_[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flo_[u].begin(), flo_[u].begin() + pr, flo_[u].end());
  }

  void augment(int u, int v) {
    for (;;) {
      const int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++stamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == stamp_) return u;
      vis_[u] = stamp_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    flo_[b].clear();
    flo_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flo_[b].push_back(x);
      flo_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flo_[b].begin() + 1, flo_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flo_[b].push_back(x);
      flo_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) {
      g(b, x).w = 0;
      g(x, b).w = 0;
    }
    for (int x = 1; x <= n_; ++x) flo_from(b, x) = 0;
    for (int xs : flo_[b]) {
      for (int x = 1; x <= n_x_; ++x) {
        if (g(b, x).w == 0 || e_delta(g(xs, x)) < e_delta(g(b, x))) {
          g(b, x) = g(xs, x);
          g(x, b) = g(x, xs);
        }
      }
      for (int x = 1; x <= n_; ++x)
        if (flo_from(xs, x)) flo_from(b, x) = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int x : flo_[b]) set_st(x, x);
    const int xr = flo_from(b, g(b, pa_[b]).u);
    const int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      const int xs = flo_[b][i];
      const int xns = flo_[b][i + 1];
      pa_[xs] = g(xns, xs).u;
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < flo_[b].size(); ++i) {
      const int xs = flo_[b][i];
      s_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(const EdgeW& e) {
    const int u = st_[e.u];
    const int v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      const int nu = st_[match_[v]];
      slack_[v] = 0;
      slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      const int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool matching() {
    std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        const int u = q_.front();
        q_.pop_front();
        if (s_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v) {
          if (g(u, v).w > 0 && st_[u] != st_[v]) {
            if (e_delta(g(u, v)) == 0) {
              if (on_found_edge(g(u, v))) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
        }
      }
      Cost d = std::numeric_limits<Cost>::max();
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1)
            d = std::min(d, e_delta(g(slack_[x], x)));
          else if (s_[x] == 0)
            d = std::min(d, e_delta(g(slack_[x], x)) / 2);
        }
      }
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;
          lab_[u] -= d;
        } else if (s_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b) {
          if (s_[st_[b]] == 0)
            lab_[b] += d * 2;
          else if (s_[st_[b]] == 1)
            lab_[b] -= d * 2;
        }
      }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x && e_delta(g(slack_[x], x)) == 0)
          if (on_found_edge(g(slack_[x], x))) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int n_x_ = 0;
  int size_;
  int stamp_ = 0;
  std::vector<EdgeW> g_;
  std::vector<Cost> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flo_;
  std::vector<int> flo_from_;
  std::deque<int> q_;
};

}  // namespace

Matching min_weight_perfect_matching(const CostMatrix& sym, std::span<const Vertex> vertices) {
  const int m = static_cast<int>(vertices.size());
  if (m % 2 != 0) throw ValidationError("perfect matching needs an even vertex count, got " + std::to_string(m));
  Matching result;
  if (m == 0) return result;
  Cost max_cost = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) max_cost = std::max(max_cost, sym(vertices[i], vertices[j]));
  // Large enough that every maximum-weight matching is perfect.
  const Cost base = (m / 2) * max_cost + 1;
  DenseBlossom solver(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) solver.set_weight(i + 1, j + 1, base - sym(vertices[i], vertices[j]));
  const auto mate = solver.solve();
  for (int i = 1; i <= m; ++i) {
    if (mate[i] == 0) throw ValidationError("matching solver left a vertex unmatched");
    if (mate[i] > i) {
      const Vertex a = vertices[i - 1];
      const Vertex b = vertices[mate[i] - 1];
      result.pairs.emplace_back(a, b);
      result.total_cost += sym(a, b);
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

}  // namespace asymtsp
