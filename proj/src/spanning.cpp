#include "asymtsp/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace asymtsp {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max();

struct DisjointSets {
  explicit DisjointSets(int n) : up(static_cast<std::size_t>(n)) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    up[b] = a;
    return true;
  }
  std::vector<int> up;
};

bool better(Cost c, const Edge& e, Cost best_c, const Edge& best_e) {
  return c < best_c || (c == best_c && e < best_e);
}

// One contraction level of Chu-Liu/Edmonds. Returns the chosen in-neighbour
// of every node at this level (-1 for the root).
std::vector<int> edmonds_level(int m, int root, const CostMatrix& w, const DenseMatrix<Edge>& orig) {
  std::vector<int> in(static_cast<std::size_t>(m), -1);
  for (int v = 0; v < m; ++v) {
    if (v == root) continue;
    Cost best = kInf;
    for (int u = 0; u < m; ++u) {
      if (u == v || w(u, v) == kInf) continue;
      if (in[v] == -1 || better(w(u, v), orig(u, v), best, orig(in[v], v))) {
        best = w(u, v);
        in[v] = u;
      }
    }
    if (in[v] == -1) throw ValidationError("vertex unreachable from root");
  }

  // cycle detection over the in-edges
  std::vector<int> cycle_id(static_cast<std::size_t>(m), -1);
  std::vector<int> stamp(static_cast<std::size_t>(m), -1);
  int cycles = 0;
  for (int s = 0; s < m; ++s) {
    int v = s;
    while (v != root && stamp[v] == -1 && cycle_id[v] == -1) {
      stamp[v] = s;
      v = in[v];
    }
    if (v != root && stamp[v] == s && cycle_id[v] == -1) {
      for (int x = in[v];; x = in[x]) {
        cycle_id[x] = cycles;
        if (x == v) break;
      }
      ++cycles;
    }
  }
  if (cycles == 0) return in;

  // contracted node ids: each cycle is one node, other nodes stay alone
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  int next = 0;
  std::vector<int> cycle_node(static_cast<std::size_t>(cycles), -1);
  for (int v = 0; v < m; ++v) {
    if (cycle_id[v] >= 0) {
      if (cycle_node[cycle_id[v]] < 0) cycle_node[cycle_id[v]] = next++;
      comp[v] = cycle_node[cycle_id[v]];
    } else {
      comp[v] = next++;
    }
  }
  const int mm = next;
  CostMatrix w2 = CostMatrix::Constant(mm, mm, kInf);
  DenseMatrix<Edge> orig2(mm, mm);
  DenseMatrix<Edge> via(mm, mm);
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (u == v || w(u, v) == kInf) continue;
      const int a = comp[u];
      const int b = comp[v];
      if (a == b || v == root) continue;
      const Cost reduced = cycle_id[v] >= 0 ? w(u, v) - w(in[v], v) : w(u, v);
      if (w2(a, b) == kInf || better(reduced, orig(u, v), w2(a, b), orig2(a, b))) {
        w2(a, b) = reduced;
        orig2(a, b) = orig(u, v);
        via(a, b) = Edge{u, v};
      }
    }
  }
  const auto in2 = edmonds_level(mm, comp[root], w2, orig2);
  std::vector<int> result(static_cast<std::size_t>(m), -1);
  for (int v = 0; v < m; ++v)
    if (cycle_id[v] >= 0) result[v] = in[v];
  for (int b = 0; b < mm; ++b) {
    if (in2[b] < 0) continue;
    const Edge e = via(in2[b], b);
    result[e.to] = e.from;
  }
  return result;
}

}  // namespace

std::vector<Edge> Arborescence::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < size(); ++v)
    if (parent[v] >= 0) out.push_back(Edge{parent[v], v});
  return out;
}

Partition ComponentForest::partition(int n) const {
  std::vector<std::vector<Vertex>> blocks;
  for (const auto& c : components) blocks.push_back(c.vertices);
  return Partition(n, std::move(blocks));
}

void validate_arborescence(const Instance& instance, const Arborescence& arb) {
  const int n = instance.size();
  if (arb.size() != n) throw ValidationError("arborescence does not span the instance");
  if (arb.root < 0 || arb.root >= n || arb.parent[arb.root] != -1)
    throw ValidationError("arborescence root is invalid");
  Cost total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == arb.root) continue;
    const Vertex p = arb.parent[v];
    if (p < 0 || p >= n || p == v) throw ValidationError("vertex " + std::to_string(v) + " has no valid parent");
    total += instance(p, v);
    // walk to the root; more than n steps means a cycle
    Vertex x = v;
    for (int steps = 0; x != arb.root; ++steps) {
      if (steps > n) throw ValidationError("parent pointers contain a cycle");
      x = arb.parent[x];
      if (x < 0) throw ValidationError("parent chain does not reach the root");
    }
  }
  if (total != arb.total_cost) throw ValidationError("arborescence total cost is inconsistent");
}

Arborescence msa(const Instance& instance, Vertex root) {
  const int n = instance.size();
  if (root < 0 || root >= n) throw ValidationError("root " + std::to_string(root) + " out of range");
  DenseMatrix<Edge> orig(n, n);
  CostMatrix w = instance.costs();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) orig(u, v) = Edge{u, v};
  Arborescence arb;
  arb.root = root;
  arb.parent = edmonds_level(n, root, w, orig);
  for (Vertex v = 0; v < n; ++v)
    if (arb.parent[v] >= 0) arb.total_cost += instance(arb.parent[v], v);
  return arb;
}

Arborescence msa_best_root(const Instance& instance) {
  Arborescence best = msa(instance, 0);
  for (Vertex r = 1; r < instance.size(); ++r) {
    auto a = msa(instance, r);
    if (a.total_cost < best.total_cost) best = std::move(a);
  }
  return best;
}

Arborescence accept_arborescence(const Instance& instance, Arborescence arb) {
  validate_arborescence(instance, arb);
  const auto reference = msa(instance, arb.root);
  if (reference.total_cost != arb.total_cost)
    throw ValidationError("injected arborescence costs " + std::to_string(arb.total_cost) +
                          ", minimum is " + std::to_string(reference.total_cost));
  return arb;
}

std::vector<Edge> one_way_edges(const Instance& instance, const Arborescence& arb, const Ratio& beta,
                                const std::optional<Ratio>& zero_substitute) {
  std::vector<Edge> out;
  for (const Edge& e : arb.edges()) {
    const Cost forward = instance(e.from, e.to);
    const Cost backward = instance(e.to, e.from);
    if (!(forward < backward)) continue;
    const auto f = asymmetry_factor(forward, backward, zero_substitute);
    if ((f ? *f : Ratio::infinity()) > beta) out.push_back(e);
  }
  return out;
}

ComponentForest split_components(const Arborescence& arb, const std::vector<Edge>& removed) {
  const int n = arb.size();
  auto is_removed = [&](const Edge& e) {
    return std::find(removed.begin(), removed.end(), e) != removed.end();
  };
  for (const Edge& e : removed)
    if (e.to < 0 || e.to >= n || arb.parent[e.to] != e.from)
      throw ValidationError("removed edge is not an arborescence edge");
  DisjointSets sets(n);
  std::vector<Edge> kept;
  for (const Edge& e : arb.edges()) {
    if (is_removed(e)) continue;
    kept.push_back(e);
    sets.unite(e.from, e.to);
  }
  ComponentForest forest;
  forest.removed_edges = removed;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    const int r = sets.find(v);
    if (index[r] < 0) {
      index[r] = static_cast<int>(forest.components.size());
      forest.components.emplace_back();
    }
    forest.components[index[r]].vertices.push_back(v);
  }
  for (const Edge& e : kept) forest.components[index[sets.find(e.from)]].edges.push_back(e);
  return forest;
}

TreeComponent mst_undirected(const CostMatrix& sym, std::span<const Vertex> vertices) {
  TreeComponent tree;
  tree.vertices.assign(vertices.begin(), vertices.end());
  std::sort(tree.vertices.begin(), tree.vertices.end());
  const int m = static_cast<int>(tree.vertices.size());
  std::vector<std::tuple<Cost, int, int>> candidates;
  candidates.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) candidates.emplace_back(sym(tree.vertices[i], tree.vertices[j]), i, j);
  std::sort(candidates.begin(), candidates.end());
  DisjointSets sets(m);
  for (const auto& [c, i, j] : candidates) {
    if (sets.unite(i, j)) tree.edges.push_back(Edge{tree.vertices[i], tree.vertices[j]});
    if (static_cast<int>(tree.edges.size()) == m - 1) break;
  }
  return tree;
}

Cost tree_cost(const CostMatrix& sym, const TreeComponent& tree) {
  Cost total = 0;
  for (const Edge& e : tree.edges) total += sym(e.from, e.to);
  return total;
}

void validate_spanning_tree(const TreeComponent& tree, std::span<const Vertex> vertices) {
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end());
  if (tree.edges.size() + 1 != vs.size()) throw ValidationError("tree has the wrong number of edges");
  auto local = [&](Vertex v) {
    auto it = std::lower_bound(vs.begin(), vs.end(), v);
    if (it == vs.end() || *it != v) throw ValidationError("tree edge leaves the vertex set");
    return static_cast<int>(it - vs.begin());
  };
  DisjointSets sets(static_cast<int>(vs.size()));
  for (const Edge& e : tree.edges)
    if (!sets.unite(local(e.from), local(e.to))) throw ValidationError("tree edges contain a cycle");
}

}  // namespace asymtsp
