#include "asymtsp/exact.hpp"
#include "asymtsp/generators.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace asymtsp;

TEST_CASE("held-karp small cases") {
  CostMatrix c(3, 3);
  c << 0, 1, 5, 5, 0, 1, 1, 5, 0;
  CHECK(tour_cost(Instance(c), held_karp(Instance(c))) == 3);
  CHECK(held_karp(Instance(CostMatrix::Zero(1, 1))).order == std::vector<Vertex>{0});
  CHECK_THROWS_AS(held_karp(Instance(CostMatrix::Zero(23, 23))), CapacityError);
  CHECK_THROWS_AS(held_karp(Instance(CostMatrix::Zero(6, 6)), 5), CapacityError);
}

TEST_CASE("held-karp equals brute force on non-metric instances") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const Instance inst = gen_random_instance(n, seed);
    const Tour hk = held_karp(inst);
    validate_tour(inst, hk);
    CHECK(tour_cost(inst, hk) == tour_cost(inst, brute_force_tour(inst)));
    CHECK(tour_cost(inst, hk) == oracle::tsp_optimum(inst.costs()));
  }
}

TEST_CASE("held-karp with 64-bit entries") {
  CostMatrix c = CostMatrix::Constant(5, 5, Cost{1} << 40);
  c.diagonal().setZero();
  c(0, 1) = c(1, 2) = c(2, 3) = c(3, 4) = c(4, 0) = 1;
  CHECK(tour_cost(Instance(c), held_karp(Instance(c))) == 5);
}

TEST_CASE("brute force") {
  CostMatrix c(2, 2);
  c << 0, 3, 4, 0;
  CHECK(tour_cost(Instance(c), brute_force_tour(Instance(c))) == 7);
  CostMatrix u = CostMatrix::Ones(4, 4);
  u.diagonal().setZero();
  CHECK(tour_cost(Instance(u), brute_force_tour(Instance(u))) == 4);
  CHECK_THROWS_AS(brute_force_tour(Instance(CostMatrix::Zero(11, 11))), CapacityError);
}

TEST_CASE("tour lower bound") {
  const GkInstance g = gen_gk(6);
  CHECK(tour_lower_bound(g.instance.costs()) == 12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_random_metric(7, seed, Ratio(1, 2));
    CHECK(tour_lower_bound(inst.costs()) <= tour_cost(inst, held_karp(inst)));
  }
}

TEST_CASE("matching") {
  CostMatrix c(2, 2);
  c << 0, 7, 7, 0;
  std::vector<Vertex> two{0, 1};
  const Matching m = min_weight_perfect_matching(c, two);
  CHECK(m.total_cost == 7);
  CHECK(m.pairs.size() == 1);
  std::vector<Vertex> three{0, 1, 2};
  CHECK_THROWS_AS(min_weight_perfect_matching(oracle::random_symmetric(3, 1), three), ValidationError);
}

TEST_CASE("matching equals pairing enumeration") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int m = 2 * (1 + static_cast<int>(seed % 5));
    const int n = m + 3;
    const CostMatrix sym = oracle::random_symmetric(n, seed, seed % 2 ? 5 : 60);
    std::vector<Vertex> vs;
    for (int v = 0; v < n && static_cast<int>(vs.size()) < m; ++v)
      if ((v + seed) % 4 != 0 || n - v <= m - static_cast<int>(vs.size())) vs.push_back(v);
    REQUIRE(static_cast<int>(vs.size()) == m);
    const Matching got = min_weight_perfect_matching(sym, vs);
    CHECK(got.total_cost == oracle::matching_optimum(sym, vs));
    std::vector<Vertex> seen;
    for (const auto& p : got.pairs) {
      seen.push_back(p.a);
      seen.push_back(p.b);
    }
    std::sort(seen.begin(), seen.end());
    CHECK(seen == vs);
  }
}

TEST_CASE("eulerian trail") {
  Multigraph doubled{2, {}};
  doubled.add(0, 1, 2);
  CHECK(eulerian_trail(doubled, 0, 0).vertices == std::vector<Vertex>{0, 1, 0});

  Multigraph path{3, {}};
  path.add(0, 1);
  path.add(1, 2, 2);
  const Trail t = eulerian_trail(path, 0, 1);
  CHECK(t.vertices.size() == 4);
  CHECK(t.vertices.front() == 0);
  CHECK(t.vertices.back() == 1);

  Multigraph odd{3, {}};
  odd.add(0, 1);
  odd.add(1, 2);
  CHECK_THROWS_WITH_AS(eulerian_trail(odd, 0, 0), doctest::Contains("0,2"), ValidationError);

  Multigraph split{4, {}};
  split.add(0, 1, 2);
  split.add(2, 3, 2);
  CHECK_THROWS_AS(eulerian_trail(split, 0, 0), ValidationError);
}

TEST_CASE("eulerian trail uses every edge with its multiplicity") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const Instance inst = gen_random_metric(n, seed, Ratio(0));
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vs[i] = i;
    const TreeComponent tree = mst_undirected(inst.costs(), vs);
    Multigraph mg{n, {}};
    for (const Edge& e : tree.edges) mg.add(e.from, e.to, 2);
    const Trail t = eulerian_trail(mg, 0, 0);
    CHECK(t.vertices.size() == 2 * static_cast<std::size_t>(n - 1) + 1);
    std::map<VertexPair, int> used;
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) ++used[VertexPair(t.vertices[i], t.vertices[i + 1])];
    for (const Edge& e : tree.edges) CHECK(used[VertexPair(e.from, e.to)] == 2);
  }
}

TEST_CASE("vertex covers") {
  CHECK(vertex_cover_exact(4, {}).empty());
  CHECK(vertex_cover_2approx(4, {}).empty());
  CHECK(vertex_cover_exact(2, {VertexPair(0, 1)}).size() == 1);
  CHECK(vertex_cover_2approx(2, {VertexPair(0, 1)}) == std::vector<Vertex>{0, 1});
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 13);
    const auto edges = oracle::random_graph(n, seed, 10 + static_cast<int>(seed % 60));
    const auto exact = vertex_cover_exact(n, edges);
    const auto approx = vertex_cover_2approx(n, edges);
    CHECK(covers(exact, edges));
    CHECK(covers(approx, edges));
    CHECK(static_cast<int>(exact.size()) == oracle::cover_optimum(n, edges));
    CHECK(approx.size() <= 2 * exact.size());
  }
}
