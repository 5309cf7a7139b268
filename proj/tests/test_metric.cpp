#include "asymtsp/exact.hpp"
#include "asymtsp/generators.hpp"
#include "asymtsp/metric.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace asymtsp;

TEST_CASE("metric closure") {
  CostMatrix c(3, 3);
  c << 0, 1, 10, 10, 0, 1, 1, 10, 0;
  const Instance closed = metric_closure(Instance(c));
  CHECK(closed(1, 0) == 2);
  CHECK(closed(2, 1) == 2);
  CHECK(closed(0, 2) == 2);
  CHECK(metric_closure(closed) == closed);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance raw = gen_random_instance(8, seed);
    Instance once = metric_closure(raw);
    CHECK(check_metric(once).empty());
    CHECK((once.costs().array() <= raw.costs().array()).all());
    CHECK(metric_closure(once) == once);
  }
}

TEST_CASE("metric shortcut") {
  CHECK(metric_shortcut(Trail{{0, 1, 0, 2}, false}).vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(metric_shortcut(Trail{{3, 1, 2}, false}).vertices == std::vector<Vertex>{3, 1, 2});
  CHECK(metric_shortcut(Trail{{0, 1, 2, 1, 3, 2}, false}, true).vertices == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(metric_shortcut(Trail{{4, 4}, false}, true).vertices == std::vector<Vertex>{4});
}

TEST_CASE("shortcut never increases the cost of a doubled-tree circuit") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_random_metric(8, seed, Ratio(1, 2));
    std::vector<Vertex> vs{0, 1, 2, 3, 4, 5, 6, 7};
    const TreeComponent tree = mst_undirected(inst.costs(), vs);
    Multigraph mg{8, {}};
    for (const Edge& e : tree.edges) mg.add(e.from, e.to, 2);
    const Trail circuit = eulerian_trail(mg, 0, 0);
    Cost walk = 0;
    for (std::size_t i = 0; i + 1 < circuit.vertices.size(); ++i) walk += inst(circuit.vertices[i], circuit.vertices[i + 1]);
    const Tour tour = shortcut_to_tour(inst, circuit);
    CHECK(tour_cost(inst, tour) <= walk);
  }
}

TEST_CASE("contract") {
  const Instance inst = gen_random_metric(6, 4, Ratio(1, 2));
  const MetaGraph same = contract(inst, Partition::singletons(6));
  CHECK(same.costs == inst.costs());

  const Partition part(6, {{4, 0}, {1, 5}, {2, 3}});
  CHECK(part.block(0) == std::vector<Vertex>{0, 4});
  const MetaGraph meta = contract(inst, part);
  REQUIRE(meta.size() == 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Cost best = std::numeric_limits<Cost>::max();
      for (Vertex s : part.block(i))
        for (Vertex t : part.block(j)) best = std::min(best, inst(s, t));
      CHECK(meta.costs(i, j) == best);
      CHECK(inst(meta.witness(i, j).from, meta.witness(i, j).to) == best);
    }
  }
  const MetaGraph one = contract(inst, Partition(6, {{0, 1, 2, 3, 4, 5}}));
  CHECK(one.size() == 1);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(Partition(2, {{0, 1}, {}}), ValidationError);
}

TEST_CASE("minor optimum is at most the instance optimum") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const Instance inst = gen_random_metric(n, seed, Ratio(1, 2));
    const Partition part(n, oracle::random_blocks(n, 2 + static_cast<int>(seed % 3), seed));
    CHECK(oracle::tsp_optimum(contract(inst, part).costs) <= oracle::tsp_optimum(inst.costs()));
  }
}

TEST_CASE("polygon completion") {
  const Instance complete = gen_random_metric(5, 2, Ratio(1, 2));
  PartialGraph pg(5);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v) pg.add_edge(u, v, complete(u, v));
  CHECK(polygon_complete(pg) == complete);

  PartialGraph cycle(3);
  cycle.add_edge(0, 1, 1);
  cycle.add_edge(1, 2, 1);
  cycle.add_edge(2, 0, 1);
  Instance closed = polygon_complete(cycle);
  CHECK(closed(1, 0) == 2);
  CHECK(check_metric(closed).empty());

  PartialGraph broken(3);
  broken.add_edge(0, 1, 1);
  broken.add_edge(1, 2, 1);
  broken.add_edge(0, 2, 5);
  broken.add_edge(2, 0, 1);
  CHECK_THROWS_AS(polygon_complete(broken), ValidationError);

  PartialGraph disconnected(3);
  disconnected.add_edge(0, 1, 1);
  disconnected.add_edge(1, 0, 1);
  CHECK_THROWS_AS(polygon_complete(disconnected), ValidationError);
}

TEST_CASE("polygon completion keeps edge costs and cheapest paths") {
  const GkInstance g = gen_gk(7);
  for (const auto& [e, cost] : g.partial.edges()) CHECK(g.instance(e.from, e.to) == cost);
  // shortest paths over the partial graph are unchanged by completion
  CostMatrix raw = CostMatrix::Constant(14, 14, std::numeric_limits<Cost>::max());
  raw.diagonal().setZero();
  for (const auto& [e, cost] : g.partial.edges()) raw(e.from, e.to) = cost;
  CHECK(floyd_warshall(raw) == floyd_warshall(g.instance.costs()));
  CHECK(tour_cost(g.instance, held_karp(g.instance)) == 14);
}
