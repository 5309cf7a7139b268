#include "asymtsp/exact.hpp"
#include "asymtsp/generators.hpp"
#include "asymtsp/metric.hpp"

#include <doctest.h>

using namespace asymtsp;

TEST_CASE("random generators are deterministic") {
  CHECK(gen_random_metric(12, 7, Ratio(1, 2)) == gen_random_metric(12, 7, Ratio(1, 2)));
  CHECK_FALSE(gen_random_metric(12, 7, Ratio(1, 2)) == gen_random_metric(12, 8, Ratio(1, 2)));
  CHECK(gen_random_instance(9, 3) == gen_random_instance(9, 3));
  CHECK(gen_random_metric(5, 2, Ratio(1, 4)).name() == "rand5_s2_a0.25");
}

TEST_CASE("random metric instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance sym = gen_random_metric(10, seed, Ratio(0));
    CHECK(sym.costs() == sym.costs().transpose());
    CHECK(check_metric(sym).empty());
    Instance asym = gen_random_metric(10, seed, Ratio(1));
    CHECK(check_metric(asym).empty());
    CHECK((asym.costs().array() >= 0).all());
  }
}

TEST_CASE("G_k shape") {
  const GkInstance g = gen_gk(3);
  CHECK(g.instance.size() == 6);
  CHECK(g.gray_cover == std::vector<Vertex>{0, 1, 2});
  CHECK(g.instance(0, 3) == 1);
  CHECK(g.instance(3, 0) == 2);
  CHECK(g.instance(3, 1) == 1);
  CHECK(g.instance(1, 3) == 1);
  CHECK(tour_cost(g.instance, g.optimal_tour) == 6);
  CHECK(tour_cost(g.instance, held_karp(g.instance)) == 6);
  CHECK_THROWS_AS(gen_gk(2), ValidationError);
  for (int k = 3; k <= 9; ++k) {
    const GkInstance h = gen_gk(k);
    for (int u = 0; u < 2 * k; ++u)
      for (int v = u + 1; v < 2 * k; ++v) {
        const bool gray_black = (u < k) != (v < k);
        if (h.instance(u, v) != h.instance(v, u)) CHECK(gray_black);
      }
  }
}

TEST_CASE("cycle family shape") {
  const CycleFamily cf = gen_cycle_family(3);
  CHECK(cf.instance.size() == 6);
  CHECK(cf.instance(2, 3) == 1);
  CHECK(cf.instance(3, 2) > 1);
  CHECK(cf.instance(5, 0) == 1);
  CHECK(cf.representatives == std::vector<Vertex>{2, 5});
  CHECK(tour_cost(cf.instance, cf.optimal_tour) == 6);
  CHECK(cf.arborescence.total_cost == 5);
}

TEST_CASE("metric lift contracts back to its source") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const Instance g = gen_random_instance(n, seed, 20);
    const MetricLift lift = metric_lift(g);
    CHECK(lift.instance.size() == n * (n - 1));
    Instance lifted = lift.instance;
    CHECK(check_metric(lifted).empty());
    const MetaGraph meta = contract(lift.instance, lift.blocks);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) CHECK(meta.costs(u, v) == g(u, v));
  }
}
