#include "asymtsp/exact.hpp"
#include "asymtsp/gen_treedouble.hpp"
#include "asymtsp/generators.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace asymtsp;

TEST_CASE("adjusted tree doubling on a path") {
  TreeComponent path;
  path.vertices = {0, 1, 2};
  path.edges = {Edge{0, 1}, Edge{1, 2}};
  CHECK(adjusted_tree_doubling(path, 0, 2) == std::vector<Vertex>{0, 1, 2});
  CHECK(adjusted_tree_doubling(path, 1, 1).front() == 1);
  CHECK(adjusted_tree_doubling(path, 1, 1).size() == 3);
  const auto mid = adjusted_tree_doubling(path, 0, 1);
  CHECK(mid.front() == 0);
  CHECK(mid.back() == 1);
  CHECK(mid.size() == 3);

  TreeComponent single;
  single.vertices = {4};
  CHECK(adjusted_tree_doubling(single, 4, 4) == std::vector<Vertex>{4});
}

TEST_CASE("tree doubling within 2 + beta") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const Instance inst = gen_random_metric(n, seed, Ratio(1, 2));
    GTDOptions opt;
    opt.beta = Ratio(1) + Ratio(static_cast<std::int64_t>(seed % 4), 8);
    opt.root = seed % 2 ? std::optional<Vertex>() : std::optional<Vertex>(0);
    const GTDResult r = gtd_solve(inst, opt);
    validate_tour(inst, r.tour);
    CHECK(r.tour_cost == tour_cost(inst, r.tour));
    CHECK(at_most_times(r.tour_cost, Ratio(2) + opt.beta, oracle::tsp_optimum(inst.costs())));
  }
}

TEST_CASE("symmetric instances stay within 2") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = gen_random_metric(7, seed, Ratio(0));
    const GTDResult r = gtd_solve(inst, GTDOptions{});
    CHECK(r.plan.parameter_k == 0);
    CHECK(at_most_times(r.tour_cost, Ratio(2), oracle::tsp_optimum(inst.costs())));
  }
}

TEST_CASE("cycle family lift costs 6m - 4") {
  for (int m = 2; m <= 12; ++m) {
    const CycleFamily cf = gen_cycle_family(m);
    const GTDKernel kernel = gtd_kernelize(cf.instance, cf.arborescence, Ratio(1), cf.representatives);
    CHECK(kernel.parameter_k == 1);
    CHECK(kernel.representatives.size() == 2);
    const Tour kt = held_karp(kernel.kernel_instance);
    const Tour lifted = gtd_lift(cf.instance, kernel, kt);
    validate_tour(cf.instance, lifted);
    CHECK(tour_cost(cf.instance, lifted) == 6 * m - 4);
    CHECK(tour_cost(cf.instance, cf.optimal_tour) == 2 * m);
  }
}

TEST_CASE("representatives must hit every component") {
  const CycleFamily cf = gen_cycle_family(4);
  CHECK_THROWS_AS(gtd_kernelize(cf.instance, cf.arborescence, Ratio(1), std::vector<Vertex>{0, 1}), ValidationError);
}

TEST_CASE("infinite beta keeps a single component") {
  const Instance inst = gen_random_metric(8, 3, Ratio(2));
  GTDOptions opt;
  opt.beta = Ratio::infinity();
  const GTDResult r = gtd_solve(inst, opt);
  CHECK(r.plan.parameter_k == 0);
  CHECK(r.plan.forest.components.size() == 1);
}

TEST_CASE("singleton components") {
  const Instance inst = gen_random_metric(6, 8, Ratio(3));
  GTDOptions opt;
  opt.beta = Ratio(1);
  const GTDResult r = gtd_solve(inst, opt);
  validate_tour(inst, r.tour);
  std::size_t covered = 0;
  for (const auto& comp : r.plan.forest.components) covered += comp.vertices.size();
  CHECK(covered == 6);
  CHECK(static_cast<int>(r.plan.forest.components.size()) == r.plan.parameter_k + 1);
}
