#include "asymtsp/generators.hpp"
#include "asymtsp/metric.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace asymtsp;

namespace {

Instance from_rows(std::initializer_list<std::initializer_list<Cost>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  CostMatrix c(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Cost v : row) c(i, j++) = v;
    ++i;
  }
  return Instance(c);
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance(CostMatrix::Zero(2, 3)), ValidationError);
  CostMatrix neg = CostMatrix::Zero(2, 2);
  neg(0, 1) = -1;
  CHECK_THROWS_AS(Instance{neg}, ValidationError);
  CostMatrix diag = CostMatrix::Ones(2, 2);
  CHECK_THROWS_AS(Instance{diag}, ValidationError);
}

TEST_CASE("tour_cost on fixed instances") {
  const Instance uniform = from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(tour_cost(uniform, Tour{{0, 1, 2}}) == 3);
  const Instance single(CostMatrix::Zero(1, 1));
  CHECK(tour_cost(single, Tour{{0}}) == 0);
  CHECK_THROWS_AS(tour_cost(uniform, Tour{{0, 1}}), ValidationError);
  CHECK_THROWS_AS(tour_cost(uniform, Tour{{0, 1, 1}}), ValidationError);
}

TEST_CASE("tour_cost matches a reverse accumulation and is rotation invariant") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = gen_random_instance(6, seed);
    Tour t{{3, 1, 5, 0, 2, 4}};
    Cost reverse = 0;
    for (int i = 5; i >= 0; --i) reverse += inst.costs()(t.order[i], t.order[(i + 1) % 6]);
    CHECK(tour_cost(inst, t) == reverse);
    Tour rotated{{5, 0, 2, 4, 3, 1}};
    CHECK(tour_cost(inst, rotated) == tour_cost(inst, t));
  }
}

TEST_CASE("check_metric finds forced violations") {
  Instance bad = from_rows({{0, 1, 10}, {1, 0, 1}, {1, 1, 0}});
  const auto violations = check_metric(bad);
  REQUIRE_FALSE(violations.empty());
  CHECK(std::find(violations.begin(), violations.end(), std::array<Vertex, 3>{0, 1, 2}) != violations.end());
  CHECK(bad.metric_state() == MetricState::violating);
  Instance closed = metric_closure(bad);
  CHECK(check_metric(closed).empty());
}

TEST_CASE("asymmetry factor") {
  CHECK(*asymmetry_factor(3, 3, std::nullopt) == Ratio(1));
  CHECK(*asymmetry_factor(2, 5, std::nullopt) == Ratio(5, 2));
  CHECK(*asymmetry_factor(5, 2, std::nullopt) == Ratio(5, 2));
  CHECK_FALSE(asymmetry_factor(0, 4, std::nullopt).has_value());
  CHECK(*asymmetry_factor(0, 4, Ratio(1, 10)) == Ratio(40));
  CHECK(*asymmetry_factor(0, 0, std::nullopt) == Ratio(1));
}

TEST_CASE("asymmetry report on symmetric and directed instances") {
  const Instance sym = gen_random_metric(8, 3, Ratio(0));
  const auto r = asymmetry_report(sym);
  CHECK(r.symmetric_pair_fraction == doctest::Approx(1.0));
  CHECK_FALSE(r.median_factor.has_value());
  CHECK_FALSE(r.max_factor.has_value());

  const Instance inst = from_rows({{0, 1, 4}, {2, 0, 3}, {4, 3, 0}});
  const auto a = asymmetry_report(inst);
  CHECK(a.pair_count == 3);
  CHECK(a.symmetric_pair_fraction == doctest::Approx(2.0 / 3.0));
  REQUIRE(a.max_factor.has_value());
  CHECK(*a.max_factor == Ratio(2));
  CHECK(*a.median_factor == Ratio(2));
}

TEST_CASE("asymmetry report is invariant under transposition") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_random_instance(7, seed, 9);
    const auto a = asymmetry_report(inst, kDefaultZeroSubstitute);
    const auto b = asymmetry_report(inst.transposed(), kDefaultZeroSubstitute);
    CHECK(a.symmetric_pair_fraction == b.symmetric_pair_fraction);
    CHECK(a.median_factor == b.median_factor);
    CHECK(a.max_factor == b.max_factor);
    CHECK(a.zero_cost_pair_fraction == b.zero_cost_pair_fraction);
  }
}

TEST_CASE("beta asymmetric pairs") {
  const Instance inst = gen_random_metric(9, 11, Ratio(1, 2));
  const auto all = beta_asymmetric_pairs(inst, Ratio(1), std::nullopt);
  std::size_t unequal = 0;
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) unequal += inst(u, v) != inst(v, u);
  CHECK(all.size() == unequal);
  CHECK(beta_asymmetric_pairs(inst, Ratio::infinity(), std::nullopt).empty());

  const auto report = asymmetry_report(inst);
  REQUIRE(report.max_factor.has_value());
  CHECK(beta_asymmetric_pairs(inst, *report.max_factor, std::nullopt).empty());

  // antitone in beta
  std::size_t previous = all.size();
  for (const Ratio& beta : {Ratio(11, 10), Ratio(6, 5), Ratio(3, 2), Ratio(2)}) {
    const auto pairs = beta_asymmetric_pairs(inst, beta, std::nullopt);
    CHECK(pairs.size() <= previous);
    for (const auto& p : pairs) CHECK(std::find(all.begin(), all.end(), p) != all.end());
    previous = pairs.size();
  }
}

TEST_CASE("Ratio arithmetic and parsing") {
  CHECK(Ratio(2, 4) == Ratio(1, 2));
  CHECK(Ratio::parse("1.25") == Ratio(5, 4));
  CHECK(Ratio::parse("3/6") == Ratio(1, 2));
  CHECK(Ratio::parse("inf").is_infinite());
  CHECK(Ratio(1, 3).decimal(4) == "0.3333");
  CHECK(Ratio(2, 3).decimal(2) == "0.67");
  CHECK(Ratio(7, 4) + Ratio(3, 4) == Ratio(5, 2));
  CHECK(Ratio(3, 2) < Ratio::infinity());
  CHECK(at_most_times(5, Ratio(5, 2), 2));
  CHECK_FALSE(at_most_times(6, Ratio(5, 2), 2));
}
