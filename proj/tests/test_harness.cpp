#include "asymtsp/generators.hpp"
#include "asymtsp/harness.hpp"

#include <doctest.h>

using namespace asymtsp;

TEST_CASE("algorithm ids") {
  CHECK(parse_algorithm("gc") == Algorithm::gen_christofides);
  CHECK(parse_algorithm("gtd") == Algorithm::gen_treedouble);
  CHECK(parse_algorithm(algorithm_id(Algorithm::gen_treedouble)) == Algorithm::gen_treedouble);
  CHECK_THROWS(parse_algorithm("nope"));
}

TEST_CASE("beta from fraction") {
  const Instance inst = gen_random_metric(12, 5, Ratio(1));
  const BetaChoice all = beta_from_fraction(inst, Ratio(1));
  CHECK(all.beta == Ratio(1));
  CHECK(all.selected_pairs == all.asymmetric_pairs);
  CHECK(beta_from_fraction(inst, Ratio(0)).beta.is_infinite());
  CHECK(beta_from_fraction(inst, Ratio(0)).selected_pairs == 0);

  Ratio previous = Ratio(1);
  for (const Ratio& p : {Ratio(3, 4), Ratio(1, 2), Ratio(1, 4), Ratio(1, 16)}) {
    const BetaChoice c = beta_from_fraction(inst, p);
    CHECK(previous <= c.beta);
    CHECK(c.realized_fraction + 1e-12 >= p.to_double());
    previous = c.beta;
  }

  const Instance sym = gen_random_metric(8, 5, Ratio(0));
  CHECK(beta_from_fraction(sym, Ratio(1, 2)).asymmetric_pairs == 0);
  CHECK(beta_from_fraction(sym, Ratio(1, 2)).beta.is_infinite());
}

TEST_CASE("theoretical bounds") {
  CHECK(theoretical_bound(Algorithm::gen_christofides, Ratio(1)) == Ratio(5, 2));
  CHECK(theoretical_bound(Algorithm::gen_treedouble, Ratio(1)) == Ratio(3));
  CHECK(max_asymmetry(gen_random_metric(6, 1, Ratio(0)), std::nullopt) == Ratio(1));
}

TEST_CASE("empty sweep and header-only csv") {
  const auto reports = sweep({}, SweepOptions{});
  CHECK(reports.empty());
  const std::string csv = reports_csv(reports);
  CHECK(csv.rfind("instance,algorithm,fraction,beta,kernel_size,tour_cost,reference,ref_source,ratio", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
  CHECK(parse_reports_csv(csv).empty());
}

TEST_CASE("sweep csv round trip and determinism") {
  std::vector<Instance> instances;
  for (std::uint64_t seed = 0; seed < 3; ++seed) instances.push_back(gen_random_metric(9, seed, Ratio(1, 2)));
  SweepOptions opt;
  opt.threads = 1;
  const auto reports = sweep(instances, opt);
  CHECK(reports.size() == 3 * 2 * 5);
  for (const auto& r : reports) {
    CHECK(r.error.empty());
    REQUIRE(r.tour_cost.has_value());
    REQUIRE(r.reference.has_value());
    CHECK(r.ref_source == "exact");
    CHECK(at_most_times(*r.tour_cost, theoretical_bound(r.algorithm, r.beta), *r.reference));
    if (r.fraction == Ratio(0)) CHECK(r.kernel_size == 0);
  }
  const std::string csv = reports_csv(reports);
  CHECK(reports_csv(parse_reports_csv(csv)) == csv);
  opt.threads = 3;
  CHECK(reports_csv(sweep(instances, opt)) == csv);
  CHECK(reports_json(reports).find("\"instance\"") != std::string::npos);

  const std::string table = pivot_table(reports, Algorithm::gen_treedouble);
  for (const auto& inst : instances) CHECK(table.find(inst.name()) != std::string::npos);
}
