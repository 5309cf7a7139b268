#ifndef ASYMTSP_HARNESS_HPP
#define ASYMTSP_HARNESS_HPP

#include "asymtsp/gen_christofides.hpp"
#include "asymtsp/gen_treedouble.hpp"
#include "asymtsp/tsplib.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace asymtsp {

enum class Algorithm { gen_christofides, gen_treedouble };

std::string algorithm_id(Algorithm algorithm);
/// Accepts "gc", "gtd" and the long ids.
Algorithm parse_algorithm(std::string_view text);

struct BetaChoice {
  Ratio beta{1};
  std::size_t asymmetric_pairs = 0;
  /// pairs whose factor exceeds beta
  std::size_t selected_pairs = 0;
  double realized_fraction = 0.0;
};

/// Largest beta such that at least ceil(p * A) of the A asymmetric pairs
/// have a factor above it. p = 0 gives infinity, p = 1 gives 1.
BetaChoice beta_from_fraction(const Instance& instance, const Ratio& fraction,
                              const std::optional<Ratio>& zero_substitute = kDefaultZeroSubstitute);

/// Largest asymmetry factor of the instance (1 when symmetric, infinity when
/// a zero cost is paired with a positive one and no substitute is given).
Ratio max_asymmetry(const Instance& instance, const std::optional<Ratio>& zero_substitute);

/// Worst-case ratio of the algorithm at the given beta.
Ratio theoretical_bound(Algorithm algorithm, const Ratio& beta);

struct RunReport {
  std::string instance;
  Algorithm algorithm = Algorithm::gen_christofides;
  Ratio fraction{1};
  Ratio beta{1};
  double realized_fraction = 0.0;
  int kernel_size = 0;
  int parameter = 0;
  std::optional<Cost> tour_cost;
  std::optional<Cost> reference;
  std::string ref_source;
  std::optional<double> wall_time_ms;
  std::optional<std::uint64_t> seed;
  std::string root;
  std::string error;
  bool capacity_exceeded = false;
  std::optional<Tour> tour;

  /// tour_cost / reference, rendered with 4 decimals; empty without a reference
  std::string ratio_text() const;
};

struct SolveOptions {
  Algorithm algorithm = Algorithm::gen_christofides;
  std::optional<Ratio> fraction;
  std::optional<Ratio> beta;
  /// gtd only; empty means best over all roots
  std::optional<Vertex> root = 0;
  int kernel_limit = kDefaultHeldKarpLimit;
  CoverMode cover_mode = CoverMode::exact;
  std::optional<Ratio> zero_substitute = kDefaultZeroSubstitute;
  bool timing = false;
};

/// One experiment cell. Capacity and validation failures are recorded in
/// `error` rather than thrown.
RunReport run_one(const Instance& instance, const SolveOptions& options,
                  const std::optional<ReferenceOptimum>& reference = std::nullopt,
                  std::optional<std::uint64_t> seed = std::nullopt);

struct SweepOptions {
  std::vector<Ratio> fractions{Ratio(1), Ratio(1, 4), Ratio(1, 16), Ratio(1, 64), Ratio(0)};
  std::vector<Algorithm> algorithms{Algorithm::gen_christofides, Algorithm::gen_treedouble};
  std::optional<Vertex> root = 0;
  int kernel_limit = kDefaultHeldKarpLimit;
  CoverMode cover_mode = CoverMode::exact;
  std::optional<Ratio> zero_substitute = kDefaultZeroSubstitute;
  const OptimaRegistry* registry = nullptr;
  /// instances up to this size get an exact reference optimum
  int exact_reference_limit = 16;
  bool timing = false;
  /// 0 = ASYMTSP_THREADS or the hardware concurrency
  int threads = 0;
  std::vector<std::optional<std::uint64_t>> seeds;
};

/// Threads to use: ASYMTSP_THREADS when set, else the hardware concurrency.
int worker_count(int requested);

/// Every (instance, algorithm, fraction) cell, sorted by instance,
/// algorithm and descending fraction.
std::vector<RunReport> sweep(const std::vector<Instance>& instances, const SweepOptions& options);

void sort_reports(std::vector<RunReport>& reports);

std::string reports_csv(const std::vector<RunReport>& reports);
std::string reports_json(const std::vector<RunReport>& reports);
/// Reads back what reports_csv wrote.
std::vector<RunReport> parse_reports_csv(std::string_view text);

/// Instance x fraction table of "kernel/ratio" cells for one algorithm.
std::string pivot_table(const std::vector<RunReport>& reports, Algorithm algorithm);

}  // namespace asymtsp

#endif
