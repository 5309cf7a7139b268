#include "asymtsp/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace asymtsp {

namespace {

std::vector<Ratio> asymmetric_factors(const Instance& instance, const std::optional<Ratio>& zero_substitute) {
  std::vector<Ratio> factors;
  const int n = instance.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Cost a = instance(u, v);
      const Cost b = instance(v, u);
      if (a == b) continue;
      const auto f = asymmetry_factor(a, b, zero_substitute);
      factors.push_back(f ? *f : Ratio::infinity());
    }
  }
  return factors;
}

std::string root_label(const std::optional<Vertex>& root) { return root ? std::to_string(*root) : "best"; }

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  for (char c : line) {
    if (c == ',')
      fields.emplace_back();
    else if (c != '\r')
      fields.back() += c;
  }
  return fields;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {"instance",  "algorithm", "fraction", "beta",
                                                   "kernel_size", "tour_cost", "reference", "ref_source",
                                                   "ratio",     "wall_time_ms", "seed",   "root"};
  return columns;
}

}  // namespace

std::string algorithm_id(Algorithm algorithm) {
  return algorithm == Algorithm::gen_christofides ? "gen-christofides" : "gen-treedouble";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "gc" || text == "gen-christofides") return Algorithm::gen_christofides;
  if (text == "gtd" || text == "gen-treedouble") return Algorithm::gen_treedouble;
  throw ValidationError("unknown algorithm '" + std::string(text) + "'");
}

BetaChoice beta_from_fraction(const Instance& instance, const Ratio& fraction,
                              const std::optional<Ratio>& zero_substitute) {
  if (fraction.is_infinite() || fraction > Ratio(1)) throw ValidationError("fraction must lie in [0, 1]");
  auto factors = asymmetric_factors(instance, zero_substitute);
  std::sort(factors.begin(), factors.end(), std::greater<>());
  BetaChoice choice;
  choice.asymmetric_pairs = factors.size();
  const auto total = static_cast<std::int64_t>(factors.size());
  // t = ceil(p * A)
  const auto wanted = static_cast<std::int64_t>(
      (static_cast<__int128>(fraction.num()) * total + fraction.den() - 1) / fraction.den());
  if (wanted == 0) {
    choice.beta = Ratio::infinity();
  } else {
    const Ratio threshold = factors[static_cast<std::size_t>(wanted - 1)];
    choice.beta = Ratio(1);
    for (const Ratio& f : factors) {
      if (f < threshold) {
        choice.beta = std::max(choice.beta, f);
        break;
      }
    }
  }
  choice.selected_pairs = static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [&](const Ratio& f) { return f > choice.beta; }));
  choice.realized_fraction = total ? static_cast<double>(choice.selected_pairs) / static_cast<double>(total) : 0.0;
  return choice;
}

Ratio max_asymmetry(const Instance& instance, const std::optional<Ratio>& zero_substitute) {
  Ratio best(1);
  for (const Ratio& f : asymmetric_factors(instance, zero_substitute)) best = std::max(best, f);
  return best;
}

Ratio theoretical_bound(Algorithm algorithm, const Ratio& beta) {
  if (algorithm == Algorithm::gen_christofides) return Ratio(1) + Ratio(3, 4) * (Ratio(1) + beta);
  return Ratio(2) + beta;
}

std::string RunReport::ratio_text() const {
  if (!reference || !tour_cost || *reference <= 0) return {};
  return Ratio(*tour_cost, *reference).decimal(4);
}

RunReport run_one(const Instance& instance, const SolveOptions& options,
                  const std::optional<ReferenceOptimum>& reference, std::optional<std::uint64_t> seed) {
  RunReport report;
  report.instance = instance.name();
  report.algorithm = options.algorithm;
  report.seed = seed;
  report.root = options.algorithm == Algorithm::gen_treedouble ? root_label(options.root) : "";
  if (reference) {
    report.reference = reference->cost;
    report.ref_source = reference->source;
  }
  const auto started = std::chrono::steady_clock::now();
  try {
    if (options.beta) {
      report.beta = *options.beta;
      const auto pairs = beta_asymmetric_pairs(instance, report.beta, options.zero_substitute);
      const auto all = beta_asymmetric_pairs(instance, Ratio(1), options.zero_substitute);
      report.fraction = all.empty() ? Ratio(0) : Ratio(static_cast<std::int64_t>(pairs.size()),
                                                       static_cast<std::int64_t>(all.size()));
      report.realized_fraction = report.fraction.to_double();
    } else {
      report.fraction = options.fraction.value_or(Ratio(1));
      const auto choice = beta_from_fraction(instance, report.fraction, options.zero_substitute);
      report.beta = choice.beta;
      report.realized_fraction = choice.realized_fraction;
    }
    if (options.algorithm == Algorithm::gen_christofides) {
      GCOptions gc;
      gc.beta = report.beta;
      gc.cover_mode = options.cover_mode;
      gc.kernel_limit = options.kernel_limit;
      gc.zero_substitute = options.zero_substitute;
      // the kernel size is known before the exact solve, so report it on failure too
      const GCKernel kernel = gc_kernelize(instance, gc);
      report.parameter = kernel.parameter_z;
      report.kernel_size = kernel.parameter_z == 0 ? 0 : kernel.kernel_instance.size();
      if (kernel.kernel_instance.size() > options.kernel_limit)
        throw CapacityError("kernel has " + std::to_string(kernel.kernel_instance.size()) +
                            " vertices, Held-Karp limit is " + std::to_string(options.kernel_limit));
      const Tour kernel_tour = held_karp(kernel.kernel_instance, options.kernel_limit);
      report.tour = gc_lift(instance, kernel, kernel_tour);
    } else {
      GTDOptions gtd;
      gtd.beta = report.beta;
      gtd.root = options.root;
      gtd.kernel_limit = options.kernel_limit;
      gtd.zero_substitute = options.zero_substitute;
      try {
        const GTDResult result = gtd_solve(instance, gtd);
        report.parameter = result.plan.parameter_k;
        report.tour = result.tour;
      } catch (const CapacityError&) {
        const Arborescence arb = options.root ? msa(instance, *options.root) : msa_best_root(instance);
        report.parameter = static_cast<int>(one_way_edges(instance, arb, report.beta, options.zero_substitute).size());
        report.kernel_size = report.parameter + 1;
        throw;
      }
      report.kernel_size = report.parameter == 0 ? 0 : report.parameter + 1;
    }
    validate_tour(instance, *report.tour);
    report.tour_cost = tour_cost(instance, *report.tour);
  } catch (const Error& e) {
    report.error = e.what();
    report.capacity_exceeded = dynamic_cast<const CapacityError*>(&e) != nullptr;
    report.tour.reset();
    report.tour_cost.reset();
  }
  if (options.timing)
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("ASYMTSP_THREADS"); env && *env) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return hw;
}

void sort_reports(std::vector<RunReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const RunReport& a, const RunReport& b) {
    if (a.instance != b.instance) return a.instance < b.instance;
    if (a.algorithm != b.algorithm) return algorithm_id(a.algorithm) < algorithm_id(b.algorithm);
    return a.fraction > b.fraction;
  });
}

std::vector<RunReport> sweep(const std::vector<Instance>& instances, const SweepOptions& options) {
  struct Task {
    std::size_t instance;
    Algorithm algorithm;
    Ratio fraction;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (Algorithm a : options.algorithms)
      for (const Ratio& p : options.fractions) tasks.push_back(Task{i, a, p});

  const int threads = std::max(1, std::min<int>(worker_count(options.threads), static_cast<int>(tasks.size())));
  std::vector<std::optional<ReferenceOptimum>> references(instances.size());
  std::vector<RunReport> reports(tasks.size());
  {
    std::atomic<std::size_t> next{0};
    auto reference_worker = [&] {
      for (std::size_t i; (i = next++) < instances.size();)
        references[i] = reference_optimum(instances[i], options.registry, options.exact_reference_limit);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(reference_worker);
    reference_worker();
    for (auto& th : pool) th.join();
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      const Task& task = tasks[i];
      SolveOptions solve;
      solve.algorithm = task.algorithm;
      solve.fraction = task.fraction;
      solve.root = options.root;
      solve.kernel_limit = options.kernel_limit;
      solve.cover_mode = options.cover_mode;
      solve.zero_substitute = options.zero_substitute;
      solve.timing = options.timing;
      const auto seed = task.instance < options.seeds.size() ? options.seeds[task.instance] : std::nullopt;
      reports[i] = run_one(instances[task.instance], solve, references[task.instance], seed);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  sort_reports(reports);
  return reports;
}

std::string reports_csv(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  const auto& columns = csv_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& r : reports) {
    out << r.instance << ',' << algorithm_id(r.algorithm) << ',' << r.fraction.str() << ',' << r.beta.str() << ','
        << r.kernel_size << ',' << (r.tour_cost ? std::to_string(*r.tour_cost) : "") << ','
        << (r.reference ? std::to_string(*r.reference) : "") << ',' << r.ref_source << ',' << r.ratio_text() << ',';
    if (r.wall_time_ms) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(3);
      t << *r.wall_time_ms;
      out << t.str();
    }
    out << ',' << (r.seed ? std::to_string(*r.seed) : "") << ',' << r.root << '\n';
  }
  return out.str();
}

std::string reports_json(const std::vector<RunReport>& reports) {
  auto rows = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json row;
    row["instance"] = r.instance;
    row["algorithm"] = algorithm_id(r.algorithm);
    row["fraction"] = r.fraction.str();
    row["realized_fraction"] = r.realized_fraction;
    row["beta"] = r.beta.str();
    row["kernel_size"] = r.kernel_size;
    row["parameter"] = r.parameter;
    row["tour_cost"] = r.tour_cost ? nlohmann::json(*r.tour_cost) : nlohmann::json(nullptr);
    row["reference"] = r.reference ? nlohmann::json(*r.reference) : nlohmann::json(nullptr);
    row["ref_source"] = r.ref_source;
    const auto ratio = r.ratio_text();
    row["ratio"] = ratio.empty() ? nlohmann::json(nullptr) : nlohmann::json(ratio);
    row["wall_time_ms"] = r.wall_time_ms ? nlohmann::json(*r.wall_time_ms) : nlohmann::json(nullptr);
    row["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    row["root"] = r.root;
    row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

std::vector<RunReport> parse_reports_csv(std::string_view text) {
  std::vector<RunReport> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != csv_columns())
    throw ParseError("report CSV header does not match", 1);
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != csv_columns().size()) throw ParseError("wrong number of report fields", number);
    try {
      RunReport r;
      r.instance = f[0];
      r.algorithm = parse_algorithm(f[1]);
      r.fraction = Ratio::parse(f[2]);
      r.beta = Ratio::parse(f[3]);
      r.kernel_size = std::stoi(f[4]);
      if (!f[5].empty()) r.tour_cost = std::stoll(f[5]);
      if (!f[6].empty()) r.reference = std::stoll(f[6]);
      r.ref_source = f[7];
      if (!f[9].empty()) r.wall_time_ms = std::stod(f[9]);
      if (!f[10].empty()) r.seed = std::stoull(f[10]);
      r.root = f[11];
      out.push_back(std::move(r));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), number);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), number);
    }
  }
  return out;
}

std::string pivot_table(const std::vector<RunReport>& reports, Algorithm algorithm) {
  std::set<Ratio, std::greater<>> fractions;
  std::map<std::string, std::map<Ratio, std::string, std::greater<>>> cells;
  for (const auto& r : reports) {
    if (r.algorithm != algorithm) continue;
    fractions.insert(r.fraction);
    std::string cell;
    if (r.tour_cost) {
      const auto ratio = r.ratio_text();
      cell = std::to_string(r.kernel_size) + "/" + (ratio.empty() ? std::to_string(*r.tour_cost) : ratio.substr(0, 4));
    } else {
      cell = std::to_string(r.kernel_size) + "/-";
    }
    cells[r.instance][r.fraction] = cell;
  }
  std::ostringstream out;
  out << algorithm_id(algorithm);
  for (const Ratio& p : fractions) out << '\t' << (p * Ratio(100)).decimal(2) << '%';
  out << '\n';
  for (const auto& [name, row] : cells) {
    out << name;
    for (const Ratio& p : fractions) {
      auto it = row.find(p);
      out << '\t' << (it == row.end() ? "" : it->second);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace asymtsp
