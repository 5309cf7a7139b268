#include "asymtsp/generators.hpp"
#include "asymtsp/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace asymtsp;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitValidation = 4;

std::vector<Ratio> parse_ratio_list(const std::string& text) {
  std::vector<Ratio> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty()) out.push_back(Ratio::parse(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<Vertex> parse_root(const std::string& text) {
  if (text == "best") return std::nullopt;
  return std::stoi(text);
}

std::optional<Ratio> parse_zero_substitute(const std::string& text) {
  if (text == "none") return std::nullopt;
  return Ratio::parse(text);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

Instance load_instance(const std::string& path, bool closure) {
  Instance raw = read_tsplib(path);
  if (!closure) return raw;
  return metric_closure(raw).renamed(raw.name());
}

OptimaRegistry load_registry(const std::string& path) {
  if (path == "none") return {};
  if (path.empty()) {
    try {
      return OptimaRegistry::load_default();
    } catch (const ParseError&) {
      return {};
    }
  }
  return OptimaRegistry::load(path);
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * fraction);
  return buf;
}

// Small randomized cross-checks of the exact solvers and the ratio bounds.
int oracle_check(int seeds, int max_n) {
  int failures = 0;
  for (int s = 0; s < seeds; ++s) {
    const int n = 3 + s % std::max(1, max_n - 2);
    const Ratio strength = std::array{Ratio(0), Ratio(1, 5), Ratio(1, 2)}[s % 3];
    const Instance inst = gen_random_metric(n, static_cast<std::uint64_t>(s), strength);
    const Cost opt = tour_cost(inst, brute_force_tour(inst));
    const Cost hk = tour_cost(inst, held_karp(inst));
    GCOptions gc;
    const Cost gc_cost = gc_solve(inst, gc).tour_cost;
    GTDOptions gtd;
    const Cost gtd_cost = gtd_solve(inst, gtd).tour_cost;
    const bool ok = hk == opt && at_most_times(gc_cost, Ratio(5, 2), opt) && at_most_times(gtd_cost, Ratio(3), opt);
    if (!ok) {
      ++failures;
      std::cout << "FAIL " << inst.name() << " opt=" << opt << " hk=" << hk << " gc=" << gc_cost
                << " gtd=" << gtd_cost << "\n";
    }
  }
  std::cout << seeds << " instances checked, " << failures << " failures\n";
  return failures == 0 ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation algorithms for metric asymmetric TSP"};
  app.require_subcommand(1);

  std::string zero_sub = "1/10";
  app.add_option("--zero-substitute", zero_sub, "Cost used for zeros in asymmetry factors, or 'none'");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Asymmetry statistics of the metric closures");
  std::vector<std::string> analyze_files;
  analyze->add_option("files", analyze_files)->required()->check(CLI::ExistingFile);

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on one instance");
  std::string solve_file, alg = "gc", fraction_text, beta_text, root_text = "0", format = "csv", tour_out,
                          registry_path, cover = "exact";
  int kernel_limit = kDefaultHeldKarpLimit;
  int exact_limit = 16;
  bool timing = false;
  bool no_closure = false;
  solve->add_option("file", solve_file)->required()->check(CLI::ExistingFile);
  solve->add_option("--alg", alg, "gc or gtd")->check(CLI::IsMember({"gc", "gtd", "gen-christofides", "gen-treedouble"}));
  auto* frac_opt = solve->add_option("--fraction", fraction_text, "Share of asymmetric pairs kept asymmetric");
  solve->add_option("--beta", beta_text, "Explicit beta")->excludes(frac_opt);
  solve->add_option("--root", root_text, "MSA root for gtd, or 'best'");
  solve->add_option("--kernel-limit", kernel_limit, "Largest kernel solved by Held-Karp");
  solve->add_option("--exact-limit", exact_limit, "Largest instance given an exact reference optimum");
  solve->add_option("--cover", cover, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
  solve->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  solve->add_option("--tour-out", tour_out, "Write the tour as a TSPLIB .tour file");
  solve->add_option("--registry", registry_path, "Optima registry file, or 'none'");
  solve->add_flag("--timing", timing, "Fill wall_time_ms");
  solve->add_flag("--no-closure", no_closure, "Use the costs as given (must be metric)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Cartesian product of instances, algorithms and fractions");
  std::vector<std::string> sweep_files;
  std::string fractions_text = "1,1/4,1/16,1/64,0", algs_text = "gc,gtd", out_path;
  int threads = 0;
  bool pivot = false;
  sweep_cmd->add_option("files", sweep_files)->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--fractions", fractions_text);
  sweep_cmd->add_option("--algs", algs_text);
  sweep_cmd->add_option("--root", root_text, "MSA root for gtd, or 'best'");
  sweep_cmd->add_option("--kernel-limit", kernel_limit);
  sweep_cmd->add_option("--exact-limit", exact_limit);
  sweep_cmd->add_option("--cover", cover)->check(CLI::IsMember({"exact", "approx"}));
  sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", out_path);
  sweep_cmd->add_option("--registry", registry_path);
  sweep_cmd->add_option("--threads", threads, "Worker threads (default ASYMTSP_THREADS or all cores)");
  sweep_cmd->add_flag("--pivot", pivot, "Print instance x fraction tables instead of rows");
  sweep_cmd->add_flag("--timing", timing);
  sweep_cmd->add_flag("--no-closure", no_closure);

  // generate
  auto* generate = app.add_subcommand("generate", "Write a generated instance in TSPLIB format");
  generate->require_subcommand(1);
  std::string gen_out;
  generate->add_option("--out", gen_out);
  int gk_k = 7, cycle_m = 3, rand_n = 10;
  std::uint64_t rand_seed = 1;
  std::string strength_text = "1/5", lift_file;
  auto* gen_gk_cmd = generate->add_subcommand("gk", "Tight family for generalized Christofides");
  gen_gk_cmd->add_option("--k", gk_k)->required();
  auto* gen_cycle_cmd = generate->add_subcommand("cycle", "Tight family for the tree-doubling kernel");
  gen_cycle_cmd->add_option("--m", cycle_m)->required();
  auto* gen_random_cmd = generate->add_subcommand("random", "Random metric instance");
  gen_random_cmd->add_option("--n", rand_n)->required();
  gen_random_cmd->add_option("--seed", rand_seed);
  gen_random_cmd->add_option("--strength", strength_text);
  auto* gen_lift_cmd = generate->add_subcommand("lift", "Metric lift of an arbitrary instance");
  gen_lift_cmd->add_option("file", lift_file)->required()->check(CLI::ExistingFile);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a TSPLIB tour against an instance");
  std::string verify_instance, verify_tour;
  verify->add_option("file", verify_instance)->required()->check(CLI::ExistingFile);
  verify->add_option("tour", verify_tour)->required()->check(CLI::ExistingFile);

  // oracle-check
  auto* oracle = app.add_subcommand("oracle-check", "Randomized cross-checks against brute force");
  int oracle_seeds = 50, oracle_n = 8;
  oracle->add_option("--seeds", oracle_seeds);
  oracle->add_option("--max-n", oracle_n)->check(CLI::Range(3, kBruteForceLimit));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    const auto zsub = parse_zero_substitute(zero_sub);

    if (*analyze) {
      std::cout << "instance\tn\tmetric\tsymmetric\tmedian\tmax\tzero_cost\n";
      for (const auto& file : analyze_files) {
        Instance raw = read_tsplib(file);
        const bool metric = find_metric_violations(raw, 1).empty();
        const Instance closed = metric_closure(raw);
        const auto report = asymmetry_report(closed, zsub);
        std::cout << raw.name() << '\t' << raw.size() << '\t' << (metric ? "yes" : "no") << '\t'
                  << percent(report.symmetric_pair_fraction) << '\t'
                  << (report.median_factor ? report.median_factor->decimal(2) : "None") << '\t'
                  << (report.max_factor ? report.max_factor->decimal(2) : "None") << '\t'
                  << percent(report.zero_cost_pair_fraction) << '\n';
      }
      return 0;
    }

    if (*solve) {
      const Instance inst = load_instance(solve_file, !no_closure);
      SolveOptions options;
      options.algorithm = parse_algorithm(alg);
      if (!beta_text.empty()) options.beta = Ratio::parse(beta_text);
      options.fraction = fraction_text.empty() ? Ratio(1) : Ratio::parse(fraction_text);
      options.root = parse_root(root_text);
      options.kernel_limit = kernel_limit;
      options.cover_mode = cover == "approx" ? CoverMode::approx : CoverMode::exact;
      options.zero_substitute = zsub;
      options.timing = timing;
      const OptimaRegistry registry = load_registry(registry_path);
      const auto reference = reference_optimum(inst, &registry, exact_limit);
      const RunReport report = run_one(inst, options, reference);
      const std::vector<RunReport> rows{report};
      write_output("", format == "json" ? reports_json(rows) : reports_csv(rows));
      if (!tour_out.empty() && report.tour) write_output(tour_out, write_tsplib_tour(*report.tour, inst.name()));
      if (!report.error.empty()) {
        std::cerr << "error: " << report.error << "\n";
        return report.capacity_exceeded ? kExitCapacity : kExitValidation;
      }
      return 0;
    }

    if (*sweep_cmd) {
      std::vector<Instance> instances;
      for (const auto& file : sweep_files) instances.push_back(load_instance(file, !no_closure));
      const OptimaRegistry registry = load_registry(registry_path);
      SweepOptions options;
      options.fractions = parse_ratio_list(fractions_text);
      options.algorithms.clear();
      std::size_t start = 0;
      while (start <= algs_text.size()) {
        const auto comma = algs_text.find(',', start);
        options.algorithms.push_back(parse_algorithm(algs_text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      options.root = parse_root(root_text);
      options.kernel_limit = kernel_limit;
      options.exact_reference_limit = exact_limit;
      options.cover_mode = cover == "approx" ? CoverMode::approx : CoverMode::exact;
      options.zero_substitute = zsub;
      options.registry = &registry;
      options.timing = timing;
      options.threads = threads;
      const auto reports = sweep(instances, options);
      std::string text;
      if (pivot) {
        for (Algorithm a : options.algorithms) text += pivot_table(reports, a) + "\n";
      } else {
        text = format == "json" ? reports_json(reports) : reports_csv(reports);
      }
      write_output(out_path, text);
      for (const auto& r : reports)
        if (!r.error.empty()) std::cerr << r.instance << " " << algorithm_id(r.algorithm) << " " << r.fraction.str()
                                        << ": " << r.error << "\n";
      return 0;
    }

    if (*generate) {
      Instance inst;
      if (*gen_gk_cmd) inst = gen_gk(gk_k).instance;
      if (*gen_cycle_cmd) inst = gen_cycle_family(cycle_m).instance;
      if (*gen_random_cmd) inst = gen_random_metric(rand_n, rand_seed, Ratio::parse(strength_text));
      if (*gen_lift_cmd) inst = metric_lift(read_tsplib(lift_file)).instance;
      write_output(gen_out, write_tsplib(inst));
      return 0;
    }

    if (*verify) {
      const Instance inst = read_tsplib(verify_instance);
      std::ifstream in(verify_tour, std::ios::binary);
      const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      const Tour tour = parse_tsplib_tour(text);
      validate_tour(inst, tour);
      const Instance closed = metric_closure(inst);
      std::cout << "valid tour, cost " << tour_cost(inst, tour) << " (closure cost " << tour_cost(closed, tour)
                << ")\n";
      return 0;
    }

    if (*oracle) return oracle_check(oracle_seeds, oracle_n);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
