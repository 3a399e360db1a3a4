#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "common.hpp"
#include "frechet/approx.hpp"
#include "frechet/errors.hpp"
#include "frechet/oracle_1d.hpp"
#include "frechet/random_curves.hpp"
#include "frechet/reference.hpp"

namespace frechet::cli {
namespace {

constexpr const char* kCsvHeader = "algorithm,n,m,phase,time_ms,probes";

struct BenchOptions {
  std::string algorithm;
  std::string n_grid;
  std::string m_grid = "64";
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::string out_path;
  double eps = 0.1;
  std::size_t dim = 2;
  std::string norm = "l2";
  std::string match = "continuous";
  std::size_t queries = 20;
};

struct Row {
  std::string phase;
  std::size_t n, m;
  double time_ms;
  double probes;
};

// Times and result payloads of one (n, m) grid cell.
struct Cell {
  std::size_t n, m;
  std::vector<Row> rows;
  Json results = Json::array();
};

Cell bench_oracle(const BenchOptions& o, std::uint64_t seed, std::size_t n, std::size_t m) {
  Cell cell{n, m, {}, Json::array()};
  for (std::size_t t = 0; t < o.trials; ++t) {
    std::mt19937_64 rng = cell_rng(seed, "oracle", n, m, t);
    const PolyCurve p = random_walk(n, 1, rng);
    Stopwatch build_clock;
    const OracleHandle h = preprocess(p, m);
    cell.rows.push_back({"build", n, m, build_clock.ms(),
                         static_cast<double>(h.build_stats.greedy_calls)});

    std::vector<double> times, decisions;
    double lo_sum = 0;
    for (std::size_t k = 0; k < o.queries; ++k) {
      const PolyCurve q = random_walk(m, 1, rng);
      QueryStats stats;
      Stopwatch clock;
      const ApproxInterval iv = query(h, q, &stats);
      times.push_back(clock.ms());
      decisions.push_back(static_cast<double>(stats.decisions));
      lo_sum += iv.lo;
    }
    cell.rows.push_back({"query", n, m, median(times), median(decisions)});
    cell.results.push_back({{"delta_m", h.cs.delta_m}, {"query_lo_sum", lo_sum}});
  }
  return cell;
}

Cell bench_approx(const BenchOptions& o, std::uint64_t seed, std::size_t n, std::size_t m) {
  const Norm norm = parse_norm(o.norm);
  const MatchMode match = parse_mode(o.match);
  Cell cell{n, m, {}, Json::array()};
  for (std::size_t t = 0; t < o.trials; ++t) {
    std::mt19937_64 rng = cell_rng(seed, "approx3", n, m, t);
    const PolyCurve p = random_walk(n, o.dim, rng);
    const PolyCurve q = random_walk(m, o.dim, rng);
    Stopwatch clock;
    const ApproxResult r = approx_value(p, q, o.eps, norm, match);
    cell.rows.push_back({"approx3", n, m, clock.ms(), static_cast<double>(r.probes)});
    cell.results.push_back(Json::array({r.interval.lo, r.interval.hi}));
  }
  return cell;
}

Cell bench_exact(const BenchOptions& o, std::uint64_t seed, std::size_t n, std::size_t m) {
  const Norm norm = parse_norm(o.norm);
  Cell cell{n, m, {}, Json::array()};
  for (std::size_t t = 0; t < o.trials; ++t) {
    std::mt19937_64 rng = cell_rng(seed, "exact", n, m, t);
    const PolyCurve p = random_walk(n, o.dim, rng);
    const PolyCurve q = random_walk(m, o.dim, rng);
    Stopwatch clock;
    const double value = discrete_frechet_exact(p, q, norm);
    cell.rows.push_back({"exact", n, m, clock.ms(), 0});
    cell.results.push_back(value);
  }
  return cell;
}

int run_bench(const BenchOptions& o) {
  const std::vector<std::size_t> ns = parse_size_grid(o.n_grid);
  const std::vector<std::size_t> ms = parse_size_grid(o.m_grid);
  if (o.trials == 0) throw std::invalid_argument("--trials must be positive");
  const std::uint64_t seed = resolve_seed(o.seed);

  std::ofstream csv;
  if (!o.out_path.empty()) {
    csv.open(o.out_path);
    if (!csv) throw FormatError("cannot write '" + o.out_path + "'");
    csv << kCsvHeader << '\n' << std::setprecision(9);
  }

  Json cells = Json::array();
  for (std::size_t n : ns) {
    for (std::size_t m : ms) {
      const Cell cell = o.algorithm == "oracle"    ? bench_oracle(o, seed, n, m)
                        : o.algorithm == "approx3" ? bench_approx(o, seed, n, m)
                                                   : bench_exact(o, seed, n, m);
      Json medians = Json::object();
      std::vector<std::string> phases;
      for (const Row& r : cell.rows) {
        if (std::find(phases.begin(), phases.end(), r.phase) == phases.end()) {
          phases.push_back(r.phase);
        }
        if (csv.is_open()) {
          csv << o.algorithm << ',' << r.n << ',' << r.m << ',' << r.phase << ',' << r.time_ms
              << ',' << r.probes << '\n';
        }
      }
      for (const std::string& phase : phases) {
        std::vector<double> times;
        for (const Row& r : cell.rows) {
          if (r.phase == phase) times.push_back(r.time_ms);
        }
        medians[phase] = median(times);
      }
      cells.push_back(
          {{"n", n}, {"m", m}, {"median_time_ms", medians}, {"results", cell.results}});
    }
  }

  Json report;
  report["command"] = "bench " + o.algorithm;
  report["seed"] = seed;
  report["trials"] = o.trials;
  if (o.algorithm != "oracle") {
    report["dim"] = o.dim;
    report["norm"] = o.norm;
  }
  if (o.algorithm == "approx3") {
    report["eps"] = o.eps;
    report["match"] = o.match;
  }
  report["csv"] = o.out_path.empty() ? Json(nullptr) : Json(o.out_path);
  report["cells"] = cells;
  print_report(report);
  return kExitOk;
}

void add_bench_variant(CLI::App& bench, const std::string& name, const std::string& help,
                       Action& action) {
  auto o = std::make_shared<BenchOptions>();
  o->algorithm = name;
  CLI::App* cmd = bench.add_subcommand(name, help);
  cmd->add_option("--n-grid", o->n_grid, "Comma-separated n values, e.g. 1e4,1e5")->required();
  auto* m_grid =
      cmd->add_option("--m-grid", o->m_grid, "Comma-separated m values")->capture_default_str();
  cmd->add_option("--m", o->m_grid, "Single m value")->excludes(m_grid);
  cmd->add_option("--trials", o->trials, "Trials per grid cell")->capture_default_str();
  cmd->add_option("--seed", o->seed, "Seed (FRECHET_SEED overrides)")->capture_default_str();
  cmd->add_option("--out", o->out_path, "CSV output path");
  if (name == "oracle") {
    cmd->add_option("--queries", o->queries, "Queries timed per build")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  } else {
    cmd->add_option("--dim", o->dim, "Curve dimension")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--norm", o->norm, "l1 | l2 | linf")->capture_default_str();
  }
  if (name == "approx3") {
    cmd->add_option("--eps", o->eps, "Accuracy, hi <= (3 + eps) lo")->capture_default_str();
    cmd->add_option("--match", o->match, "continuous | discrete")->capture_default_str();
  }
  cmd->callback([o, &action] { action = [o] { return run_bench(*o); }; });
}

}  // namespace

void add_bench_command(CLI::App& app, Action& action) {
  CLI::App* cmd = app.add_subcommand("bench", "Timing runs on seeded random walks.");
  cmd->footer(
      "CSV (--out): header algorithm,n,m,phase,time_ms,probes; one row per trial and phase.\n"
      "  oracle:  phase build (probes = greedy passes) and phase query (median over\n"
      "           --queries queries; probes = median decision calls)\n"
      "  approx3: phase approx3 (probes = decision probes)\n"
      "  exact:   phase exact (probes = 0)\n"
      "time_ms is wall time from a monotonic clock. Curves are random walks with\n"
      "uniform steps in [-1, 1] per coordinate.");
  cmd->require_subcommand(1);
  add_bench_variant(*cmd, "oracle", "1D oracle build and query times.", action);
  add_bench_variant(*cmd, "approx3", "(3 + eps)-approximation times.", action);
  add_bench_variant(*cmd, "exact", "Exact discrete distance times.", action);
}

}  // namespace frechet::cli
