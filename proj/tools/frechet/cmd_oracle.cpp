#include <fstream>
#include <iterator>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "common.hpp"
#include "frechet/curve_io.hpp"
#include "frechet/errors.hpp"
#include "frechet/oracle_1d.hpp"

namespace frechet::cli {
namespace {

struct BuildOptions {
  std::size_t m = 0;
  std::string in_path, out_path;
};

struct QueryOptions {
  std::string oracle_path, query_path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_build(const BuildOptions& o) {
  const PolyCurve p = read_curve_file(o.in_path);
  Stopwatch clock;
  const OracleHandle h = preprocess(p, o.m);
  const double total = clock.ms();
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + o.out_path + "'");
  out << serialize_oracle(h);

  Json report;
  report["command"] = "oracle build";
  report["inputs"] = {{"p", o.in_path}};
  report["sizes"] = {{"n", h.n}, {"m", h.m}, {"d", 1}};
  report["result"] = {{"delta_m", h.cs.delta_m}, {"runs", h.cs.runs()}, {"oracle", o.out_path}};
  report["probes"] = h.build_stats.greedy_calls;
  report["timing_ms"] = {{"select", h.build_stats.select_ms},
                         {"compress", h.build_stats.compress_ms},
                         {"total", total}};
  print_report(report);
  return kExitOk;
}

int run_query(const QueryOptions& o) {
  const OracleHandle h = deserialize_oracle(slurp(o.oracle_path));
  const PolyCurve q = read_curve_file(o.query_path);
  Stopwatch clock;
  QueryStats stats;
  const ApproxInterval iv = query(h, q, &stats);

  Json report;
  report["command"] = "oracle query";
  report["inputs"] = {{"oracle", o.oracle_path}, {"q", o.query_path}};
  report["sizes"] = {{"n", h.n}, {"m", q.size()}, {"d", q.dim()}};
  report["result"] = {{"lo", iv.lo}, {"hi", iv.hi}, {"delta_m", h.cs.delta_m}};
  report["probes"] = stats.decisions;
  report["timing_ms"] = {{"query", clock.ms()}};
  print_report(report);
  return kExitOk;
}

}  // namespace

void add_oracle_command(CLI::App& app, Action& action) {
  CLI::App* cmd = app.add_subcommand("oracle", "Build or query the 1D distance oracle.");
  cmd->require_subcommand(1);

  auto b = std::make_shared<BuildOptions>();
  CLI::App* build = cmd->add_subcommand("build", "Preprocess a 1D curve for queries of size <= m.");
  build->add_option("--m", b->m, "Largest query size")->required()->check(CLI::PositiveNumber);
  build->add_option("--in", b->in_path, "1D curve file")->required();
  build->add_option("--out", b->out_path, "Oracle JSON output")->required();
  build->callback([b, &action] { action = [b] { return run_build(*b); }; });

  auto q = std::make_shared<QueryOptions>();
  CLI::App* qry = cmd->add_subcommand("query", "Query a built oracle; prints [lo, 2 lo].");
  qry->add_option("--oracle", q->oracle_path, "Oracle JSON")->required();
  qry->add_option("--query", q->query_path, "1D query curve file")->required();
  qry->callback([q, &action] { action = [q] { return run_query(*q); }; });
}

}  // namespace frechet::cli
