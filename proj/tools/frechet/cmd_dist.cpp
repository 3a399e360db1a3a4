#include <memory>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "common.hpp"
#include "frechet/approx.hpp"
#include "frechet/curve_io.hpp"
#include "frechet/errors.hpp"
#include "frechet/reference.hpp"

namespace frechet::cli {
namespace {

struct DistOptions {
  std::string mode;
  std::string p_path, q_path;
  std::string norm = "l2";
  std::string match = "continuous";
  double delta = -1;
  double eps = -1;
};

int run_dist(const DistOptions& o) {
  const Norm norm = parse_norm(o.norm);
  const PolyCurve p = read_curve_file(o.p_path);
  const PolyCurve q = read_curve_file(o.q_path);
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("P has dimension " + std::to_string(p.dim()) + ", Q has " +
                            std::to_string(q.dim()));
  }

  Json report;
  report["command"] = "dist";
  report["mode"] = o.mode;
  report["norm"] = std::string(to_string(norm));
  report["inputs"] = {{"p", o.p_path}, {"q", o.q_path}};
  report["sizes"] = {{"n", p.size()}, {"m", q.size()}, {"d", p.dim()}};

  Stopwatch clock;
  if (o.mode == "discrete-exact") {
    report["result"] = {{"value", discrete_frechet_exact(p, q, norm)}};
    report["timing_ms"] = {{"total", clock.ms()}};
  } else if (o.mode == "continuous-decide") {
    if (o.delta < 0) throw std::invalid_argument("--delta is required for continuous-decide");
    report["result"] = {{"delta", o.delta},
                        {"at_most_delta", continuous_frechet_decide(p, q, o.delta, norm)}};
    report["timing_ms"] = {{"total", clock.ms()}};
  } else {
    if (o.eps <= 0) throw std::invalid_argument("--eps > 0 is required for approx3");
    const MatchMode match = parse_mode(o.match);
    const ApproxResult r = approx_value(p, q, o.eps, norm, match);
    report["match"] = std::string(to_string(match));
    report["result"] = {{"lo", r.interval.lo},
                        {"hi", r.interval.hi},
                        {"eps", o.eps},
                        {"zero_probe_factor", r.zero_probe_factor}};
    report["probes"] = r.probes;
    report["timing_ms"] = {
        {"simplify", r.simplify_ms}, {"decide", r.decide_ms}, {"total", clock.ms()}};
  }
  print_report(report);
  return kExitOk;
}

}  // namespace

void add_dist_command(CLI::App& app, Action& action) {
  auto opts = std::make_shared<DistOptions>();
  CLI::App* cmd = app.add_subcommand("dist", "Distance between two curve files.");
  cmd->add_option("--mode", opts->mode, "discrete-exact | continuous-decide | approx3")
      ->required()
      ->check(CLI::IsMember({"discrete-exact", "continuous-decide", "approx3"}));
  cmd->add_option("p", opts->p_path, "Curve P (one vertex per line, comma-separated)")
      ->required();
  cmd->add_option("q", opts->q_path, "Curve Q")->required();
  cmd->add_option("--norm", opts->norm, "l1 | l2 | linf")->capture_default_str();
  cmd->add_option("--delta", opts->delta, "Threshold for continuous-decide");
  cmd->add_option("--eps", opts->eps, "Accuracy for approx3: hi <= (3 + eps) lo");
  cmd->add_option("--match", opts->match, "Distance approx3 refers to: continuous | discrete")
      ->capture_default_str();
  cmd->callback([opts, &action] { action = [opts] { return run_dist(*opts); }; });
}

}  // namespace frechet::cli
