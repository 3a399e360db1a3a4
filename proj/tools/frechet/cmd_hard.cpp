#include <fstream>
#include <iterator>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "common.hpp"
#include "frechet/curve_io.hpp"
#include "frechet/errors.hpp"
#include "frechet/hardness.hpp"

namespace frechet::cli {
namespace {

struct GenOptions {
  std::string ov_path, p_path, q_path, sidecar_path;
};

Json bits_json(const std::vector<BitVector>& vs) {
  Json out = Json::array();
  for (const BitVector& v : vs) out.push_back(v);
  return out;
}

int run_gen(const GenOptions& o) {
  std::ifstream in(o.ov_path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + o.ov_path + "'");
  const OVInstance inst =
      parse_ov_instance({std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()});
  const HardPair pair = build_hard_pair_1d(inst, standard_gadgets());
  write_curve_file(o.p_path, pair.p);
  write_curve_file(o.q_path, pair.q);

  // Indices are one-based and refer to the "V" and "U" lists of the input
  // file, whichever way round they were stored.
  Json orthogonal = nullptr;
  if (const auto hit = ov_brute(inst)) {
    const std::size_t v_input = inst.swapped ? hit->u_index : hit->v_index;
    const std::size_t u_input = inst.swapped ? hit->v_index : hit->u_index;
    orthogonal = Json::array({v_input + 1, u_input + 1});
  }
  const std::string sidecar_path = o.sidecar_path.empty() ? o.p_path + ".json" : o.sidecar_path;
  Json sidecar;
  sidecar["orthogonal_pair"] = orthogonal;
  sidecar["certified_gap"] = check_gadgets(standard_gadgets(), inst.d).empty();
  std::ofstream side(sidecar_path);
  if (!side) throw FormatError("cannot write '" + sidecar_path + "'");
  side << sidecar.dump(2) << '\n';

  Json report;
  report["command"] = "hard gen";
  report["inputs"] = {{"ov", o.ov_path}};
  report["sizes"] = {{"n", inst.V.size()}, {"m", inst.U.size()}, {"d", inst.d}};
  report["result"] = {{"p", o.p_path},
                      {"q", o.q_path},
                      {"sidecar", sidecar_path},
                      {"p_vertices", pair.p.size()},
                      {"q_vertices", pair.q.size()},
                      {"swapped", inst.swapped},
                      {"orthogonal_pair", orthogonal}};
  print_report(report);
  return kExitOk;
}

int run_certify(const CertificationLimits& limits) {
  Stopwatch clock;
  const CertificationReport rep = certify_gadgets(standard_gadgets(), limits);
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"n", v.n},
                          {"m", v.m},
                          {"d", v.d},
                          {"U", bits_json(v.U)},
                          {"V", bits_json(v.V)},
                          {"orthogonal", v.orthogonal},
                          {"distance", v.distance}});
  }
  Json report;
  report["command"] = "hard certify";
  report["limits"] = {{"max_n", limits.max_n}, {"max_m", limits.max_m}, {"max_d", limits.max_d}};
  report["result"] = {{"ok", rep.ok()},
                      {"instances", rep.instances},
                      {"max_yes_distance", rep.max_yes_distance},
                      {"min_no_distance", rep.min_no_distance},
                      {"gadget_violations", rep.gadget_violations},
                      {"violations", violations}};
  report["timing_ms"] = {{"total", clock.ms()}};
  print_report(report);
  return rep.ok() ? kExitOk : kExitCertification;
}

}  // namespace

void add_hard_command(CLI::App& app, Action& action) {
  CLI::App* cmd = app.add_subcommand("hard", "Orthogonal-vectors hard instances in 1D.");
  cmd->require_subcommand(1);

  auto g = std::make_shared<GenOptions>();
  CLI::App* gen = cmd->add_subcommand("gen", "Build the curve pair for an OV instance.");
  gen->add_option("--ov", g->ov_path, R"(OV instance JSON {"d": int, "U": [[0|1,...]], "V": ...})")
      ->required();
  gen->add_option("--out-p", g->p_path, "Output curve P")->required();
  gen->add_option("--out-q", g->q_path, "Output curve Q")->required();
  gen->add_option("--sidecar", g->sidecar_path,
                  "Sidecar JSON (default: <out-p>.json) with \"orthogonal_pair\": [i, j], "
                  "one-based indices into V and U of the input, or null");
  gen->callback([g, &action] { action = [g] { return run_gen(*g); }; });

  auto limits = std::make_shared<CertificationLimits>();
  CLI::App* cert = cmd->add_subcommand(
      "certify", "Check every instance within the limits against the exact distance; exit 3 "
                 "on any violation.");
  cert->add_option("--max-n", limits->max_n, "Largest |V|")->capture_default_str()
      ->check(CLI::Range(1, 3));
  cert->add_option("--max-m", limits->max_m, "Largest |U|")->capture_default_str()
      ->check(CLI::Range(1, 3));
  cert->add_option("--max-d", limits->max_d, "Largest vector length")->capture_default_str()
      ->check(CLI::Range(1, 3));
  cert->callback([limits, &action] { action = [limits] { return run_certify(*limits); }; });
}

}  // namespace frechet::cli
