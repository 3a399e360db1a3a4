#include "frechet/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "frechet/errors.hpp"
#include "frechet/reference.hpp"
#include "json.hpp"

namespace frechet {

OVInstance OVInstance::make(std::size_t d, std::vector<BitVector> u, std::vector<BitVector> v) {
  if (d == 0) throw std::invalid_argument("OV dimension must be >= 1");
  if (u.empty() || v.empty()) throw std::invalid_argument("U and V must be non-empty");
  for (const auto* set : {&u, &v}) {
    for (const BitVector& vec : *set) {
      if (vec.size() != d) {
        throw std::invalid_argument("vector of length " + std::to_string(vec.size()) +
                                    " in an instance of dimension " + std::to_string(d));
      }
      for (std::uint8_t b : vec) {
        if (b > 1) throw std::invalid_argument("OV entries must be 0 or 1");
      }
    }
  }
  OVInstance inst;
  inst.d = d;
  inst.swapped = u.size() > v.size();
  if (inst.swapped) std::swap(u, v);
  inst.U = std::move(u);
  inst.V = std::move(v);
  return inst;
}

OVInstance parse_ov_instance(const std::string& json_text) {
  using nlohmann::json;
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_object()) throw FormatError("OV instance must be a JSON object");
    const json& d = doc.at("d");
    if (!d.is_number_unsigned()) throw FormatError("'d' must be a positive integer");
    const auto read_set = [](const json& arr, const char* name) {
      if (!arr.is_array()) throw FormatError(std::string("'") + name + "' must be an array");
      std::vector<BitVector> out;
      for (const json& row : arr) {
        if (!row.is_array()) throw FormatError(std::string("rows of '") + name + "' must be arrays");
        BitVector vec;
        for (const json& b : row) {
          if (!b.is_number_unsigned() || b.get<unsigned>() > 1) {
            throw FormatError(std::string("entries of '") + name + "' must be 0 or 1");
          }
          vec.push_back(static_cast<std::uint8_t>(b.get<unsigned>()));
        }
        out.push_back(std::move(vec));
      }
      return out;
    };
    return OVInstance::make(d.get<std::size_t>(), read_set(doc.at("U"), "U"),
                            read_set(doc.at("V"), "V"));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed OV instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid OV instance: ") + e.what());
  }
}

std::optional<OrthogonalPair> ov_brute(const OVInstance& inst) {
  for (std::size_t i = 0; i < inst.V.size(); ++i) {
    for (std::size_t j = 0; j < inst.U.size(); ++j) {
      bool orthogonal = true;
      for (std::size_t k = 0; k < inst.d && orthogonal; ++k) {
        orthogonal = !(inst.V[i][k] && inst.U[j][k]);
      }
      if (orthogonal) return OrthogonalPair{i, j};
    }
  }
  return std::nullopt;
}

std::vector<double> GadgetSet1D::pstar(std::size_t d) const {
  std::vector<double> out{pstar_cap};
  for (std::size_t r = 0; r < 2 * d + 3; ++r) {
    out.insert(out.end(), pstar_core.begin(), pstar_core.end());
  }
  out.push_back(pstar_cap);
  return out;
}

const GadgetSet1D& standard_gadgets() {
  static const GadgetSet1D g = [] {
    GadgetSet1D s;
    s.p0 = {-1, 1};
    s.p1 = {-1, 0};
    s.ps = {0};
    s.p_null = 4;
    s.pstar_cap = 2;
    s.pstar_core = {-1, 1};
    s.q0 = {-2, 1};
    s.q1 = {-2, 2};
    s.qc = {0};
    s.qstar = {1, 0, 1};
    s.q_null = 3;
    return s;
  }();
  return g;
}

namespace {

double ddf(const std::vector<double>& a, const std::vector<double>& b) {
  return discrete_frechet_exact(PolyCurve::from_values(a), PolyCurve::from_values(b), Norm::L1);
}

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace

std::vector<std::string> check_gadgets(const GadgetSet1D& g, std::size_t d) {
  std::vector<std::string> out;
  const std::vector<double> pstar = g.pstar(d);
  const std::vector<const std::vector<double>*> p_parts{&g.p0, &g.p1, &g.ps, &pstar};
  const std::vector<const std::vector<double>*> q_parts{&g.q0, &g.q1, &g.qc, &g.qstar};
  for (const auto* part : p_parts) {
    if (part->empty()) {
      out.emplace_back("empty P gadget");
      return out;
    }
  }
  for (const auto* part : q_parts) {
    if (part->empty()) {
      out.emplace_back("empty Q gadget");
      return out;
    }
  }

  if (ddf(pstar, g.qstar) > 1) out.emplace_back("d(P*, Q*) > 1");
  if (ddf(g.ps, g.qstar) > 1) out.emplace_back("d(P_s, Q*) > 1");
  if (ddf(g.p0, g.q0) > 1) out.emplace_back("d(P_0, Q_0) > 1");
  if (ddf(g.p0, g.q1) > 1) out.emplace_back("d(P_0, Q_1) > 1");
  if (ddf(g.p1, g.q0) > 1) out.emplace_back("d(P_1, Q_0) > 1");
  if (ddf(g.p1, g.q1) < 2) out.emplace_back("d(P_1, Q_1) < 2");
  if (std::abs(g.p_null - g.q_null) > 1) out.emplace_back("|P_null - Q_null| > 1");

  // Coordinate structure around the value -2.
  if (g.q0.size() != g.q1.size() || g.q0.size() % 2 != 0) {
    out.emplace_back("Q_0 and Q_1 must have equal even length");
  } else {
    for (std::size_t k = 0; k < g.q0.size(); k += 2) {
      if (g.q0[k] != -2 || g.q1[k] != -2) {
        out.emplace_back("every second vertex of Q_0 / Q_1 must be -2");
        break;
      }
    }
  }
  bool near_ok = std::abs(g.p_null + 2) >= 2;
  for (const auto* part : p_parts) {
    for (double v : *part) {
      if (std::abs(v + 2) < 2 && v != -1) near_ok = false;
    }
  }
  if (!near_ok) out.emplace_back("a P gadget value other than -1 is within distance < 2 of -2");
  for (const auto* part : {&g.p0, &g.p1}) {
    for (std::size_t k = 0; k < part->size(); ++k) {
      if (((*part)[k] == -1) != (k % 2 == 0)) {
        out.emplace_back("-1 must occur exactly at every second position of P_0 / P_1");
        break;
      }
    }
  }

  // Edges not touching Q_null stay at distance >= 2 from P_null when all
  // other Q values lie on one side of it.
  bool below = true, above = true;
  for (const auto* part : q_parts) {
    for (double v : *part) {
      below = below && v <= g.p_null - 2;
      above = above && v >= g.p_null + 2;
    }
  }
  if (!below && !above) out.emplace_back("P_null is within distance < 2 of a non-null Q edge");

  bool integral = is_integer(g.p_null) && is_integer(g.q_null) && is_integer(g.pstar_cap);
  for (const auto* part : p_parts) integral = integral && std::all_of(part->begin(), part->end(), is_integer);
  for (const auto* part : q_parts) integral = integral && std::all_of(part->begin(), part->end(), is_integer);
  if (!integral) out.emplace_back("gadget coordinates must be integers");
  return out;
}

namespace {

HardPair build_unchecked(const OVInstance& inst, const GadgetSet1D& g) {
  const std::size_t d = inst.d;
  const std::size_t n = inst.V.size();
  const std::size_t m = inst.U.size();
  const auto c = [](const std::vector<double>& v) { return PolyCurve::from_values(v); };
  const PolyCurve p0 = c(g.p0), p1 = c(g.p1), ps = c(g.ps), pstar = c(g.pstar(d));
  const PolyCurve p_null = c({g.p_null});
  const PolyCurve q0 = c(g.q0), q1 = c(g.q1), qc = c(g.qc), qstar = c(g.qstar);
  const PolyCurve q_null = c({g.q_null});

  CurveBuilder pb(1);
  pb.append(ps).append_repeat(pstar, m - 1).append(p_null);
  for (std::size_t i = 0; i < n; ++i) {
    pb.append_repeat(p0, d + 1).append(p1);
    for (std::size_t l = 0; l < d; ++l) pb.append(inst.V[i][l] ? p1 : p0);
    pb.append(p1);
  }
  pb.append(p_null).append_repeat(pstar, m - 1).append(ps);

  CurveBuilder qb(1);
  qb.append_repeat(qstar, m);
  for (std::size_t k = 0; k < m; ++k) {
    qb.append(q_null).append(qc).append_repeat(q1, d + 1).append(q0);
    for (std::size_t l = 0; l < d; ++l) qb.append(inst.U[k][l] ? q1 : q0);
    qb.append(q0).append(qc);
  }
  qb.append(q_null).append_repeat(qstar, m);
  return {std::move(pb).build(), std::move(qb).build()};
}

bool has_empty_part(const GadgetSet1D& g) {
  return g.p0.empty() || g.p1.empty() || g.ps.empty() || g.q0.empty() ||
         g.q1.empty() || g.qc.empty() || g.qstar.empty();
}

// Odometer over all tuples of `count` vectors in {0,1}^d.
bool next_tuple(std::vector<BitVector>& vs) {
  for (BitVector& v : vs) {
    for (std::uint8_t& b : v) {
      if (b == 0) {
        b = 1;
        return true;
      }
      b = 0;
    }
  }
  return false;
}

}  // namespace

HardPair build_hard_pair_1d(const OVInstance& inst, const GadgetSet1D& g) {
  if (const auto bad = check_gadgets(g, inst.d); !bad.empty()) {
    throw ContractViolation("uncertified gadget set: " + bad.front());
  }
  return build_unchecked(inst, g);
}

CertificationReport certify_gadgets(const GadgetSet1D& gadgets, const CertificationLimits& limits) {
  CertificationReport rep;
  rep.min_no_distance = std::numeric_limits<double>::infinity();
  for (std::size_t d = 1; d <= limits.max_d; ++d) {
    for (const std::string& msg : check_gadgets(gadgets, d)) {
      rep.gadget_violations.push_back("d=" + std::to_string(d) + ": " + msg);
    }
  }
  // Instances are still enumerated for a failing set, so the report shows
  // which ones break.
  if (has_empty_part(gadgets)) return rep;

  for (std::size_t d = 1; d <= limits.max_d; ++d) {
    for (std::size_t n = 1; n <= limits.max_n; ++n) {
      for (std::size_t m = 1; m <= limits.max_m; ++m) {
        std::vector<BitVector> v(n, BitVector(d, 0));
        do {
          std::vector<BitVector> u(m, BitVector(d, 0));
          do {
            const OVInstance inst = OVInstance::make(d, u, v);
            const HardPair pair = build_unchecked(inst, gadgets);
            const double dist = discrete_frechet_exact(pair.p, pair.q, Norm::L1);
            const bool orth = ov_brute(inst).has_value();
            ++rep.instances;
            if (orth) {
              rep.max_yes_distance = std::max(rep.max_yes_distance, dist);
            } else {
              rep.min_no_distance = std::min(rep.min_no_distance, dist);
            }
            if ((orth && dist > 1) || (!orth && dist < 2)) {
              rep.violations.push_back({n, m, d, u, v, orth, dist});
            }
          } while (next_tuple(u));
        } while (next_tuple(v));
      }
    }
  }
  return rep;
}

}  // namespace frechet
