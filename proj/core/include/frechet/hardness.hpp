#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

using BitVector = std::vector<std::uint8_t>;

// Orthogonal-vectors instance: sets U (size m) and V (size n) of 0/1 vectors
// of length d. Stored with m <= n; `swapped` records that the input roles
// were exchanged to get there.
struct OVInstance {
  std::size_t d = 0;
  std::vector<BitVector> U;
  std::vector<BitVector> V;
  bool swapped = false;

  // Validates lengths and entries (throws std::invalid_argument) and swaps U
  // and V if |U| > |V|.
  static OVInstance make(std::size_t d, std::vector<BitVector> u, std::vector<BitVector> v);
};

// Parses {"d": int, "U": [[0|1, ...]], "V": [[0|1, ...]]}; FormatError on
// malformed input.
OVInstance parse_ov_instance(const std::string& json_text);

struct OrthogonalPair {
  std::size_t v_index = 0;  // zero-based, into V
  std::size_t u_index = 0;  // zero-based, into U
};

// First orthogonal pair scanning V in order, then U; O(nmd).
std::optional<OrthogonalPair> ov_brute(const OVInstance& inst);

// One-dimensional integer gadgets of the reduction. pstar(d) has the form
// <cap, core^(2d+3), cap>.
struct GadgetSet1D {
  std::vector<double> p0, p1, ps;
  double p_null = 0.0;
  double pstar_cap = 0.0;
  std::vector<double> pstar_core;
  std::vector<double> q0, q1, qc, qstar;
  double q_null = 0.0;

  std::vector<double> pstar(std::size_t d) const;
};

// The frozen, exhaustively certified gadget values.
const GadgetSet1D& standard_gadgets();

// Direct checks of the structural gadget properties for dimension d; returns
// one message per violated property.
std::vector<std::string> check_gadgets(const GadgetSet1D& g, std::size_t d);

struct HardPair {
  PolyCurve p;
  PolyCurve q;
};

// Curve pair with d_dF(P, Q) <= 1 iff the instance has an orthogonal pair,
// and d_dF(P, Q) >= 2 otherwise. Throws ContractViolation if the gadgets fail
// check_gadgets.
HardPair build_hard_pair_1d(const OVInstance& inst, const GadgetSet1D& gadgets);

struct CertificationLimits {
  std::size_t max_n = 3;
  std::size_t max_m = 3;
  std::size_t max_d = 3;
};

struct CertificationViolation {
  std::size_t n = 0, m = 0, d = 0;
  std::vector<BitVector> U, V;
  bool orthogonal = false;
  double distance = 0.0;
};

struct CertificationReport {
  std::size_t instances = 0;
  std::vector<std::string> gadget_violations;
  std::vector<CertificationViolation> violations;
  // Largest distance over instances with an orthogonal pair, smallest over
  // those without.
  double max_yes_distance = 0.0;
  double min_no_distance = 0.0;

  bool ok() const { return gadget_violations.empty() && violations.empty(); }
};

// Enumerates every instance with 1 <= |V| <= max_n, 1 <= |U| <= max_m and
// 1 <= d <= max_d and compares the exact distance with the OV answer.
CertificationReport certify_gadgets(const GadgetSet1D& gadgets, const CertificationLimits& limits);

}  // namespace frechet
