#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "frechet/geometry.hpp"
#include "frechet/interval.hpp"

namespace frechet {

enum class MatchMode { Continuous, Discrete };

std::string_view to_string(MatchMode mode);
// Accepts "continuous" / "discrete" (case-insensitive).
MatchMode parse_mode(std::string_view text);

// Q-parameters (one-based) of the two P' vertices contributed by one round.
struct Anchor {
  double s = 0.0;
  double t = 0.0;
};

// Either a curve P' of at most 2|Q| points on Q with d(P, P') <= delta, or
// the certificate that d(P, Q) > delta (curve empty).
struct SimplifyOutcome {
  std::optional<PolyCurve> curve;
  std::vector<Anchor> anchors;

  bool exceeds_delta() const { return !curve.has_value(); }
};

// Query-dependent simplification of P against Q. O(|P| + |Q|) distance
// evaluations for fixed dimension.
SimplifyOutcome simplify_against_query(const PolyCurve& p, const PolyCurve& q, double delta,
                                       Norm norm, MatchMode mode);

enum class Decision { AtMostThreeDelta, GreaterThanDelta };

// Machine epsilons of the largest |coordinate| of Q (per coordinate) added to
// the 2 delta test, since P' vertices on Q are only computed to rounding.
inline constexpr double kRoundingUlps = 16.0;

// GreaterThanDelta implies d(P, Q) > delta. AtMostThreeDelta implies
// d(P, Q) <= 3 delta up to the rounding allowance above.
Decision decide_3approx(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm,
                        MatchMode mode);

// Lower-bound floor probed when the endpoint bound is zero.
inline constexpr double kZeroProbeFactor = 0x1p-50;

struct ApproxResult {
  ApproxInterval interval;
  std::size_t probes = 0;
  double simplify_ms = 0.0;
  double decide_ms = 0.0;
  double zero_probe_factor = kZeroProbeFactor;
};

// Interval [lo, hi] with d(P, Q) inside and hi <= (3 + eps) lo, or [0, 0].
ApproxResult approx_value(const PolyCurve& p, const PolyCurve& q, double eps, Norm norm,
                          MatchMode mode);

}  // namespace frechet
