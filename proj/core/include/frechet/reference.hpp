#pragma once

#include <cstddef>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

// Exact discrete Frechet distance, O(nm) time, O(min(n, m)) memory.
double discrete_frechet_exact(const PolyCurve& p, const PolyCurve& q, Norm norm);

// d_dF(P, Q) <= delta.
bool discrete_frechet_decide(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm);

// Full n x m reachability table of the discrete free-space matrix at delta.
struct ReachMatrix {
  std::size_t rows = 0;  // |P|
  std::size_t cols = 0;  // |Q|
  std::vector<char> cells;

  bool at(std::size_t i, std::size_t j) const { return cells[i * cols + j] != 0; }
};
ReachMatrix discrete_reach_matrix(const PolyCurve& p, const PolyCurve& q, double delta,
                                  Norm norm);

// d_F(P, Q) <= delta via free-space reachability, O(nm) time, O(n) memory.
bool continuous_frechet_decide(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm);

// Bisection on the continuous decision: returns v with decide(v) true and
// decide(v / (1 + rel_tol)) false, or 0 when the curves are equivalent.
double continuous_frechet_value_ref(const PolyCurve& p, const PolyCurve& q, Norm norm,
                                    double rel_tol = 1e-9);

// Enumerates every monotone matching. Only for |P| + |Q| <= 14.
inline constexpr std::size_t kBruteForceMaxVertices = 14;
double brute_force_discrete(const PolyCurve& p, const PolyCurve& q, Norm norm);

}  // namespace frechet
