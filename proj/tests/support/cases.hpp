#pragma once

// Random instances for the 1D oracle, shared by unit and acceptance tests.

#include <random>
#include <vector>

#include "frechet/oracle_1d.hpp"
#include "support/oracles.hpp"

namespace frechet::testing {

struct DecideCase {
  CompressedSimplification cs;
  PolyCurve q;
  double delta;
};

// Integer curve, budget m, and a query drawn partly from values that sit
// exactly at distance delta, 2 delta, 1.5 delta (+ delta_m / 2) from the run
// centers, so ties and side changes are frequent. delta >= delta_m.
inline DecideCase engineered_decide_case(std::mt19937_64& rng, std::size_t max_n,
                                         std::size_t max_m) {
  const std::size_t n = pick_size(rng, 1, max_n);
  const std::size_t m = pick_size(rng, 1, max_m);
  std::vector<double> pv(n);
  for (double& v : pv) v = static_cast<double>(pick_size(rng, 0, 20));
  const OracleHandle h = preprocess(PolyCurve::from_values(pv), m);
  const double dm = h.cs.delta_m;
  double delta = dm;
  if (pick_size(rng, 0, 2) == 2) delta += static_cast<double>(pick_size(rng, 0, 12)) / 4.0;
  if (delta == 0.0 && pick_size(rng, 0, 1) == 1) delta = 0.5;

  std::vector<double> pool;
  for (double c : h.cs.centers) {
    for (double sg : {1.0, -1.0}) {
      for (double f : {0.5, 1.0, 1.5, 2.0}) pool.push_back(c + sg * f * delta);
      pool.push_back(c + sg * (dm / 2.0 + 1.5 * delta));
      pool.push_back(c + sg * (1.5 * delta - dm / 2.0));
    }
  }
  std::vector<double> qv(pick_size(rng, 1, m));
  for (double& v : qv) {
    if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.6) {
      v = pool[pick_size(rng, 0, pool.size() - 1)];
    } else {
      v = static_cast<double>(static_cast<int>(pick_size(rng, 0, 48)) - 4) / 2.0;
    }
  }
  return {h.cs, PolyCurve::from_values(qv), delta};
}

// Integer-valued random walk, so all derived quantities stay dyadic.
inline PolyCurve integer_walk(std::mt19937_64& rng, std::size_t n, int step) {
  std::vector<double> v(n);
  int cur = 0;
  for (double& x : v) {
    x = cur;
    cur += static_cast<int>(pick_size(rng, 0, 2 * static_cast<std::size_t>(step))) - step;
  }
  return PolyCurve::from_values(std::move(v));
}

}  // namespace frechet::testing
