#pragma once

// Independent test oracles and random instance generators. Nothing here
// calls into the library's algorithms; only PolyCurve is used as a carrier.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <random>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet::testing {

inline double dist(PointView a, PointView b, Norm norm) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = std::fabs(a[k] - b[k]);
    if (norm == Norm::L1) acc += diff;
    if (norm == Norm::L2) acc += diff * diff;
    if (norm == Norm::Linf) acc = std::max(acc, diff);
  }
  return norm == Norm::L2 ? std::sqrt(acc) : acc;
}

// Full-table discrete Frechet distance.
inline double table_ddf(const PolyCurve& p, const PolyCurve& q, Norm norm) {
  const std::size_t n = p.size(), m = q.size();
  std::vector<std::vector<double>> t(n, std::vector<double>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double c = dist(p.vertex(i), q.vertex(j), norm);
      if (i == 0 && j == 0) {
        t[i][j] = c;
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      if (i > 0) best = std::min(best, t[i - 1][j]);
      if (j > 0) best = std::min(best, t[i][j - 1]);
      if (i > 0 && j > 0) best = std::min(best, t[i - 1][j - 1]);
      t[i][j] = std::max(best, c);
    }
  }
  return t[n - 1][m - 1];
}

inline bool table_ddf_le(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm) {
  return table_ddf(p, q, norm) <= delta;
}

// Inserts k - 1 evenly spaced points into every edge.
inline PolyCurve subdivide(const PolyCurve& c, std::size_t k) {
  const std::size_t d = c.dim();
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(k);
      for (std::size_t a = 0; a < d; ++a) {
        out.push_back(c.vertex(i)[a] + t * (c.vertex(i + 1)[a] - c.vertex(i)[a]));
      }
    }
  }
  out.insert(out.end(), c.back().begin(), c.back().end());
  return PolyCurve(d, std::move(out));
}

inline double max_edge(const PolyCurve& c, Norm norm) {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    best = std::max(best, dist(c.vertex(i), c.vertex(i + 1), norm));
  }
  return best;
}

// Bracket [lo, hi] for the continuous distance from the discrete distance of
// k-fold subdivisions: d_F <= d_dF <= d_F + h, where h is the longest edge of
// either subdivided curve.
struct Bracket {
  double lo, hi;
};
inline Bracket continuous_bracket(const PolyCurve& p, const PolyCurve& q, Norm norm,
                                  std::size_t k) {
  const PolyCurve ps = subdivide(p, k), qs = subdivide(q, k);
  const double v = table_ddf(ps, qs, norm);
  const double slack = std::max(max_edge(ps, norm), max_edge(qs, norm));
  return {v - slack, v};
}

// Coordinates are multiples of 1/denom in [lo, hi]; with small denominators
// every distance and midpoint the algorithms compute is exact in binary.
inline double grid_value(std::mt19937_64& rng, int lo, int hi, int denom) {
  std::uniform_int_distribution<int> pick(lo * denom, hi * denom);
  return static_cast<double>(pick(rng)) / denom;
}

inline PolyCurve grid_curve(std::mt19937_64& rng, std::size_t n, std::size_t d, int lo, int hi,
                            int denom) {
  std::vector<double> coords(n * d);
  for (double& c : coords) c = grid_value(rng, lo, hi, denom);
  return PolyCurve(d, std::move(coords));
}

inline PolyCurve uniform_curve(std::mt19937_64& rng, std::size_t n, std::size_t d, double lo,
                               double hi) {
  std::uniform_real_distribution<double> pick(lo, hi);
  std::vector<double> coords(n * d);
  for (double& c : coords) c = pick(rng);
  return PolyCurve(d, std::move(coords));
}

inline std::size_t pick_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Norm pick_norm(std::mt19937_64& rng) {
  static constexpr Norm norms[] = {Norm::L1, Norm::L2, Norm::Linf};
  return norms[pick_size(rng, 0, 2)];
}

// Minimum complexity of a 1D curve C with d_dF(P, C) <= delta, by 0-1 BFS over
// (P-prefix, last C value) states with C's values drawn from the midpoints of
// all value pairs of P. Any block of P matched to one vertex of C can use the
// midpoint of its range, so the grid loses nothing.
inline std::size_t min_simplification_size(const std::vector<double>& p, double delta) {
  std::vector<double> grid;
  for (double a : p) {
    for (double b : p) grid.push_back((a + b) / 2.0);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const std::size_t n = p.size(), g = grid.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> cost(n * g, kInf);
  std::deque<std::size_t> work;
  const auto fits = [&](std::size_t i, std::size_t c) { return std::fabs(p[i] - grid[c]) <= delta; };
  for (std::size_t c = 0; c < g; ++c) {
    if (fits(0, c)) {
      cost[c] = 1;
      work.push_back(c);
    }
  }
  while (!work.empty()) {
    const std::size_t s = work.front();
    work.pop_front();
    const std::size_t i = s / g, c = s % g;
    if (i + 1 == n) return cost[s];
    const auto relax = [&](std::size_t ni, std::size_t nc, std::size_t w) {
      const std::size_t t = ni * g + nc;
      if (cost[s] + w < cost[t]) {
        cost[t] = cost[s] + w;
        if (w == 0) {
          work.push_front(t);
        } else {
          work.push_back(t);
        }
      }
    };
    if (fits(i + 1, c)) relax(i + 1, c, 0);
    for (std::size_t nc = 0; nc < g; ++nc) {
      if (fits(i + 1, nc)) relax(i + 1, nc, 1);
    }
  }
  return kInf;
}

}  // namespace frechet::testing
