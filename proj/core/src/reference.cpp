#include "frechet/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "frechet/errors.hpp"

namespace frechet {

namespace {

void require_same_dim(const PolyCurve& p, const PolyCurve& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("curves have dimensions " + std::to_string(p.dim()) + " and " +
                            std::to_string(q.dim()));
  }
}

}  // namespace

double discrete_frechet_exact(const PolyCurve& p, const PolyCurve& q, Norm norm) {
  require_same_dim(p, q);
  // The value is symmetric, so the rolling row runs along the shorter curve.
  const PolyCurve& outer = p.size() >= q.size() ? p : q;
  const PolyCurve& inner = p.size() >= q.size() ? q : p;
  const std::size_t cols = inner.size();
  std::vector<double> row(cols);
  row[0] = norm_dist(outer.vertex(0), inner.vertex(0), norm);
  for (std::size_t j = 1; j < cols; ++j) {
    row[j] = std::max(row[j - 1], norm_dist(outer.vertex(0), inner.vertex(j), norm));
  }
  for (std::size_t i = 1; i < outer.size(); ++i) {
    const PointView a = outer.vertex(i);
    double diag = row[0];
    row[0] = std::max(row[0], norm_dist(a, inner.vertex(0), norm));
    for (std::size_t j = 1; j < cols; ++j) {
      const double best = std::min({diag, row[j], row[j - 1]});
      diag = row[j];
      row[j] = std::max(best, norm_dist(a, inner.vertex(j), norm));
    }
  }
  return row[cols - 1];
}

ReachMatrix discrete_reach_matrix(const PolyCurve& p, const PolyCurve& q, double delta,
                                  Norm norm) {
  require_same_dim(p, q);
  ReachMatrix out;
  out.rows = p.size();
  out.cols = q.size();
  out.cells.assign(out.rows * out.cols, 0);
  for (std::size_t i = 0; i < out.rows; ++i) {
    for (std::size_t j = 0; j < out.cols; ++j) {
      if (norm_dist(p.vertex(i), q.vertex(j), norm) > delta) continue;
      bool reach = i == 0 && j == 0;
      if (i > 0 && out.at(i - 1, j)) reach = true;
      if (j > 0 && out.at(i, j - 1)) reach = true;
      if (i > 0 && j > 0 && out.at(i - 1, j - 1)) reach = true;
      out.cells[i * out.cols + j] = reach ? 1 : 0;
    }
  }
  return out;
}

bool discrete_frechet_decide(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm) {
  require_same_dim(p, q);
  const std::size_t cols = q.size();
  std::vector<char> row(cols, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const PointView a = p.vertex(i);
    char diag = 0;
    bool any = false;
    for (std::size_t j = 0; j < cols; ++j) {
      const char up = row[j];
      bool reach = i == 0 && j == 0;
      reach = reach || up || diag || (j > 0 && row[j - 1]);
      reach = reach && norm_dist(a, q.vertex(j), norm) <= delta;
      diag = up;
      row[j] = reach ? 1 : 0;
      any = any || reach;
    }
    if (!any) return false;
  }
  return row[cols - 1] != 0;
}

namespace {

using Interval = std::optional<ParamInterval>;

// Part of `free` reachable from an entry point at parameter >= lo.
Interval clip_from(const Interval& free, double lo) {
  if (!free || free->hi < lo) return std::nullopt;
  return ParamInterval{std::max(free->lo, lo), free->hi};
}

// Reachable intervals on the bottom boundaries of the cells of one row of the
// free-space diagram (one entry per edge of P).
struct FreeSpaceRow {
  std::vector<Interval> bottom;
};

bool all_within(PointView center, const PolyCurve& curve, double delta, Norm norm) {
  for (std::size_t k = 0; k < curve.size(); ++k) {
    if (norm_dist(center, curve.vertex(k), norm) > delta) return false;
  }
  return true;
}

}  // namespace

bool continuous_frechet_decide(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm) {
  require_same_dim(p, q);
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  if (norm_dist(p.front(), q.front(), norm) > delta) return false;
  if (norm_dist(p.back(), q.back(), norm) > delta) return false;
  // A single point is within delta of a curve iff it is within delta of every
  // vertex, by convexity of the ball.
  if (n == 1) return all_within(p.front(), q, delta, norm);
  if (m == 1) return all_within(q.front(), p, delta, norm);

  const std::size_t edges = n - 1;
  FreeSpaceRow row;
  row.bottom.resize(edges);
  bool alive = true;
  for (std::size_t i = 0; i < edges; ++i) {
    if (!alive) break;
    auto f = ball_segment_params(q.front(), delta, p.vertex(i), p.vertex(i + 1), norm);
    if (!f || f->lo != 0.0) break;
    row.bottom[i] = f;
    alive = f->hi == 1.0;
  }

  bool left_alive = true;
  Interval left;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const PointView q0 = q.vertex(j);
    const PointView q1 = q.vertex(j + 1);
    left.reset();
    if (left_alive) {
      auto f = ball_segment_params(p.front(), delta, q0, q1, norm);
      if (f && f->lo == 0.0) left = f;
      left_alive = left && left->hi == 1.0;
    }
    for (std::size_t i = 0; i < edges; ++i) {
      const Interval& bottom = row.bottom[i];
      Interval top, right;
      if (left || bottom) {
        const auto top_free = ball_segment_params(q1, delta, p.vertex(i), p.vertex(i + 1), norm);
        const auto right_free = ball_segment_params(p.vertex(i + 1), delta, q0, q1, norm);
        top = left ? top_free : clip_from(top_free, bottom->lo);
        right = bottom ? right_free : clip_from(right_free, left->lo);
      }
      row.bottom[i] = top;
      left = right;
    }
  }
  return (left && left->hi == 1.0) || (row.bottom[edges - 1] && row.bottom[edges - 1]->hi == 1.0);
}

double continuous_frechet_value_ref(const PolyCurve& p, const PolyCurve& q, Norm norm,
                                    double rel_tol) {
  require_same_dim(p, q);
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
  // Both endpoint pairs must be matched, and the continuous distance never
  // exceeds the discrete one.
  const double lb =
      std::max(norm_dist(p.front(), q.front(), norm), norm_dist(p.back(), q.back(), norm));
  if (continuous_frechet_decide(p, q, lb, norm)) return lb;
  double lo = lb;
  double hi = discrete_frechet_exact(p, q, norm);
  while (hi > lo * (1.0 + rel_tol)) {
    const double mid = lo == 0.0 ? hi / 2.0 : lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (continuous_frechet_decide(p, q, mid, norm)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

namespace {

void enumerate_matchings(const PolyCurve& p, const PolyCurve& q, Norm norm, std::size_t i,
                         std::size_t j, double cost, double& best) {
  cost = std::max(cost, norm_dist(p.vertex(i), q.vertex(j), norm));
  if (i + 1 == p.size() && j + 1 == q.size()) {
    best = std::min(best, cost);
    return;
  }
  if (i + 1 < p.size()) enumerate_matchings(p, q, norm, i + 1, j, cost, best);
  if (j + 1 < q.size()) enumerate_matchings(p, q, norm, i, j + 1, cost, best);
  if (i + 1 < p.size() && j + 1 < q.size()) {
    enumerate_matchings(p, q, norm, i + 1, j + 1, cost, best);
  }
}

}  // namespace

double brute_force_discrete(const PolyCurve& p, const PolyCurve& q, Norm norm) {
  require_same_dim(p, q);
  if (p.size() + q.size() > kBruteForceMaxVertices) {
    throw ContractViolation("brute force limited to |P| + |Q| <= " +
                            std::to_string(kBruteForceMaxVertices));
  }
  double best = std::numeric_limits<double>::infinity();
  enumerate_matchings(p, q, norm, 0, 0, 0.0, best);
  return best;
}

}  // namespace frechet
