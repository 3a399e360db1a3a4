#include "frechet/approx.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "frechet/errors.hpp"
#include "frechet/reference.hpp"

namespace frechet {

std::string_view to_string(MatchMode mode) {
  return mode == MatchMode::Continuous ? "continuous" : "discrete";
}

MatchMode parse_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "continuous") return MatchMode::Continuous;
  if (lower == "discrete") return MatchMode::Discrete;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected continuous, discrete)");
}

namespace {

using Vec = std::vector<double>;

Vec point_at(const PolyCurve& c, double param) {
  const std::size_t last = c.size() - 1;
  const auto e = std::min(static_cast<std::size_t>(param), last);
  Vec out(c.vertex(e).begin(), c.vertex(e).end());
  const double alpha = param - static_cast<double>(e);
  if (alpha > 0.0 && e < last) lerp_into(c.vertex(e), c.vertex(e + 1), alpha, out);
  return out;
}

Vec lerp(PointView a, PointView b, double tau) {
  Vec out(a.size());
  lerp_into(a, b, tau, out);
  return out;
}

// First tau from `from` towards `to` whose rounded point passes `ok`: the
// end itself, then points at geometrically growing distance from it. Falls
// back to `from` when none passes.
template <class Ok>
double settle(double from, double to, Ok ok) {
  if (ok(from) || from == to) return from;
  for (int k = 48; k >= 0; k -= 4) {
    const double tau = from + (to - from) * std::ldexp(1.0, -k);
    if (ok(tau)) return tau;
  }
  return from;
}

// Earliest zero-based Q-parameter >= start whose point is within delta of
// `center`, scanning edges forward. The returned parameter is nudged into the
// ball if rounding puts the computed point just outside.
std::optional<double> earliest_on_q(const PolyCurve& q, PointView center, double delta,
                                    std::size_t start, Norm norm) {
  const std::size_t m = q.size();
  if (start + 1 < m) {
    for (std::size_t e = start; e + 1 < m; ++e) {
      if (auto iv = ball_segment_params(center, delta, q.vertex(e), q.vertex(e + 1), norm)) {
        const double base = static_cast<double>(e);
        return base + settle(iv->lo, iv->hi, [&](double tau) {
                 return norm_dist(point_at(q, base + tau), center, norm) <= delta;
               });
      }
    }
    return std::nullopt;
  }
  if (start + 1 == m && norm_dist(center, q.vertex(start), norm) <= delta) {
    return static_cast<double>(start);
  }
  return std::nullopt;
}

// The segment Q(s) -> Q(floor(s) + 1) a round may match against.
struct Window {
  double s = 0.0;
  double end = 0.0;
  Vec from;
  Vec to;

  double q_param(double tau) const { return s + tau * (end - s); }
};

Window make_window(const PolyCurve& q, double s) {
  Window w;
  w.s = s;
  const auto base = static_cast<std::size_t>(std::floor(s));
  const std::size_t end = std::min(base + 1, q.size() - 1);
  w.end = static_cast<double>(end);
  w.from = point_at(q, s);
  w.to = Vec(q.vertex(end).begin(), q.vertex(end).end());
  return w;
}

struct CellPoint {
  double x = 0.0;    // along the P sub-edge, in [0, 1]
  double tau = 0.0;  // along the window segment
};

// Largest x in [0, 1] for which some tau in [tau_lo, 1] has
// |pl + x (pr - pl) - (s0 + tau (s1 - s0))| <= delta. The region is convex,
// so its rightmost point lies on the strip boundary or on a line where the
// norm is not smooth (L1, Linf) or where the tau-derivative vanishes (L2).
// Each candidate line is handled exactly by the ball-segment closed form.
CellPoint cell_rightmost(PointView pl, PointView pr, PointView s0, PointView s1, double tau_lo,
                         double delta, Norm norm) {
  const std::size_t d = pl.size();
  Vec w(d), dp(d), ds(d);
  for (std::size_t k = 0; k < d; ++k) {
    w[k] = pl[k] - s0[k];
    dp[k] = pr[k] - pl[k];
    ds[k] = s1[k] - s0[k];
  }
  const Vec zero(d, 0.0);
  Vec da(d), db(d);
  CellPoint best{0.0, tau_lo};

  const auto along = [&](double xa, double ta, double xb, double tb) {
    for (std::size_t k = 0; k < d; ++k) {
      da[k] = w[k] + xa * dp[k] - ta * ds[k];
      db[k] = w[k] + xb * dp[k] - tb * ds[k];
    }
    const auto iv = ball_segment_params(zero, delta, da, db, norm);
    if (!iv) return;
    for (double lam : {iv->lo, iv->hi}) {
      const CellPoint c{xa + lam * (xb - xa), ta + lam * (tb - ta)};
      if (c.x > best.x || (c.x == best.x && c.tau > best.tau)) best = c;
    }
  };
  // Line a x + b tau + c = 0 clipped to [0, 1] x [tau_lo, 1].
  const auto line = [&](double a, double b, double c) {
    if (b != 0.0) {
      double x0 = 0.0, x1 = 1.0;
      if (a != 0.0) {
        double xa = -(c + b * tau_lo) / a;
        double xb = -(c + b * 1.0) / a;
        if (xa > xb) std::swap(xa, xb);
        x0 = std::max(x0, xa);
        x1 = std::min(x1, xb);
      } else {
        const double t = -c / b;
        if (t < tau_lo || t > 1.0) return;
      }
      if (x0 > x1) return;
      const auto tau_of = [&](double x) { return std::clamp(-(a * x + c) / b, tau_lo, 1.0); };
      along(x0, tau_of(x0), x1, tau_of(x1));
    } else if (a != 0.0) {
      const double x = -c / a;
      if (x < 0.0 || x > 1.0) return;
      along(x, tau_lo, x, 1.0);
    }
  };

  along(0.0, tau_lo, 1.0, tau_lo);
  if (tau_lo < 1.0) along(0.0, 1.0, 1.0, 1.0);
  if (d == 1 || norm == Norm::L1) {
    for (std::size_t k = 0; k < d; ++k) line(dp[k], -ds[k], w[k]);
  } else if (norm == Norm::Linf) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = k + 1; l < d; ++l) {
        for (double sg : {1.0, -1.0}) {
          line(dp[k] - sg * dp[l], -(ds[k] - sg * ds[l]), w[k] - sg * w[l]);
        }
      }
    }
  } else {
    double a = 0.0, b = 0.0, c = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      a += dp[k] * ds[k];
      b -= ds[k] * ds[k];
      c += w[k] * ds[k];
    }
    if (b != 0.0) line(a, b, c);
  }
  return best;
}

struct Builder {
  std::vector<double> coords;
  std::vector<Anchor> anchors;

  void add(const Window& win, double tau, const Vec& last_point) {
    coords.insert(coords.end(), win.from.begin(), win.from.end());
    coords.insert(coords.end(), last_point.begin(), last_point.end());
    anchors.push_back({win.s + 1.0, win.q_param(tau) + 1.0});
  }
  SimplifyOutcome finish(std::size_t dim) && {
    return {PolyCurve(dim, std::move(coords)), std::move(anchors)};
  }
};

SimplifyOutcome simplify_continuous(const PolyCurve& p, const PolyCurve& q, double delta,
                                    Norm norm) {
  const std::size_t n = p.size();
  Builder out;
  double a = 0.0;
  std::size_t start = 0;
  while (true) {
    const Vec pa = point_at(p, a);
    const auto s = earliest_on_q(q, pa, delta, start, norm);
    if (!s) return {};
    const Window win = make_window(q, *s);

    // Reachable window parameters on the vertical line through the current
    // P-position, starting from (a, 0) which is free by the search above.
    const auto first = ball_segment_params(pa, delta, win.from, win.to, norm);
    ParamInterval reach{0.0, first ? first->hi : 0.0};
    double x_left = a;
    bool done = true;
    double cut = static_cast<double>(n - 1);
    double tau_cut = 0.0;
    for (auto c = static_cast<std::size_t>(std::floor(a)); c + 1 < n; ++c) {
      const auto right = ball_segment_params(p.vertex(c + 1), delta, win.from, win.to, norm);
      if (right && right->hi >= reach.lo) {
        reach = {std::max(right->lo, reach.lo), right->hi};
        x_left = static_cast<double>(c + 1);
        continue;
      }
      const Vec pl = point_at(p, x_left);
      const CellPoint best =
          cell_rightmost(pl, p.vertex(c + 1), win.from, win.to, reach.lo, delta, norm);
      cut = x_left + best.x * (static_cast<double>(c + 1) - x_left);
      tau_cut = best.tau;
      const Vec pcut = point_at(p, cut);
      const Vec from_lo = lerp(win.from, win.to, reach.lo);
      if (auto iv = ball_segment_params(pcut, delta, from_lo, win.to, norm)) {
        tau_cut = std::max(tau_cut, reach.lo + iv->hi * (1.0 - reach.lo));
      }
      done = false;
      break;
    }
    if (done) tau_cut = reach.hi;
    out.add(win, tau_cut, lerp(win.from, win.to, tau_cut));
    if (done) return std::move(out).finish(p.dim());
    a = cut;
    start = static_cast<std::size_t>(std::floor(*s)) + 1;
  }
}

SimplifyOutcome simplify_discrete(const PolyCurve& p, const PolyCurve& q, double delta,
                                  Norm norm) {
  const std::size_t n = p.size();
  Builder out;
  std::size_t a = 0;
  std::size_t start = 0;
  while (true) {
    const auto s = earliest_on_q(q, p.vertex(a), delta, start, norm);
    if (!s) return {};
    const Window win = make_window(q, *s);

    // Vertices a..prefix go to Q(s); the rest of the round shares Q(t).
    std::size_t prefix = a;
    while (prefix + 1 < n && norm_dist(p.vertex(prefix + 1), win.from, norm) <= delta) ++prefix;
    std::size_t last = prefix;
    ParamInterval common{0.0, 1.0};
    for (std::size_t v = prefix + 1; v < n; ++v) {
      const auto iv = ball_segment_params(p.vertex(v), delta, win.from, win.to, norm);
      if (!iv || iv->lo > common.hi || iv->hi < common.lo) break;
      common = {std::max(common.lo, iv->lo), std::min(common.hi, iv->hi)};
      last = v;
    }
    double tau = 0.0;
    if (last > prefix) {
      tau = settle(common.hi, common.lo, [&](double x) {
        const Vec at = lerp(win.from, win.to, x);
        for (std::size_t v = prefix + 1; v <= last; ++v) {
          if (norm_dist(p.vertex(v), at, norm) > delta) return false;
        }
        return true;
      });
    }
    out.add(win, tau, lerp(win.from, win.to, tau));
    if (last + 1 == n) return std::move(out).finish(p.dim());
    a = last + 1;
    start = static_cast<std::size_t>(std::floor(*s)) + 1;
  }
}

void require_same_dim(const PolyCurve& p, const PolyCurve& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("curves have dimensions " + std::to_string(p.dim()) + " and " +
                            std::to_string(q.dim()));
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

double rounding_allowance(const PolyCurve& q, double delta) {
  double scale = delta;
  for (double c : q.coords()) scale = std::max(scale, std::fabs(c));
  const double per_coord = kRoundingUlps * std::numeric_limits<double>::epsilon() * scale;
  return per_coord * static_cast<double>(q.dim());
}

Decision decide_timed(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm,
                      MatchMode mode, ApproxResult* stats) {
  auto t0 = std::chrono::steady_clock::now();
  const SimplifyOutcome simp = simplify_against_query(p, q, delta, norm, mode);
  if (stats) stats->simplify_ms += elapsed_ms(t0);
  if (simp.exceeds_delta()) return Decision::GreaterThanDelta;
  t0 = std::chrono::steady_clock::now();
  // P' vertices are rounded points of Q; allow for that in the 2 delta test.
  const double limit = 2.0 * delta + rounding_allowance(q, delta);
  const bool close = mode == MatchMode::Continuous
                         ? continuous_frechet_decide(*simp.curve, q, limit, norm)
                         : discrete_frechet_decide(*simp.curve, q, limit, norm);
  if (stats) stats->decide_ms += elapsed_ms(t0);
  return close ? Decision::AtMostThreeDelta : Decision::GreaterThanDelta;
}

}  // namespace

SimplifyOutcome simplify_against_query(const PolyCurve& p, const PolyCurve& q, double delta,
                                       Norm norm, MatchMode mode) {
  require_same_dim(p, q);
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  return mode == MatchMode::Continuous ? simplify_continuous(p, q, delta, norm)
                                       : simplify_discrete(p, q, delta, norm);
}

Decision decide_3approx(const PolyCurve& p, const PolyCurve& q, double delta, Norm norm,
                        MatchMode mode) {
  return decide_timed(p, q, delta, norm, mode, nullptr);
}

ApproxResult approx_value(const PolyCurve& p, const PolyCurve& q, double eps, Norm norm,
                          MatchMode mode) {
  require_same_dim(p, q);
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
  ApproxResult res;
  if (p == q) return res;
  const auto probe = [&](double delta) {
    ++res.probes;
    return decide_timed(p, q, delta, norm, mode, &res) == Decision::AtMostThreeDelta;
  };

  const double start_gap = norm_dist(p.front(), q.front(), norm);
  double lb = std::max(start_gap, norm_dist(p.back(), q.back(), norm));
  const double ub = start_gap + bbox_diagonal(p, norm) + bbox_diagonal(q, norm);
  if (ub == 0.0) return res;
  if (lb == 0.0) {
    const double floor_delta = ub * kZeroProbeFactor;
    if (probe(floor_delta)) {
      res.interval = {0.0, 3.0 * floor_delta};
      return res;
    }
    lb = floor_delta;
  }

  const double step = 1.0 + eps / 3.0;
  const auto grid = [&](long long k) { return lb * std::pow(step, static_cast<double>(k)); };
  long long top = std::max(0LL, static_cast<long long>(std::ceil(std::log(ub / lb) / std::log(step))));
  while (grid(top) < ub) ++top;
  // Any delta >= d(P, Q) is accepted; the bound ub is only guarded here
  // against rounding in the simplification.
  while (!probe(grid(top))) {
    if (top > (1LL << 40)) throw std::logic_error("no accepting grid value found");
    top = 2 * top + 1;
  }
  // Invariant: grid(lo) answered GreaterThanDelta (lo == -1 stands for the
  // certified bound lb) and grid(hi) answered AtMostThreeDelta.
  long long lo = -1, hi = top;
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (probe(grid(mid))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  res.interval = {lo < 0 ? lb : grid(lo), 3.0 * grid(hi)};
  return res;
}

}  // namespace frechet
