#include "frechet/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "frechet/errors.hpp"

namespace frechet {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("coordinate is not finite");
  }
}

}  // namespace

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::L1:
      return "l1";
    case Norm::L2:
      return "l2";
    case Norm::Linf:
      return "linf";
  }
  return "?";
}

Norm parse_norm(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "l1") return Norm::L1;
  if (lower == "l2") return Norm::L2;
  if (lower == "linf" || lower == "l_inf" || lower == "inf") return Norm::Linf;
  throw std::invalid_argument("unknown norm '" + std::string(text) + "' (expected l1, l2, linf)");
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("point must have dimension >= 1");
  require_finite(coords_);
}

double norm_dist(PointView a, PointView b, Norm norm) {
  require_same_dim(a.size(), b.size());
  const std::size_t d = a.size();
  if (d == 1) return std::abs(a[0] - b[0]);
  switch (norm) {
    case Norm::L1: {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += std::abs(a[k] - b[k]);
      return s;
    }
    case Norm::L2: {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
      }
      return std::sqrt(s);
    }
    case Norm::Linf: {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s = std::max(s, std::abs(a[k] - b[k]));
      return s;
    }
  }
  return 0.0;
}

PolyCurve::PolyCurve(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw std::invalid_argument("curve dimension must be >= 1");
  if (coords_.empty()) throw ContractViolation("curve must have at least one vertex");
  if (coords_.size() % dim_ != 0) {
    throw std::invalid_argument("coordinate count is not a multiple of the dimension");
  }
  require_finite(coords_);
}

PolyCurve PolyCurve::from_points(std::span<const Point> points) {
  if (points.empty()) throw ContractViolation("curve must have at least one vertex");
  const std::size_t d = points.front().dim();
  std::vector<double> coords;
  coords.reserve(points.size() * d);
  for (const Point& p : points) {
    require_same_dim(d, p.dim());
    coords.insert(coords.end(), p.coords().begin(), p.coords().end());
  }
  return PolyCurve(d, std::move(coords));
}

PolyCurve PolyCurve::from_values(std::vector<double> values) {
  return PolyCurve(1, std::move(values));
}

void lerp_into(PointView a, PointView b, double tau, std::span<double> out) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = tau == 1.0 ? b[k] : a[k] + tau * (b[k] - a[k]);
  }
}

Point PolyCurve::at(double t) const {
  const double n = static_cast<double>(size());
  if (!(t >= 1.0 && t <= n)) {
    throw DomainError("parameter " + std::to_string(t) + " outside [1, " +
                      std::to_string(size()) + "]");
  }
  const double fl = std::floor(t);
  const auto i = static_cast<std::size_t>(fl) - 1;
  const double alpha = t - fl;
  std::vector<double> out(vertex(i).begin(), vertex(i).end());
  if (alpha > 0.0) lerp_into(vertex(i), vertex(i + 1), alpha, out);
  return Point(std::move(out));
}

namespace {

void print_coords(std::ostream& out, PointView v) {
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
}

}  // namespace

std::ostream& operator<<(std::ostream& out, const PolyCurve& curve) {
  out << '<';
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (i) out << "; ";
    print_coords(out, curve.vertex(i));
  }
  return out << '>';
}

std::ostream& operator<<(std::ostream& out, const Point& point) {
  out << '(';
  print_coords(out, point);
  return out << ')';
}

PolyCurve concat(const PolyCurve& p, const PolyCurve& q) {
  require_same_dim(p.dim(), q.dim());
  std::vector<double> coords;
  coords.reserve(p.coords().size() + q.coords().size());
  coords.insert(coords.end(), p.coords().begin(), p.coords().end());
  coords.insert(coords.end(), q.coords().begin(), q.coords().end());
  return PolyCurve(p.dim(), std::move(coords));
}

PolyCurve repeat(const PolyCurve& p, std::size_t k) {
  if (k == 0) throw ContractViolation("repeat(P, 0) is empty and has no standalone curve");
  return CurveBuilder(p.dim()).append_repeat(p, k).build();
}

CurveBuilder& CurveBuilder::append(const PolyCurve& part) {
  require_same_dim(dim_, part.dim());
  coords_.insert(coords_.end(), part.coords().begin(), part.coords().end());
  return *this;
}

CurveBuilder& CurveBuilder::append_repeat(const PolyCurve& part, std::size_t times) {
  require_same_dim(dim_, part.dim());
  coords_.reserve(coords_.size() + times * part.coords().size());
  for (std::size_t r = 0; r < times; ++r) append(part);
  return *this;
}

CurveBuilder& CurveBuilder::append_vertex(PointView v) {
  require_same_dim(dim_, v.size());
  coords_.insert(coords_.end(), v.begin(), v.end());
  return *this;
}

PolyCurve CurveBuilder::build() const& {
  if (coords_.empty()) throw ContractViolation("empty composition is not a curve");
  return PolyCurve(dim_, coords_);
}

PolyCurve CurveBuilder::build() && {
  if (coords_.empty()) throw ContractViolation("empty composition is not a curve");
  return PolyCurve(dim_, std::move(coords_));
}

PolyCurve subcurve(const PolyCurve& p, double s, double t) {
  const double n = static_cast<double>(p.size());
  if (!(s >= 1.0 && s <= t && t <= n)) {
    throw DomainError("subcurve range [" + std::to_string(s) + ", " + std::to_string(t) +
                      "] not within [1, " + std::to_string(p.size()) + "]");
  }
  CurveBuilder out(p.dim());
  out.append_vertex(p.at(s));
  if (s == t) return std::move(out).build();
  // Vertex k (zero-based) has parameter k + 1.
  for (std::size_t k = static_cast<std::size_t>(std::floor(s)); k < p.size(); ++k) {
    const double param = static_cast<double>(k + 1);
    if (param >= t) break;
    if (param > s) out.append_vertex(p.vertex(k));
  }
  out.append_vertex(p.at(t));
  return std::move(out).build();
}

namespace {

std::optional<ParamInterval> clip_unit(double lo, double hi) {
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (lo > hi) return std::nullopt;
  return ParamInterval{lo, hi};
}

std::optional<ParamInterval> ball_segment_l2(PointView c, double r, PointView a, PointView b) {
  // |w + tau d|^2 <= r^2 with w = a - c, d = b - a.
  double qa = 0.0, qb = 0.0, qc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double w = a[k] - c[k];
    const double d = b[k] - a[k];
    qa += d * d;
    qb += w * d;
    qc += w * w;
  }
  qc -= r * r;
  if (qa == 0.0) {
    if (qc <= 0.0) return ParamInterval{0.0, 1.0};
    return std::nullopt;
  }
  const double disc = qb * qb - qa * qc;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double q = -(qb + std::copysign(sq, qb));
  double r1, r2;
  if (q == 0.0) {
    r1 = r2 = 0.0;
  } else {
    r1 = q / qa;
    r2 = qc / q;
  }
  return clip_unit(std::min(r1, r2), std::max(r1, r2));
}

std::optional<ParamInterval> ball_segment_linf(PointView c, double r, PointView a, PointView b) {
  double lo = 0.0, hi = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double w = a[k] - c[k];
    const double d = b[k] - a[k];
    if (d == 0.0) {
      if (std::abs(w) > r) return std::nullopt;
      continue;
    }
    double t1 = (-r - w) / d;
    double t2 = (r - w) / d;
    if (t1 > t2) std::swap(t1, t2);
    lo = std::max(lo, t1);
    hi = std::min(hi, t2);
    if (lo > hi) return std::nullopt;
  }
  return ParamInterval{lo, hi};
}

std::optional<ParamInterval> ball_segment_l1(PointView c, double r, PointView a, PointView b) {
  // g(tau) = sum_k |w_k + tau d_k| is convex and piecewise linear; its
  // sublevel set is found from the values at the breakpoints.
  const std::size_t dim = c.size();
  std::vector<double> ts{0.0, 1.0};
  for (std::size_t k = 0; k < dim; ++k) {
    const double d = b[k] - a[k];
    if (d == 0.0) continue;
    const double t = -(a[k] - c[k]) / d;
    if (t > 0.0 && t < 1.0) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  auto g = [&](double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < dim; ++k) s += std::abs((a[k] - c[k]) + t * (b[k] - a[k]));
    return s;
  };
  std::vector<double> gs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) gs[i] = g(ts[i]);

  std::size_t first = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (gs[i] <= r) {
      first = i;
      break;
    }
  }
  if (first == ts.size()) return std::nullopt;
  std::size_t last = first;
  for (std::size_t i = ts.size(); i-- > first;) {
    if (gs[i] <= r) {
      last = i;
      break;
    }
  }
  auto crossing = [&](std::size_t out, std::size_t in) {
    // Linear between the two breakpoints: g(out) > r >= g(in).
    const double frac = (gs[out] - r) / (gs[out] - gs[in]);
    return ts[out] + frac * (ts[in] - ts[out]);
  };
  const double lo = first == 0 ? ts[0] : crossing(first - 1, first);
  const double hi = last + 1 == ts.size() ? ts[last] : crossing(last + 1, last);
  return clip_unit(lo, hi);
}

}  // namespace

namespace {

std::optional<ParamInterval> ball_segment_raw(PointView c, double r, PointView a, PointView b,
                                              Norm norm) {
  // In one dimension every norm is |x| and the Linf form is exact.
  if (c.size() == 1) return ball_segment_linf(c, r, a, b);
  switch (norm) {
    case Norm::L1:
      return ball_segment_l1(c, r, a, b);
    case Norm::L2:
      return ball_segment_l2(c, r, a, b);
    case Norm::Linf:
      return ball_segment_linf(c, r, a, b);
  }
  return std::nullopt;
}

}  // namespace

std::optional<ParamInterval> ball_segment_params(PointView center, double r,
                                                 PointView seg_start, PointView seg_end,
                                                 Norm norm) {
  require_same_dim(center.size(), seg_start.size());
  require_same_dim(center.size(), seg_end.size());
  if (r < 0.0) return std::nullopt;
  // Endpoint membership is decided by norm_dist so that lo == 0 and hi == 1
  // agree exactly with the vertex distance tests used elsewhere.
  const bool start_in = norm_dist(center, seg_start, norm) <= r;
  const bool end_in = norm_dist(center, seg_end, norm) <= r;
  if (start_in && end_in) return ParamInterval{0.0, 1.0};
  auto iv = ball_segment_raw(center, r, seg_start, seg_end, norm);
  constexpr double kTiny = std::numeric_limits<double>::denorm_min();
  if (start_in) return ParamInterval{0.0, iv ? std::min(iv->hi, std::nextafter(1.0, 0.0)) : 0.0};
  if (end_in) return ParamInterval{iv ? std::max(iv->lo, kTiny) : 1.0, 1.0};
  if (!iv) return std::nullopt;
  iv->lo = std::max(iv->lo, kTiny);
  iv->hi = std::min(iv->hi, std::nextafter(1.0, 0.0));
  if (iv->lo > iv->hi) return std::nullopt;
  return iv;
}

double bbox_diagonal(const PolyCurve& p, Norm norm) {
  const std::size_t d = p.dim();
  std::vector<double> lo(p.front().begin(), p.front().end());
  std::vector<double> hi = lo;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const PointView v = p.vertex(i);
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  }
  return norm_dist(lo, hi, norm);
}

}  // namespace frechet
