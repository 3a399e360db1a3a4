#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace frechet {

enum class Norm { L1, L2, Linf };

std::string_view to_string(Norm norm);
// Accepts "l1", "l2", "linf" (case-insensitive); throws std::invalid_argument.
Norm parse_norm(std::string_view text);

using PointView = std::span<const double>;

// A point in R^d with finite coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t k) const { return coords_[k]; }
  PointView view() const { return coords_; }
  operator PointView() const { return coords_; }  // NOLINT(google-explicit-constructor)
  const std::vector<double>& coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

// Distance between two points of equal dimension under the given norm.
double norm_dist(PointView a, PointView b, Norm norm);

// Polygonal curve <P(1), ..., P(n)> in R^d, n >= 1, parametrized over [1, n]
// with P(i + alpha) = (1 - alpha) P(i) + alpha P(i + 1).
//
// Vertices are stored in one flat coordinate buffer. vertex(k) is zero-based;
// the parametric API (at, subcurve) uses the one-based domain [1, n].
// Consecutive vertices may coincide.
class PolyCurve {
 public:
  // `coords` holds size() * dim values, vertex-major.
  PolyCurve(std::size_t dim, std::vector<double> coords);

  static PolyCurve from_points(std::span<const Point> points);
  // One-dimensional curve from its vertex values.
  static PolyCurve from_values(std::vector<double> values);

  std::size_t size() const { return coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }

  PointView vertex(std::size_t k) const { return {coords_.data() + k * dim_, dim_}; }
  PointView front() const { return vertex(0); }
  PointView back() const { return vertex(size() - 1); }
  // Only for dim() == 1.
  double value(std::size_t k) const { return coords_[k]; }

  const std::vector<double>& coords() const { return coords_; }

  // Point at parameter t in [1, size()]; throws DomainError otherwise.
  Point at(double t) const;

  friend bool operator==(const PolyCurve&, const PolyCurve&) = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

// Debug form: <v1; v2; ...> with comma-separated coordinates.
std::ostream& operator<<(std::ostream& out, const PolyCurve& curve);
std::ostream& operator<<(std::ostream& out, const Point& point);

// Vertex sequence P(1..n) followed by Q(1..m).
PolyCurve concat(const PolyCurve& p, const PolyCurve& q);
// k >= 1 copies of p; k == 0 has no standalone curve and throws ContractViolation.
PolyCurve repeat(const PolyCurve& p, std::size_t k);

// Accumulates a composition P_1 o P_2 o ... in which empty factors such as
// repeat(P, 0) act as the identity.
class CurveBuilder {
 public:
  explicit CurveBuilder(std::size_t dim) : dim_(dim) {}

  CurveBuilder& append(const PolyCurve& part);
  CurveBuilder& append_repeat(const PolyCurve& part, std::size_t times);
  CurveBuilder& append_vertex(PointView v);

  bool empty() const { return coords_.empty(); }
  std::size_t size() const { return coords_.size() / dim_; }
  // Throws ContractViolation if nothing was appended.
  PolyCurve build() const&;
  PolyCurve build() &&;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

// P restricted to [s, t], 1 <= s <= t <= n. The result starts at P(s), ends at
// P(t) and keeps the original vertices with parameters strictly inside (s, t).
// A degenerate range s == t yields the one-vertex curve <P(s)>.
PolyCurve subcurve(const PolyCurve& p, double s, double t);

// Closed parameter range [lo, hi] within [0, 1].
struct ParamInterval {
  double lo;
  double hi;
  friend bool operator==(const ParamInterval&, const ParamInterval&) = default;
};

// Parameters tau in [0, 1] with |center - lerp(seg_start, seg_end, tau)| <= r,
// or nullopt. The set is convex; closed forms per norm, no iteration.
std::optional<ParamInterval> ball_segment_params(PointView center, double r,
                                                 PointView seg_start, PointView seg_end,
                                                 Norm norm);

// Norm-length of the bounding-box diagonal of the curve's vertices.
double bbox_diagonal(const PolyCurve& p, Norm norm);

// Linear interpolation a + tau (b - a), written into `out`.
void lerp_into(PointView a, PointView b, double tau, std::span<double> out);

}  // namespace frechet
