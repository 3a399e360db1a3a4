#include "frechet/oracle_1d.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "frechet/errors.hpp"
#include "frechet/reference.hpp"

namespace frechet {

namespace {

void require_1d(const PolyCurve& c, const char* what) {
  if (c.dim() != 1) {
    throw DimensionMismatch(std::string(what) + " must be one-dimensional, got dimension " +
                            std::to_string(c.dim()));
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

SimplificationResult simplify_delta(const PolyCurve& p, double delta) {
  require_1d(p, "curve");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be non-negative");
  const double width = 2.0 * delta;
  SimplificationResult out;
  out.delta = delta;
  double lo = p.value(0);
  double hi = lo;
  for (std::size_t x = 1; x < p.size(); ++x) {
    const double v = p.value(x);
    if (std::max(hi, v) - std::min(lo, v) <= width) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      continue;
    }
    out.centers.push_back((lo + hi) / 2.0);
    out.breakpoints.push_back(x);
    lo = hi = v;
  }
  // The printed greedy loop never emits its last block.
  out.centers.push_back((lo + hi) / 2.0);
  out.breakpoints.push_back(p.size());
  return out;
}

std::size_t count_blocks(const PolyCurve& p, double delta, std::size_t cap) {
  require_1d(p, "curve");
  const double width = 2.0 * delta;
  std::size_t blocks = 1;
  double lo = p.value(0);
  double hi = lo;
  for (std::size_t x = 1; x < p.size(); ++x) {
    const double v = p.value(x);
    if (std::max(hi, v) - std::min(lo, v) <= width) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    } else {
      if (++blocks > cap) return blocks;
      lo = hi = v;
    }
  }
  return blocks;
}

DeltaSelection select_delta_m(const PolyCurve& p, std::size_t m) {
  require_1d(p, "curve");
  if (m == 0) throw ContractViolation("budget m must be >= 1");
  DeltaSelection sel;
  ++sel.greedy_calls;
  if (count_blocks(p, 0.0, m) <= m) {
    sel.pstar = simplify_delta(p, 0.0);
    return sel;
  }

  // Candidate widths are the differences s[j] - s[i], j > i, of the sorted
  // values: row i of an implicit matrix sorted along every row. Keep per-row
  // windows of candidates strictly between the largest failing width and the
  // smallest succeeding one, and test a uniformly random candidate from them.
  std::vector<double> s(p.coords());
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();
  double fail_w = 0.0;
  double ok_w = s.back() - s.front();  // one block always suffices
  std::vector<std::size_t> lo(n), hi(n);
  std::mt19937_64 rng(0x5eed5eedULL);

  while (true) {
    std::size_t total = 0;
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a = std::max(a, i + 1);
      while (a < n && s[a] - s[i] <= fail_w) ++a;
      b = std::max(b, a);
      while (b < n && s[b] - s[i] < ok_w) ++b;
      lo[i] = a;
      hi[i] = b;
      total += b - a;
    }
    if (total == 0) break;
    std::size_t rank = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
    double pivot = ok_w;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t len = hi[i] - lo[i];
      if (rank < len) {
        pivot = s[lo[i] + rank] - s[i];
        break;
      }
      rank -= len;
    }
    ++sel.greedy_calls;
    if (count_blocks(p, pivot / 2.0, m) <= m) {
      ok_w = pivot;
    } else {
      fail_w = pivot;
    }
  }
  sel.delta_m = ok_w / 2.0;
  sel.pstar = simplify_delta(p, sel.delta_m);
  return sel;
}

std::size_t CompressedSimplification::expanded_size() const {
  std::size_t total = 0;
  for (std::size_t k : counts) total += k;
  return total;
}

double CompressedSimplification::run_value(std::size_t run, std::size_t offset) const {
  const double half = delta_m / 2.0;
  const double sign = offset % 2 == 0 ? signs[run] : -signs[run];
  return centers[run] + sign * half;
}

void CompressedSimplification::validate() const {
  if (!std::isfinite(delta_m) || delta_m < 0.0) throw FormatError("delta_m must be finite and >= 0");
  if (centers.empty()) throw FormatError("compressed simplification has no runs");
  if (counts.size() != centers.size() || signs.size() != centers.size()) {
    throw FormatError("centers, counts and signs differ in length");
  }
  for (std::size_t i = 0; i < runs(); ++i) {
    if (!std::isfinite(centers[i])) throw FormatError("center is not finite");
    if (counts[i] == 0) throw FormatError("run count must be >= 1");
    if (signs[i] != 1 && signs[i] != -1) throw FormatError("sign must be -1 or 1");
    if (delta_m == 0.0 && counts[i] != 1) throw FormatError("delta_m == 0 requires unit runs");
    if (i > 0 && run_value(i - 1, counts[i - 1] - 1) == run_value(i, 0)) {
      throw FormatError("consecutive runs repeat a vertex");
    }
  }
}

CompressedSimplification build_compressed(const PolyCurve& p, const SimplificationResult& pstar,
                                          double delta_m) {
  require_1d(p, "curve");
  if (pstar.centers.empty() || pstar.breakpoints.size() != pstar.centers.size() ||
      pstar.breakpoints.back() != p.size()) {
    throw ContractViolation("simplification does not cover the curve");
  }
  const double half = delta_m / 2.0;
  CompressedSimplification cs;
  cs.delta_m = delta_m;
  bool have_prev = false;
  double prev = 0.0;
  std::size_t x = 0;
  for (std::size_t y = 0; y < pstar.size(); ++y) {
    const double center = pstar.centers[y];
    const std::size_t end = pstar.breakpoints[y];
    if (end <= x) throw ContractViolation("breakpoints are not increasing");
    std::size_t count = 0;
    int sign = 1;
    for (; x < end; ++x) {
      const double r = p.value(x) < center ? center - half : center + half;
      if (have_prev && r == prev) continue;
      if (count == 0) sign = r == center - half && half > 0.0 ? -1 : 1;
      ++count;
      prev = r;
      have_prev = true;
    }
    // Each block keeps a vertex: losing its only one would need a value that
    // fits into the previous greedy block.
    if (count == 0) throw ContractViolation("simplification block collapsed");
    cs.centers.push_back(center);
    cs.counts.push_back(count);
    cs.signs.push_back(sign);
  }
  return cs;
}

PolyCurve expand_compressed(const CompressedSimplification& cs) {
  std::vector<double> values;
  values.reserve(cs.expanded_size());
  for (std::size_t i = 0; i < cs.runs(); ++i) {
    for (std::size_t x = 0; x < cs.counts[i]; ++x) values.push_back(cs.run_value(i, x));
  }
  return PolyCurve::from_values(std::move(values));
}

namespace {

// How one query value relates to the two values of a run of P'.
enum class Column : std::uint8_t { None, Alternating, Full };

struct ColumnClass {
  Column kind = Column::None;
  int near = 0;  // parity of the run value within reach, for Alternating
};

}  // namespace

bool decide_compressed_at(const CompressedSimplification& cs, const PolyCurve& q,
                          double threshold) {
  require_1d(q, "query");
  if (threshold < 1.5 * cs.delta_m) {
    throw ContractViolation("threshold below 1.5 * delta_m");
  }
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const std::size_t m = q.size();
  std::vector<char> reach_prev(m + 1, 0);
  std::vector<char> reach(m + 1, 0);
  reach[0] = 1;
  std::vector<ColumnClass> cls(m + 1);
  std::deque<std::int64_t> markers;

  for (std::size_t run = 0; run < cs.runs(); ++run) {
    const auto k = static_cast<std::int64_t>(cs.counts[run]);
    const double values[2] = {cs.run_value(run, 0), cs.run_value(run, 1)};
    const auto within = [&](std::int64_t offset, double qv) {
      return std::abs(values[offset % 2] - qv) <= threshold;
    };
    for (std::size_t j = 1; j <= m; ++j) {
      const double qv = q.value(j - 1);
      const bool w0 = within(0, qv);
      const bool w1 = within(1, qv);
      if (w0 && w1) {
        cls[j] = {Column::Full, 0};
      } else if (w0 || w1) {
        cls[j] = {Column::Alternating, w0 ? 0 : 1};
      } else {
        cls[j] = {Column::None, 0};
      }
    }

    std::swap(reach_prev, reach);
    std::fill(reach.begin(), reach.end(), 0);
    markers.clear();
    std::int64_t a = kInf;  // every offset >= a is reachable where within reach
    std::int64_t u = 0;     // shift applied to the markers since the last collapse
    bool any = false;

    for (std::size_t j = 1; j <= m; ++j) {
      const double qv = q.value(j - 1);
      const ColumnClass c = cls[j];
      if (c.kind == Column::None) {
        markers.clear();
        a = kInf;
        u = 0;
      }
      if (j > 1 && c.kind == Column::Alternating && cls[j - 1].kind == Column::Alternating &&
          cls[j - 1].near != c.near) {
        if (a != kInf) ++a;
        ++u;
      }
      if ((reach_prev[j] || reach_prev[j - 1]) && within(0, qv)) {
        if (markers.empty() || markers.back() != u) markers.push_back(u);
      }
      if (c.kind == Column::Full) {
        std::int64_t base = a;
        // Coming from an alternating column, offset a itself may have the
        // wrong parity there; the next one is then the first reachable.
        if (a != kInf && j > 1 && cls[j - 1].kind == Column::Alternating &&
            !within(a, q.value(j - 2))) {
          base = a + 1;
        }
        if (!markers.empty()) base = std::min(base, u - markers.back());
        a = base;
        markers.clear();
        u = 0;
      }
      while (!markers.empty() && markers.front() <= u - k) markers.pop_front();
      if (within(k - 1, qv) && (a < k || (!markers.empty() && markers.front() == u - k + 1))) {
        reach[j] = 1;
        any = true;
      }
    }
    if (!any) return false;
  }
  return reach[m] != 0;
}

bool decide_compressed(const CompressedSimplification& cs, const PolyCurve& q, double delta) {
  if (delta < cs.delta_m) throw ContractViolation("delta below delta_m");
  return decide_compressed_at(cs, q, 1.5 * delta);
}

OracleHandle preprocess(const PolyCurve& p, std::size_t m) {
  require_1d(p, "curve");
  if (m == 0) throw ContractViolation("budget m must be >= 1");
  OracleHandle h;
  h.m = m;
  h.n = p.size();
  auto t0 = std::chrono::steady_clock::now();
  DeltaSelection sel = select_delta_m(p, m);
  h.build_stats.select_ms = elapsed_ms(t0);
  h.build_stats.greedy_calls = sel.greedy_calls;
  t0 = std::chrono::steady_clock::now();
  h.cs = build_compressed(p, sel.pstar, sel.delta_m);
  h.build_stats.compress_ms = elapsed_ms(t0);
  return h;
}

ApproxInterval query(const OracleHandle& oracle, const PolyCurve& q, QueryStats* stats) {
  require_1d(q, "query");
  if (q.size() > oracle.m) {
    throw ContractViolation("query complexity " + std::to_string(q.size()) +
                            " exceeds the oracle budget m = " + std::to_string(oracle.m));
  }
  QueryStats local;
  QueryStats& st = stats ? *stats : local;
  st = QueryStats{};
  const CompressedSimplification& cs = oracle.cs;
  if (cs.delta_m == 0.0) {
    // P' is the optimal simplification itself and has at most m vertices.
    const double exact = discrete_frechet_exact(expand_compressed(cs), q, Norm::L1);
    return {exact, exact};
  }
  ++st.decisions;
  if (decide_compressed(cs, q, cs.delta_m)) return {cs.delta_m, 2.0 * cs.delta_m};

  // d_dF(P', Q) is one of the vertex distances; find the smallest candidate
  // that passes. Every candidate here exceeds 1.5 * delta_m.
  const double floor_v = 1.5 * cs.delta_m;
  std::vector<double> cand;
  cand.reserve(2 * cs.runs() * q.size());
  for (std::size_t i = 0; i < cs.runs(); ++i) {
    for (std::size_t off = 0; off < std::min<std::size_t>(2, cs.counts[i]); ++off) {
      const double v = cs.run_value(i, off);
      for (std::size_t j = 0; j < q.size(); ++j) {
        const double d = std::abs(v - q.value(j));
        if (d > floor_v) cand.push_back(d);
      }
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  st.candidates = cand.size();
  std::size_t lo = 0, hi = cand.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++st.decisions;
    if (decide_compressed_at(cs, q, cand[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == cand.size()) throw std::logic_error("no candidate distance passes the decision");
  const double bound = cand[lo] / 1.5;
  return {bound, 2.0 * bound};
}

}  // namespace frechet
