#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "frechet/geometry.hpp"
#include "frechet/interval.hpp"

namespace frechet {

// Greedy delta-simplification of a 1D curve. Block j covers the zero-based
// vertex range [breakpoints[j-1], breakpoints[j]) with breakpoints[-1] = 0;
// breakpoints.back() == n. centers[j] is the midpoint of the block's range.
struct SimplificationResult {
  std::vector<double> centers;
  std::vector<std::size_t> breakpoints;
  double delta = 0.0;

  std::size_t size() const { return centers.size(); }
};

// Optimal delta-simplification, O(n). Requires a 1D curve.
SimplificationResult simplify_delta(const PolyCurve& p, double delta);

// Number of greedy blocks at delta, stopping early once it exceeds `cap`.
std::size_t count_blocks(const PolyCurve& p, double delta,
                         std::size_t cap = static_cast<std::size_t>(-1));

struct DeltaSelection {
  double delta_m = 0.0;
  SimplificationResult pstar;
  std::size_t greedy_calls = 0;
};

// Smallest delta in {|P(i) - P(j)| / 2} whose greedy simplification has at
// most m blocks. O(n log n) expected; the pivot sequence is seeded and
// deterministic.
DeltaSelection select_delta_m(const PolyCurve& p, std::size_t m);

// Run-length description of the simplified curve P': run i alternates
// centers[i] + signs[i] * delta_m / 2 and centers[i] - signs[i] * delta_m / 2,
// starting with the former, for counts[i] vertices.
struct CompressedSimplification {
  double delta_m = 0.0;
  std::vector<double> centers;
  std::vector<std::size_t> counts;
  std::vector<int> signs;

  std::size_t runs() const { return centers.size(); }
  std::size_t expanded_size() const;
  // Value of vertex `offset` (zero-based) within run i.
  double run_value(std::size_t run, std::size_t offset) const;
  // Throws FormatError unless the fields describe a valid P'.
  void validate() const;

  friend bool operator==(const CompressedSimplification&,
                         const CompressedSimplification&) = default;
};

CompressedSimplification build_compressed(const PolyCurve& p, const SimplificationResult& pstar,
                                          double delta_m);
PolyCurve expand_compressed(const CompressedSimplification& cs);

// d_dF(P', Q) <= 1.5 * delta, for delta >= delta_m; O(|Q| * runs).
bool decide_compressed(const CompressedSimplification& cs, const PolyCurve& q, double delta);
// Same test against an explicit threshold: d_dF(P', Q) <= threshold, for
// threshold >= 1.5 * delta_m.
bool decide_compressed_at(const CompressedSimplification& cs, const PolyCurve& q,
                          double threshold);

struct BuildStats {
  double select_ms = 0.0;
  double compress_ms = 0.0;
  std::size_t greedy_calls = 0;
};

struct OracleHandle {
  CompressedSimplification cs;
  std::size_t m = 0;
  std::size_t n = 0;
  BuildStats build_stats;

  // Build statistics are not part of the oracle's identity.
  friend bool operator==(const OracleHandle& a, const OracleHandle& b) {
    return a.cs == b.cs && a.m == b.m && a.n == b.n;
  }
};

// Builds the oracle for queries of complexity at most m.
OracleHandle preprocess(const PolyCurve& p, std::size_t m);

struct QueryStats {
  std::size_t decisions = 0;
  std::size_t candidates = 0;
};

// Interval [lo, 2 lo] containing d_dF(P, Q), or the exact value [e, e] when
// delta_m == 0. Throws ContractViolation if |Q| > m.
ApproxInterval query(const OracleHandle& oracle, const PolyCurve& q,
                     QueryStats* stats = nullptr);

// JSON with format_version 1. deserialize throws FormatError on unknown
// versions or malformed input.
std::string serialize_oracle(const OracleHandle& oracle);
OracleHandle deserialize_oracle(const std::string& bytes);

}  // namespace frechet
