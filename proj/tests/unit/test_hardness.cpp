#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "frechet/errors.hpp"
#include "frechet/hardness.hpp"
#include "frechet/oracle_1d.hpp"
#include "support/oracles.hpp"

namespace frechet {
namespace {

using testing::pick_size;

double ddf(const std::vector<double>& a, const std::vector<double>& b) {
  return testing::table_ddf(PolyCurve::from_values(a), PolyCurve::from_values(b), Norm::L1);
}

bool has_orthogonal_pair(const std::vector<BitVector>& u, const std::vector<BitVector>& v) {
  for (const BitVector& a : u) {
    for (const BitVector& b : v) {
      bool orth = true;
      for (std::size_t k = 0; k < a.size(); ++k) orth = orth && !(a[k] && b[k]);
      if (orth) return true;
    }
  }
  return false;
}

std::vector<BitVector> random_vectors(std::mt19937_64& rng, std::size_t count, std::size_t d,
                                      double density) {
  std::bernoulli_distribution bit(density);
  std::vector<BitVector> out(count, BitVector(d));
  for (BitVector& v : out) {
    for (auto& b : v) b = bit(rng) ? 1 : 0;
  }
  return out;
}

TEST(OVBrute, Examples) {
  auto hit = ov_brute(OVInstance::make(2, {{1, 0}}, {{0, 1}}));
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->v_index, 0u);
  EXPECT_EQ(hit->u_index, 0u);

  EXPECT_FALSE(ov_brute(OVInstance::make(2, {{1, 1}}, {{1, 0}})));

  hit = ov_brute(OVInstance::make(2, {{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}));
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->v_index, 0u);
  EXPECT_EQ(hit->u_index, 1u);
}

TEST(OVInstance, SwapsAndValidates) {
  const OVInstance inst = OVInstance::make(1, {{1}, {0}}, {{1}});
  EXPECT_TRUE(inst.swapped);
  EXPECT_EQ(inst.U.size(), 1u);
  EXPECT_EQ(inst.V.size(), 2u);
  EXPECT_THROW(OVInstance::make(2, {{1}}, {{1, 0}}), std::invalid_argument);
  EXPECT_THROW(OVInstance::make(1, {{2}}, {{1}}), std::invalid_argument);
  EXPECT_THROW(OVInstance::make(0, {{}}, {{}}), std::invalid_argument);
  EXPECT_THROW(OVInstance::make(1, {}, {{1}}), std::invalid_argument);
}

TEST(OVInstance, ParsesJson) {
  const OVInstance inst = parse_ov_instance(R"({"d": 2, "U": [[1, 0]], "V": [[0, 1], [1, 1]]})");
  EXPECT_EQ(inst.d, 2u);
  EXPECT_EQ(inst.U, (std::vector<BitVector>{{1, 0}}));
  EXPECT_FALSE(inst.swapped);
  EXPECT_THROW(parse_ov_instance("{"), FormatError);
  EXPECT_THROW(parse_ov_instance(R"({"d": 2, "U": [[1, 0]]})"), FormatError);
  EXPECT_THROW(parse_ov_instance(R"({"d": 2, "U": [[1, 3]], "V": [[0, 1]]})"), FormatError);
  EXPECT_THROW(parse_ov_instance(R"({"d": 2, "U": [[1]], "V": [[0, 1]]})"), FormatError);
  EXPECT_THROW(parse_ov_instance(R"({"d": "2", "U": [[1, 0]], "V": [[0, 1]]})"), FormatError);
}

TEST(Gadgets, StandardSetSatisfiesProperties) {
  const GadgetSet1D& g = standard_gadgets();
  for (std::size_t d = 1; d <= 6; ++d) {
    EXPECT_TRUE(check_gadgets(g, d).empty()) << "d=" << d;
    EXPECT_LE(ddf(g.pstar(d), g.qstar), 1);
  }
  EXPECT_LE(ddf(g.ps, g.qstar), 1);
  EXPECT_LE(ddf(g.p0, g.q0), 1);
  EXPECT_LE(ddf(g.p0, g.q1), 1);
  EXPECT_LE(ddf(g.p1, g.q0), 1);
  EXPECT_GE(ddf(g.p1, g.q1), 2);
  EXPECT_LE(std::fabs(g.p_null - g.q_null), 1);
  for (std::size_t k = 0; k < g.q0.size(); k += 2) {
    EXPECT_EQ(g.q0[k], -2);
    EXPECT_EQ(g.q1[k], -2);
  }
}

TEST(Gadgets, MatchableOneOnePairIsDetected) {
  GadgetSet1D g = standard_gadgets();
  g.q1 = {-2, 0};
  ASSERT_LE(ddf(g.p1, g.q1), 1);
  EXPECT_FALSE(check_gadgets(g, 1).empty());
  EXPECT_THROW(build_hard_pair_1d(OVInstance::make(1, {{1}}, {{1}}), g), ContractViolation);

  const CertificationReport rep = certify_gadgets(g, {1, 1, 1});
  EXPECT_FALSE(rep.ok());
  ASSERT_FALSE(rep.violations.empty());
  bool no_pair_violation = false;
  for (const auto& v : rep.violations) no_pair_violation |= !v.orthogonal && v.distance <= 1;
  EXPECT_TRUE(no_pair_violation);
}

TEST(Gadgets, NullValueNearOtherEdgesIsDetected) {
  GadgetSet1D g = standard_gadgets();
  g.p_null = 1;
  EXPECT_FALSE(check_gadgets(g, 2).empty());
}

TEST(Certify, SmallLimits) {
  const CertificationReport rep = certify_gadgets(standard_gadgets(), {1, 1, 1});
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.instances, 4u);
  EXPECT_LE(rep.max_yes_distance, 1);
  EXPECT_GE(rep.min_no_distance, 2);

  const CertificationReport two = certify_gadgets(standard_gadgets(), {2, 2, 2});
  EXPECT_TRUE(two.ok());
  // sum over d of (2^d + 4^d)^2
  EXPECT_EQ(two.instances, 6u * 6 + 20u * 20);
}

TEST(HardPair, SmallestInstances) {
  const GadgetSet1D& g = standard_gadgets();
  const HardPair yes = build_hard_pair_1d(OVInstance::make(1, {{0}}, {{1}}), g);
  EXPECT_LE(testing::table_ddf(yes.p, yes.q, Norm::L1), 1);
  const HardPair no = build_hard_pair_1d(OVInstance::make(1, {{1}}, {{1}}), g);
  EXPECT_GE(testing::table_ddf(no.p, no.q, Norm::L1), 2);
}

std::size_t expected_p_size(const GadgetSet1D& g, std::size_t n, std::size_t m, std::size_t d) {
  const std::size_t block = (d + 1) * g.p0.size() + 2 * g.p1.size() + d * g.p0.size();
  return 2 * g.ps.size() + 2 * (m - 1) * g.pstar(d).size() + 2 + n * block;
}

std::size_t expected_q_size(const GadgetSet1D& g, std::size_t m, std::size_t d) {
  const std::size_t block =
      2 + 2 * g.qc.size() + (d + 1) * g.q1.size() + 2 * g.q0.size() + d * g.q0.size() - 1;
  return 2 * m * g.qstar.size() + m * block + 1;
}

TEST(HardPair, VertexCounts) {
  const GadgetSet1D& g = standard_gadgets();
  std::mt19937_64 rng(21);
  const auto inst = OVInstance::make(2, random_vectors(rng, 2, 2, 0.5),
                                     random_vectors(rng, 3, 2, 0.5));
  const HardPair pair = build_hard_pair_1d(inst, g);
  EXPECT_EQ(pair.p.size(), 78u);
  EXPECT_EQ(pair.q.size(), 47u);

  for (std::size_t d = 1; d <= 4; ++d) {
    for (std::size_t m = 1; m <= 3; ++m) {
      std::size_t q_size = 0;
      for (std::size_t n = m; n <= 6; ++n) {
        const HardPair hp = build_hard_pair_1d(
            OVInstance::make(d, random_vectors(rng, m, d, 0.5), random_vectors(rng, n, d, 0.5)),
            g);
        ASSERT_EQ(hp.p.size(), expected_p_size(g, n, m, d));
        ASSERT_EQ(hp.q.size(), expected_q_size(g, m, d));
        if (q_size != 0) ASSERT_EQ(hp.q.size(), q_size);
        q_size = hp.q.size();
        for (double v : hp.p.coords()) ASSERT_EQ(v, std::floor(v));
        for (double v : hp.q.coords()) ASSERT_EQ(v, std::floor(v));
      }
    }
  }
}

TEST(HardPair, GapOnRandomLargerInstances) {
  const GadgetSet1D& g = standard_gadgets();
  std::mt19937_64 rng(22);
  std::size_t yes = 0, no = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = pick_size(rng, 1, 6);
    const std::size_t m = pick_size(rng, 1, 4);
    const std::size_t n = pick_size(rng, m, 6);
    const auto u = random_vectors(rng, m, d, 0.7);
    const auto v = random_vectors(rng, n, d, 0.7);
    const HardPair hp = build_hard_pair_1d(OVInstance::make(d, u, v), g);
    const double dist = testing::table_ddf(hp.p, hp.q, Norm::L1);
    if (has_orthogonal_pair(u, v)) {
      ++yes;
      ASSERT_LE(dist, 1);
    } else {
      ++no;
      ASSERT_GE(dist, 2);
    }
  }
  EXPECT_GT(yes, 30u);
  EXPECT_GT(no, 30u);
}

TEST(HardPair, OracleIntervalContainsExactValue) {
  const GadgetSet1D& g = standard_gadgets();
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = pick_size(rng, 1, 4);
    const std::size_t m = pick_size(rng, 1, 3);
    const std::size_t n = pick_size(rng, m, 5);
    const HardPair hp = build_hard_pair_1d(
        OVInstance::make(d, random_vectors(rng, m, d, 0.6), random_vectors(rng, n, d, 0.6)), g);
    const double exact = testing::table_ddf(hp.p, hp.q, Norm::L1);
    const OracleHandle h = preprocess(hp.p, hp.q.size());
    ASSERT_TRUE(query(h, hp.q).contains(exact));
  }
}

}  // namespace
}  // namespace frechet
