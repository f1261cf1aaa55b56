#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "galois/errors.hpp"
#include "galois/roots.hpp"
#include "oracles.hpp"

using galois::UnityExp;
using galois::parse_unity;
using galois::to_string;

// =============================================================================
// Construction and normalization
// =============================================================================

TEST(UnityExp, NormalizesExponent) {
  EXPECT_EQ(UnityExp(6, 7), UnityExp(6, 1));
  EXPECT_EQ(UnityExp(6, -1), UnityExp(6, 5));
  EXPECT_EQ(UnityExp(6, 12), UnityExp::one());
}

TEST(UnityExp, RejectsBadModulus) {
  EXPECT_THROW(UnityExp(0, 1), std::invalid_argument);
  EXPECT_THROW(UnityExp(-4, 1), std::invalid_argument);
}

TEST(UnityExp, Order) {
  EXPECT_EQ(UnityExp(6, 1).order(), 6);
  EXPECT_EQ(UnityExp(6, 2).order(), 3);
  EXPECT_EQ(UnityExp(6, 3).order(), 2);
  EXPECT_EQ(UnityExp(6, 0).order(), 1);
  EXPECT_EQ(UnityExp::one().order(), 1);
}

// =============================================================================
// Cross-modulus equality and ordering
// =============================================================================

TEST(UnityExp, EqualityAcrossModuli) {
  EXPECT_EQ(UnityExp(4, 2), UnityExp(2, 1));  // both are -1
  EXPECT_EQ(UnityExp(6, 3), UnityExp(2, 1));
  EXPECT_EQ(UnityExp(12, 4), UnityExp(3, 1));
  EXPECT_NE(UnityExp(4, 1), UnityExp(4, 3));
}

TEST(UnityExp, OrderingIsStrictWeak) {
  std::vector<UnityExp> zs;
  for (int n : {2, 3, 4, 6, 8, 12})
    for (int e = 0; e < n; ++e) zs.emplace_back(n, e);
  std::sort(zs.begin(), zs.end());
  EXPECT_TRUE(std::is_sorted(zs.begin(), zs.end()));
  for (std::size_t i = 0; i + 1 < zs.size(); ++i) {
    const bool lt = zs[i] < zs[i + 1], gt = zs[i + 1] < zs[i];
    EXPECT_FALSE(lt && gt);
    if (!lt && !gt) EXPECT_EQ(zs[i], zs[i + 1]);  // equivalence = equality
  }
}

TEST(UnityExp, EquivalentValuesInterleaveConsistently) {
  const UnityExp a(4, 2), b(2, 1);  // equal values, different moduli
  EXPECT_FALSE(a < b);
  EXPECT_FALSE(b < a);
}

// =============================================================================
// Arithmetic against the complex oracle
// =============================================================================

TEST(UnityExp, ProductRescalesToLcm) {
  const UnityExp p = UnityExp(4, 1) * UnityExp(6, 1);
  EXPECT_EQ(p, UnityExp(12, 5));  // zeta_4 * zeta_6 = zeta_12^3 * zeta_12^2
}

TEST(UnityExp, ProductMatchesComplex) {
  std::mt19937 rng(20240711);
  std::uniform_int_distribution<int> modulus(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    const int n1 = modulus(rng), n2 = modulus(rng);
    const UnityExp a(n1, std::uniform_int_distribution<int>(-40, 40)(rng));
    const UnityExp b(n2, std::uniform_int_distribution<int>(-40, 40)(rng));
    const auto got = oracles::value(a * b);
    const auto want = oracles::value(a) * oracles::value(b);
    EXPECT_NEAR(std::abs(got - want), 0.0, 1e-10);
  }
}

TEST(UnityExp, InverseAndDivision) {
  const UnityExp a(8, 3);
  EXPECT_EQ(a * a.inverse(), UnityExp::one());
  EXPECT_EQ(a / a, UnityExp::one());
  EXPECT_NEAR(std::abs(oracles::value(a.inverse()) - 1.0 / oracles::value(a)), 0.0, 1e-12);
}

TEST(UnityExp, PowMatchesComplex) {
  const UnityExp a(10, 3);
  for (int k = -25; k <= 25; ++k) {
    const auto got = oracles::value(a.pow(k));
    const auto want = std::pow(oracles::value(a), k);
    EXPECT_NEAR(std::abs(got - want), 0.0, 1e-9) << "k=" << k;
  }
  EXPECT_EQ(a.pow(0), UnityExp::one());
  EXPECT_EQ(a.pow(1), a);
  EXPECT_EQ(a.pow(10), UnityExp::one());
}

TEST(UnityExp, ProductStaysExactUnderChains) {
  // zeta_9 * zeta_9 * ... stays at modulus 9, no growth
  UnityExp z(9, 1), acc = UnityExp::one();
  for (int k = 0; k < 100; ++k) acc = acc * z;
  EXPECT_EQ(acc, UnityExp(9, 100 % 9));
  EXPECT_EQ(acc.modulus(), 9);
}

// =============================================================================
// Rescaling
// =============================================================================

TEST(UnityExp, RescalePreservesValue) {
  const UnityExp a(4, 3);
  const UnityExp b = a.rescale(12);
  EXPECT_EQ(b.modulus(), 12);
  EXPECT_EQ(b, a);
}

TEST(UnityExp, RescaleRejectsNonMultiple) {
  EXPECT_THROW(UnityExp(4, 1).rescale(6), std::invalid_argument);
  EXPECT_THROW(UnityExp(4, 1).rescale(2), std::invalid_argument);
}

// =============================================================================
// Parsing and printing
// =============================================================================

TEST(UnityExp, ToStringRoundTrip) {
  for (const UnityExp z : {UnityExp(8, 3), UnityExp(2, 1), UnityExp(12, 0), UnityExp(7, 6)})
    EXPECT_EQ(parse_unity(to_string(z)), z);
}

TEST(UnityExp, ParseDefaultsExponentToOne) {
  EXPECT_EQ(parse_unity("zeta(8)"), UnityExp(8, 1));
  EXPECT_EQ(parse_unity("zeta(8)^3"), UnityExp(8, 3));
  EXPECT_EQ(parse_unity("zeta(8)^-1"), UnityExp(8, 7));
}

TEST(UnityExp, ParseRejectsGarbage) {
  EXPECT_THROW(parse_unity("zeta8^3"), std::invalid_argument);
  EXPECT_THROW(parse_unity("zeta()^3"), std::invalid_argument);
  EXPECT_THROW(parse_unity("zeta(0)^3"), std::invalid_argument);
  EXPECT_THROW(parse_unity(""), std::invalid_argument);
  EXPECT_THROW(parse_unity("zeta(8)^"), std::invalid_argument);
}

// =============================================================================
// Modulus growth bound
// =============================================================================

TEST(UnityExp, ModulusBoundTrips) {
  const std::int64_t saved = galois::unity_modulus_bound();
  galois::unity_modulus_bound() = 100;
  EXPECT_THROW(UnityExp(91, 1) * UnityExp(97, 1), galois::BoundExceeded);
  EXPECT_NO_THROW(UnityExp(10, 1) * UnityExp(10, 3));
  galois::unity_modulus_bound() = saved;
}
