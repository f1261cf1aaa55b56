#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "galois/criteria.hpp"
#include "galois/json_io.hpp"

using namespace galois;
using criteria::FermatScenario;
using criteria::TakahashiScenarioA;
using criteria::TakahashiScenarioB;

namespace {

criteria::CustomScenario load_fixture(const std::string& name) {
  std::ifstream f(std::string(GALOIS_FIXTURES_DIR) + "/" + name);
  if (!f) throw std::runtime_error("fixture not found: " + name);
  io::json j;
  f >> j;
  return io::load_custom_scenario(j);
}

}  // namespace

// =============================================================================
// Outer base conditions (a)(b)(c)
// =============================================================================

TEST(OuterBase, HoldsForStandardScenarios) {
  for (int d = 4; d <= 9; ++d) {
    const auto rep = criteria::check_outer_base(FermatScenario::standard(d));
    EXPECT_TRUE(rep.overall()) << "d=" << d << ": " << rep.first_witness();
    EXPECT_EQ(rep.get('a').verdict, Verdict::Holds);
  }
  for (int m = 3; m <= 6; ++m) {
    EXPECT_TRUE(criteria::check_outer_base(TakahashiScenarioA::standard(m)).overall());
    EXPECT_TRUE(criteria::check_outer_base(TakahashiScenarioB::standard(m)).overall());
  }
}

TEST(OuterBase, ConditionCHoldsOnlyOnTheSharedSection) {
  // Both Galois groups sweep the Z section; points on the X or Y sections
  // are fixed by one group but not the other, so the orbit sums differ.
  for (const auto& q : fermat::special_points(5)) {
    const auto rep = criteria::check_outer_base(FermatScenario::with_base(5, q));
    if (q.axis() == fermat::Axis::Z) {
      EXPECT_TRUE(rep.overall()) << to_string(q);
    } else {
      EXPECT_EQ(rep.get('c').verdict, Verdict::Fails) << to_string(q);
      EXPECT_NE(rep.get('c').witness.find("differ at"), std::string::npos);
    }
  }
}

TEST(OuterBase, ClassificationInvariantUnderBaseChoice) {
  // Any section point shared by the two orbits gives the same descendants.
  const auto reference = criteria::classify_descendants(FermatScenario::standard(4));
  for (int e = 3; e < 8; e += 2) {
    const auto alt = FermatScenario::with_base(
        4, fermat::FermatPoint(4, fermat::Axis::Z, UnityExp(8, e)));
    const auto cls = criteria::classify_descendants(alt);
    EXPECT_EQ(cls.theorem_match, reference.theorem_match);
    ASSERT_EQ(cls.entries.size(), reference.entries.size());
    for (std::size_t i = 0; i < cls.entries.size(); ++i) {
      EXPECT_EQ(cls.entries[i].subgroup, reference.entries[i].subgroup);
      EXPECT_EQ(cls.entries[i].descendant, reference.entries[i].descendant);
    }
  }
}

TEST(OuterBase, TakahashiBUsesTheCyclicGroup) {
  const auto s = TakahashiScenarioB::standard(4);
  EXPECT_EQ(s.g2, takahashi::g3(4));
  EXPECT_EQ(intersection(s.g1, s.g2).order(), 1u);
}

// =============================================================================
// Descent conditions (d)(e)(f)
// =============================================================================

TEST(Descent, KernelsPass) {
  const FermatScenario s = FermatScenario::standard(6);
  for (int l : {2, 3}) {
    const auto rep = criteria::check_descent(s, fermat::k_subgroup(6, l));
    EXPECT_TRUE(rep.overall()) << "l=" << l << ": " << rep.first_witness();
  }
  const TakahashiScenarioA t = TakahashiScenarioA::standard(6);
  for (int l : {2, 3, 6})
    EXPECT_TRUE(criteria::check_descent(t, takahashi::k_subgroup(6, l)).overall());
}

TEST(Descent, FullDiagonalFailsConditionD) {
  const FermatScenario s = FermatScenario::standard(6);
  const auto rep = criteria::check_descent(s, fermat::k_subgroup(6, 6));
  EXPECT_EQ(rep.get('d').verdict, Verdict::Fails);
  EXPECT_NE(rep.get('d').witness.find("contained in H"), std::string::npos);
  EXPECT_FALSE(rep.overall());
}

TEST(Descent, MinusOneScalingFailsConditionF) {
  // H = <diag(-1, 1, 1)> breaks the orbit-sum balance: G1 H has order 12
  // and sweeps the Z section twice, G2 H only once with stray points.
  const FermatScenario s = FermatScenario::standard(6);
  const auto h = closure(std::vector<fermat::FermatAut>{fermat::FermatAut(6, 3, 0)});
  EXPECT_EQ(h.order(), 2u);
  const auto rep = criteria::check_descent(s, h);
  EXPECT_EQ(rep.get('f').verdict, Verdict::Fails);
  EXPECT_NE(rep.get('f').witness.find("degrees 6 vs 12"), std::string::npos)
      << rep.get('f').witness;
}

TEST(Descent, AllThreeConditionsAlwaysEvaluated) {
  const FermatScenario s = FermatScenario::standard(4);
  const auto rep = criteria::check_descent(s, fermat::k_subgroup(4, 4));
  for (const char c : {'d', 'e', 'f'}) EXPECT_TRUE(rep.has(c));
}

TEST(Descent, RequiresBaseConditionsAndSubgroup) {
  const auto bad_base = FermatScenario::with_base(
      5, fermat::FermatPoint(5, fermat::Axis::X, UnityExp(10, 1)));
  EXPECT_THROW(criteria::check_descent(bad_base, fermat::k_subgroup(5, 5)),
               std::invalid_argument);
  const FermatScenario s4 = FermatScenario::standard(4);
  const auto foreign = fermat::k_subgroup(8, 2);  // degree-8 elements
  EXPECT_THROW(criteria::check_descent(s4, foreign), std::invalid_argument);
}

// =============================================================================
// Classification driver
// =============================================================================

TEST(Classify, MatchesPredictionForF4) {
  const auto c = criteria::classify_descendants(FermatScenario::standard(4));
  EXPECT_TRUE(c.theorem_match);
  EXPECT_EQ(c.subgroup_count, 114u);
  EXPECT_EQ(c.entries.size(), c.subgroup_count - 1);  // trivial H reported apart
  ASSERT_TRUE(c.self.has_value());
  EXPECT_EQ(c.self->subgroup.order(), 1u);
  const auto desc = c.descendants();
  ASSERT_EQ(desc.size(), 1u);
  EXPECT_EQ(desc[0]->subgroup, fermat::k_subgroup(4, 2));
  EXPECT_EQ(desc[0]->quotient, CurveId::fermat(2));
}

TEST(Classify, EntriesSortedAndReported) {
  const auto c = criteria::classify_descendants(TakahashiScenarioA::standard(3));
  for (std::size_t i = 0; i + 1 < c.entries.size(); ++i)
    EXPECT_FALSE(c.entries[i + 1].subgroup < c.entries[i].subgroup);
  for (const auto& e : c.entries) {
    EXPECT_GE(e.subgroup.order(), 2u);
    EXPECT_EQ(closure(e.generators), e.subgroup);  // generators regenerate
    for (const char cond : {'d', 'e', 'f'}) EXPECT_TRUE(e.report.has(cond));
  }
}

TEST(Classify, PrimeDegreesAreMinimal) {
  for (int d : {5, 7}) {
    const auto c = criteria::classify_descendants(FermatScenario::standard(d));
    EXPECT_TRUE(c.theorem_match);
    EXPECT_TRUE(criteria::is_minimal(c));
  }
  EXPECT_FALSE(criteria::is_minimal(
      criteria::classify_descendants(FermatScenario::standard(4))));
}

TEST(Classify, ConicOnlyForPrimeM) {
  EXPECT_TRUE(criteria::has_conic_only(
      criteria::classify_descendants(TakahashiScenarioA::standard(5))));
  EXPECT_FALSE(criteria::has_conic_only(
      criteria::classify_descendants(TakahashiScenarioA::standard(4))));
}

TEST(Classify, BoundPropagates) {
  EXPECT_THROW(criteria::classify_descendants(FermatScenario::standard(4), 10),
               BoundExceeded);
}

// =============================================================================
// Divisor transport identities
// =============================================================================

TEST(Transport, PushPullScalesByOrder) {
  const FermatScenario s = FermatScenario::standard(6);
  for (int l : {1, 2, 3, 6}) {
    const auto h = fermat::k_subgroup(6, l);
    Divisor<fermat::FermatPoint> down;
    for (const auto& q : fermat::special_points(6))
      down.add(orbit_label(h, q), 1 + (q.axis() == fermat::Axis::Z ? 2 : 0));
    const auto up = pullback(h, down);
    EXPECT_EQ(pushforward(h, up), down.scaled(static_cast<std::int64_t>(h.order())));
  }
}

TEST(Transport, PullbackOfPointIsOrbitSum) {
  const auto h = fermat::k_subgroup(4, 2);
  for (const auto& q : fermat::special_points(4)) {
    Divisor<fermat::FermatPoint> single;
    single.add(orbit_label(h, q));
    EXPECT_EQ(pullback(h, single), orbit_sum(h, q));
  }
}

TEST(Transport, PullbackRejectsNonLabelSupport) {
  const auto h = fermat::k_subgroup(4, 2);
  // a point that is not its own orbit label
  fermat::FermatPoint q(4, fermat::Axis::Z, UnityExp(8, 5));
  if (!(orbit_label(h, q) == q)) {
    Divisor<fermat::FermatPoint> d;
    d.add(q);
    EXPECT_THROW(pullback(h, d), std::invalid_argument);
  }
}

// =============================================================================
// Inner base points
// =============================================================================

TEST(Inner, CyclicFixtureIsADescendant)
{
  const auto s = load_fixture("inner_cyclic6.json");
  const auto rep = criteria::check_inner(s);
  EXPECT_TRUE(rep.overall()) << rep.first_witness();
  EXPECT_EQ(rep.get('a').verdict, Verdict::Asserted);
  for (const char c : {'b', 'c', 'd', 'e', 'f', 'g'})
    EXPECT_EQ(rep.get(c).verdict, Verdict::Holds) << c;
}

TEST(Inner, SharedOrbitFailsConditionG) {
  const auto s = load_fixture("inner_shared_orbit.json");
  const auto rep = criteria::check_inner(s);
  EXPECT_FALSE(rep.overall());
  EXPECT_EQ(rep.get('g').verdict, Verdict::Fails);
  EXPECT_NE(rep.get('g').witness.find("H*P1"), std::string::npos);
}

TEST(Inner, UnassumedConditionAIsNotEvaluated) {
  auto s = load_fixture("inner_cyclic6.json");
  const auto rep = criteria::check_inner(s.g1, s.g2, s.h, s.p1, s.p2, {});
  EXPECT_EQ(rep.get('a').verdict, Verdict::NotEvaluated);
  EXPECT_FALSE(rep.overall());
}

TEST(Inner, EqualBasePointsRejected) {
  const auto s = load_fixture("inner_cyclic6.json");
  EXPECT_THROW(criteria::check_inner(s.g1, s.g2, s.h, s.p1, s.p1, {'a'}),
               std::invalid_argument);
}

TEST(Inner, ConditionCSymmetricDivisorWitness) {
  // Swap one Galois group for a conjugate that misses the base point's
  // orbit balance: (c) must fail and say where.
  const auto s = load_fixture("inner_cyclic6.json");
  const auto rep = criteria::check_inner(s.g2, s.g1, s.h, s.p1, s.p2, {'a'});
  // G1 fixes q0 = P1 and G2 fixes q1 = P2; swapping the groups breaks (c)
  EXPECT_EQ(rep.get('c').verdict, Verdict::Fails);
  EXPECT_NE(rep.get('c').witness.find("differ at"), std::string::npos);
}

// =============================================================================
// Ancestors
// =============================================================================

TEST(Ancestor, EveryCurveHasOne) {
  for (int d = 4; d <= 9; ++d) {
    const auto w = criteria::ancestor_witness_fermat(d);
    EXPECT_TRUE(w.verified) << "d=" << d;
    EXPECT_EQ(w.quotient, CurveId::fermat(d));
    EXPECT_EQ(w.ancestor.parameter(), 2 * d);
  }
  for (int m = 3; m <= 6; ++m) {
    EXPECT_TRUE(criteria::ancestor_witness_takahashi_a(m).verified) << "m=" << m;
    EXPECT_TRUE(criteria::ancestor_witness_takahashi_b(m).verified) << "m=" << m;
  }
}

// =============================================================================
// Determinism
// =============================================================================

TEST(Determinism, ClassificationIsReproducible) {
  const auto a = criteria::classify_descendants(FermatScenario::standard(6));
  const auto b = criteria::classify_descendants(FermatScenario::standard(6));
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].subgroup, b.entries[i].subgroup);
    EXPECT_EQ(a.entries[i].generators, b.entries[i].generators);
    EXPECT_EQ(a.entries[i].descendant, b.entries[i].descendant);
  }
  EXPECT_EQ(io::classification_json(FermatScenario::standard(6), a).dump(),
            io::classification_json(FermatScenario::standard(6), b).dump());
}

TEST(Determinism, EnumerationOrderIndependent) {
  const auto g = takahashi::full_aut(4);
  EXPECT_EQ(enumerate_subgroups(g, kDefaultSubgroupBound, 0),
            enumerate_subgroups(g, kDefaultSubgroupBound, 1));
}
