#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "curve_id.hpp"
#include "fermat.hpp"
#include "group.hpp"
#include "report.hpp"
#include "table_action.hpp"
#include "takahashi.hpp"

namespace galois::criteria {

/// A two-Galois-point configuration: the ambient automorphism group, the
/// two Galois groups G1 and G2, and the shared outer base point Q.  Each
/// family provides its own scenario type with the same member surface, so
/// the checkers below are templates over it.

namespace detail {
template <class G>
void validate_scenario(const G& ambient, const G& g1, const G& g2) {
  if (g1 == g2)
    throw std::invalid_argument("scenario: G1 and G2 must be distinct Galois groups");
  if (!g1.is_subset_of(ambient) || !g2.is_subset_of(ambient))
    throw std::invalid_argument("scenario: G1 and G2 must lie in the ambient group");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Fermat
// ---------------------------------------------------------------------------

struct FermatScenario {
  using Elem = fermat::FermatAut;
  using Point = fermat::FermatPoint;

  int d;
  Group<Elem> ambient, g1, g2;
  Point base;

  FermatScenario(int d_, Group<Elem> ambient_, Group<Elem> g1_, Group<Elem> g2_, Point base_)
      : d(d_), ambient(std::move(ambient_)), g1(std::move(g1_)), g2(std::move(g2_)),
        base(std::move(base_)) {
    detail::validate_scenario(ambient, g1, g2);
    if (base.d() != d) throw std::invalid_argument("scenario: base point degree mismatch");
  }

  static FermatScenario standard(int d) { return with_base(d, fermat::base_point(d)); }

  static FermatScenario with_base(int d, const Point& q) {
    return FermatScenario(d, fermat::full_aut(d), fermat::galois_group_1(d),
                          fermat::galois_group_2(d), q);
  }

  std::string family() const { return "fermat"; }
  std::string label() const { return "F_" + std::to_string(d); }
  int parameter() const { return d; }

  /// Condition (a), X/G -> P^1, is computed through the quotient genus when
  /// G is diagonal (as G1 and G2 are).
  ConditionResult condition_a(const Group<Elem>& g) const {
    if (!fermat::is_diagonal(g)) return ConditionResult::not_evaluated();
    const auto genus = fermat::quotient_genus_diagonal(d, g);
    if (genus == 0) return ConditionResult::holds();
    return ConditionResult::fails("quotient genus is " + std::to_string(genus) + ", not 0");
  }

  CurveId identify(const Group<Elem>& h) const { return fermat::identify_quotient(d, h); }

  /// The kernels the classification theorem predicts: K_l for proper
  /// divisors 1 < l < d.
  std::vector<Group<Elem>> predicted_kernels() const {
    std::vector<Group<Elem>> out;
    for (int l = 2; l < d; ++l)
      if (d % l == 0) out.push_back(fermat::k_subgroup(d, l));
    return out;
  }

  std::vector<std::string> assumptions() const {
    return {"base field algebraically closed of characteristic 0"};
  }
  std::vector<std::string> notes() const { return {}; }
};

// ---------------------------------------------------------------------------
// Takahashi, both base-point choices
// ---------------------------------------------------------------------------

/// Scenario over the points at infinity: (G1, G2, Q) with Q in T_m, Z = 0.
struct TakahashiScenarioA {
  using Elem = takahashi::TakAut;
  using Point = takahashi::TakPointA;

  int m;
  Group<Elem> ambient, g1, g2;
  Point base;

  TakahashiScenarioA(int m_, Group<Elem> ambient_, Group<Elem> g1_, Group<Elem> g2_, Point base_)
      : m(m_), ambient(std::move(ambient_)), g1(std::move(g1_)), g2(std::move(g2_)),
        base(std::move(base_)) {
    detail::validate_scenario(ambient, g1, g2);
    if (base.m() != m) throw std::invalid_argument("scenario: base point parameter mismatch");
  }

  static TakahashiScenarioA standard(int m) { return with_base(m, takahashi::base_point_a(m)); }

  static TakahashiScenarioA with_base(int m, const Point& q) {
    return TakahashiScenarioA(m, takahashi::full_aut(m), takahashi::g1(m), takahashi::g2(m), q);
  }

  std::string family() const { return "takahashi"; }
  std::string label() const { return "T_" + std::to_string(m); }
  int parameter() const { return m; }

  /// (a) holds by hypothesis for the Galois groups of this family; it is
  /// recorded as asserted, not recomputed.
  ConditionResult condition_a(const Group<Elem>&) const { return ConditionResult::asserted(); }

  CurveId identify(const Group<Elem>& h) const { return takahashi::identify_quotient(m, h); }

  /// Predicted kernels: K_l for divisors 1 < l <= m (K_m included; its
  /// quotient is a conic).
  std::vector<Group<Elem>> predicted_kernels() const {
    std::vector<Group<Elem>> out;
    for (int l = 2; l <= m; ++l)
      if (m % l == 0) out.push_back(takahashi::k_subgroup(m, l));
    return out;
  }

  std::vector<std::string> assumptions() const {
    return {"base field algebraically closed of characteristic 0",
            "condition (a) for G1 and G2 holds by hypothesis"};
  }
  std::vector<std::string> notes() const {
    return {"G2 realized as the y-scaling group fixing x (derived identification)",
            "normalization mu = " + galois::to_string(takahashi::mu(m))};
  }
};

/// Scenario over the Y = 0 section: (G1, G3, R) with R a section point.
struct TakahashiScenarioB {
  using Elem = takahashi::TakAut;
  using Point = takahashi::TakPointB;

  int m;
  Group<Elem> ambient, g1, g2;  // g2 slot carries G3
  Point base;

  TakahashiScenarioB(int m_, Group<Elem> ambient_, Group<Elem> g1_, Group<Elem> g3_, Point base_)
      : m(m_), ambient(std::move(ambient_)), g1(std::move(g1_)), g2(std::move(g3_)),
        base(std::move(base_)) {
    detail::validate_scenario(ambient, g1, g2);
    if (base.m() != m) throw std::invalid_argument("scenario: base point parameter mismatch");
  }

  static TakahashiScenarioB standard(int m) { return with_base(m, takahashi::base_point_b(m)); }

  static TakahashiScenarioB with_base(int m, const Point& r) {
    return TakahashiScenarioB(m, takahashi::full_aut(m), takahashi::g1(m), takahashi::g3(m), r);
  }

  std::string family() const { return "takahashi"; }
  std::string label() const { return "T_" + std::to_string(m); }
  int parameter() const { return m; }

  ConditionResult condition_a(const Group<Elem>&) const { return ConditionResult::asserted(); }

  CurveId identify(const Group<Elem>& h) const { return takahashi::identify_quotient(m, h); }

  std::vector<Group<Elem>> predicted_kernels() const {
    std::vector<Group<Elem>> out;
    for (int l = 2; l <= m; ++l)
      if (m % l == 0) out.push_back(takahashi::k_subgroup(m, l));
    return out;
  }

  std::vector<std::string> assumptions() const {
    return {"base field algebraically closed of characteristic 0",
            "conditions (a)(b)(c) for (G1, G3, R) hold by hypothesis; (b)(c) recomputed"};
  }
  std::vector<std::string> notes() const {
    return {"G3 = <sigma', tau'> is cyclic of order 2m",
            "normalization mu = " + galois::to_string(takahashi::mu(m))};
  }
};

// ---------------------------------------------------------------------------
// Table-driven scenario (inner base points)
// ---------------------------------------------------------------------------

/// A scenario given purely by permutation action tables: two Galois groups,
/// a candidate kernel H, and a pair of inner base points.  Used with
/// check_inner; no curve model backs it, so condition (a) can only come
/// from the declared assumptions.
struct CustomScenario {
  using Elem = table::TableAut;
  using Point = table::TablePoint;

  table::LabelsPtr labels;
  Group<Elem> g1, g2, h;
  Point p1, p2;
  std::set<char> assumed;

  CustomScenario(table::LabelsPtr labels_, Group<Elem> g1_, Group<Elem> g2_, Group<Elem> h_,
                 Point p1_, Point p2_, std::set<char> assumed_)
      : labels(std::move(labels_)), g1(std::move(g1_)), g2(std::move(g2_)), h(std::move(h_)),
        p1(std::move(p1_)), p2(std::move(p2_)), assumed(std::move(assumed_)) {
    if (g1 == g2)
      throw std::invalid_argument("scenario: G1 and G2 must be distinct Galois groups");
    if (p1 == p2) throw std::invalid_argument("scenario: inner base points must differ");
  }
};

}  // namespace galois::criteria
