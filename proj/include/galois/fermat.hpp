#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curve_id.hpp"
#include "group.hpp"
#include "roots.hpp"

namespace galois::fermat {

// ---------------------------------------------------------------------------
// Coordinate permutations
// ---------------------------------------------------------------------------

/// One of the six coordinate permutations of (X:Y:Z), identified by name:
///   id               xy: (X:Y:Z)->(Y:X:Z)   yz: ->(X:Z:Y)   zx: ->(Z:Y:X)
///   xyz: ->(Z:X:Y)   xzy: ->(Y:Z:X)
/// The image table is read as w[r] = v[map[r]] for a coordinate vector v.
class Perm3 {
 public:
  static constexpr int kCount = 6;

  constexpr Perm3() : code_(0) {}
  static Perm3 from_code(int code) {
    if (code < 0 || code >= kCount) throw std::invalid_argument("Perm3: bad code");
    Perm3 p;
    p.code_ = static_cast<std::uint8_t>(code);
    return p;
  }
  static Perm3 named(const std::string& name) {
    for (int c = 0; c < kCount; ++c)
      if (name == kNames[c]) return from_code(c);
    throw std::invalid_argument("Perm3: unknown permutation '" + name + "'");
  }

  int code() const { return code_; }
  const char* name() const { return kNames[code_]; }
  const std::array<std::uint8_t, 3>& map() const { return kMaps[code_]; }
  bool is_identity() const { return code_ == 0; }

  /// Matrix-product composition: applying compose(a,b) to a vector equals
  /// applying b first in index space, i.e. map[r] = b.map[a.map[r]].
  friend Perm3 compose(const Perm3& a, const Perm3& b) {
    std::array<std::uint8_t, 3> m{};
    for (int r = 0; r < 3; ++r) m[r] = b.map()[a.map()[r]];
    return from_map(m);
  }
  friend Perm3 inverse(const Perm3& a) {
    std::array<std::uint8_t, 3> m{};
    for (int r = 0; r < 3; ++r) m[a.map()[r]] = static_cast<std::uint8_t>(r);
    return from_map(m);
  }

  friend bool operator==(const Perm3& a, const Perm3& b) { return a.code_ == b.code_; }
  friend bool operator<(const Perm3& a, const Perm3& b) { return a.code_ < b.code_; }

 private:
  static Perm3 from_map(const std::array<std::uint8_t, 3>& m) {
    for (int c = 0; c < kCount; ++c)
      if (kMaps[c] == m) return from_code(c);
    throw std::logic_error("Perm3: non-permutation map");
  }

  static constexpr const char* kNames[kCount] = {"id", "xy", "yz", "zx", "xyz", "xzy"};
  static constexpr std::array<std::array<std::uint8_t, 3>, kCount> kMaps = {{
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}}};

  std::uint8_t code_;
};

inline std::string to_string(const Perm3& p) { return p.name(); }

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

/// An automorphism of the Fermat curve X^d + Y^d + Z^d = 0 (d >= 4): the
/// monomial matrix diag(zeta_d^i, zeta_d^j, 1) * P with P a coordinate
/// permutation.  The diagonal is kept projectively normalized (third entry
/// 1), which makes the representation unique.
class FermatAut {
 public:
  FermatAut(int d, std::int64_t i, std::int64_t j, Perm3 perm = Perm3())
      : d_(d), perm_(perm) {
    if (d < 1) throw std::invalid_argument("FermatAut: d must be >= 1");
    i_ = static_cast<int>(((i % d) + d) % d);
    j_ = static_cast<int>(((j % d) + d) % d);
  }

  int d() const { return d_; }
  int i() const { return i_; }
  int j() const { return j_; }
  const Perm3& perm() const { return perm_; }
  bool is_diagonal() const { return perm_.is_identity(); }

  /// Diagonal exponent of row r (0-based), with the normalized 0 in row 2.
  int diag_exp(int r) const { return r == 0 ? i_ : (r == 1 ? j_ : 0); }

  friend bool operator==(const FermatAut& a, const FermatAut& b) {
    return a.d_ == b.d_ && a.i_ == b.i_ && a.j_ == b.j_ && a.perm_ == b.perm_;
  }
  friend bool operator<(const FermatAut& a, const FermatAut& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    if (!(a.perm_ == b.perm_)) return a.perm_ < b.perm_;
    if (a.i_ != b.i_) return a.i_ < b.i_;
    return a.j_ < b.j_;
  }

 private:
  int d_, i_, j_;
  Perm3 perm_;
};

inline void require_same_d(const FermatAut& a, const FermatAut& b) {
  if (a.d() != b.d()) throw std::invalid_argument("FermatAut: mixed degrees");
}

/// (D1*P1)(D2*P2) = (D1 * P1 D2 P1^-1) * (P1 P2); the conjugated diagonal
/// picks up the P1-permuted exponents of D2, then the triple is renormalized
/// so the third entry is 0 again.
inline FermatAut group_product(const FermatAut& a, const FermatAut& b) {
  require_same_d(a, b);
  std::array<std::int64_t, 3> e{};
  for (int r = 0; r < 3; ++r) e[r] = a.diag_exp(r) + b.diag_exp(a.perm().map()[r]);
  return FermatAut(a.d(), e[0] - e[2], e[1] - e[2], compose(a.perm(), b.perm()));
}

inline FermatAut group_inverse(const FermatAut& a) {
  const Perm3 pi = inverse(a.perm());
  std::array<std::int64_t, 3> e{};
  for (int r = 0; r < 3; ++r) e[r] = -a.diag_exp(pi.map()[r]);
  return FermatAut(a.d(), e[0] - e[2], e[1] - e[2], pi);
}

inline std::string to_string(const FermatAut& a) {
  return "diag(" + std::to_string(a.i()) + "," + std::to_string(a.j()) + ");perm(" +
         a.perm().name() + ")";
}

/// Parses "diag(i,j);perm(name)".
inline FermatAut parse_fermat_aut(const std::string& text, int d) {
  const auto fail = [&] {
    throw std::invalid_argument("FermatAut: cannot parse '" + text +
                                "', expected diag(i,j);perm(name)");
  };
  if (text.rfind("diag(", 0) != 0) fail();
  const auto comma = text.find(',', 5);
  const auto close = text.find(')', 5);
  if (comma == std::string::npos || close == std::string::npos || comma > close) fail();
  std::int64_t i = 0, j = 0;
  try {
    std::size_t used = 0;
    const std::string si = text.substr(5, comma - 5), sj = text.substr(comma + 1, close - comma - 1);
    i = std::stoll(si, &used);
    if (used != si.size()) fail();
    j = std::stoll(sj, &used);
    if (used != sj.size()) fail();
  } catch (const std::exception&) {
    fail();
  }
  const std::string tail = text.substr(close + 1);
  if (tail.rfind(";perm(", 0) != 0 || tail.back() != ')') fail();
  return FermatAut(d, i, j, Perm3::named(tail.substr(6, tail.size() - 7)));
}

// ---------------------------------------------------------------------------
// Special points
// ---------------------------------------------------------------------------

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
  }
  return "?";
}

/// A point of the coordinate-line sections of the Fermat curve, with
/// eta^d = -1 (eta = zeta_{2d}^e, e odd).  Canonical coordinates:
///   Z-section: (eta : 1 : 0),  X-section: (0 : eta : 1),
///   Y-section: (1 : 0 : eta).
/// There are exactly 3d such points, and every fixed point of a nontrivial
/// diagonal automorphism lies among them.
class FermatPoint {
 public:
  FermatPoint(int d, Axis axis, const UnityExp& eta) : d_(d), axis_(axis), eta_(eta) {
    if (d < 3) throw std::invalid_argument("FermatPoint: d must be >= 3");
    if ((2 * d) % eta.modulus() != 0)
      throw std::invalid_argument("FermatPoint: eta must be a 2d-th root of unity");
    eta_ = eta.rescale(2 * d);
    if (eta_.exponent() % 2 == 0)
      throw std::invalid_argument("FermatPoint: eta^d must equal -1 (odd exponent over 2d)");
  }

  int d() const { return d_; }
  Axis axis() const { return axis_; }
  const UnityExp& eta() const { return eta_; }

  friend bool operator==(const FermatPoint& a, const FermatPoint& b) {
    return a.d_ == b.d_ && a.axis_ == b.axis_ && a.eta_ == b.eta_;
  }
  friend bool operator!=(const FermatPoint& a, const FermatPoint& b) { return !(a == b); }
  friend bool operator<(const FermatPoint& a, const FermatPoint& b) {
    if (a.d_ != b.d_) return a.d_ < b.d_;
    if (a.axis_ != b.axis_) return static_cast<int>(a.axis_) < static_cast<int>(b.axis_);
    return a.eta_ < b.eta_;
  }

 private:
  int d_;
  Axis axis_;
  UnityExp eta_;
};

inline std::string to_string(const FermatPoint& p) {
  return std::string("axis:") + axis_name(p.axis()) + ",eta:" + to_string(p.eta());
}

inline FermatPoint parse_fermat_point(const std::string& text, int d) {
  if (text.rfind("axis:", 0) != 0 || text.size() < 7 || text.substr(6, 5) != ",eta:")
    throw std::invalid_argument("FermatPoint: cannot parse '" + text +
                                "', expected axis:A,eta:zeta(2d)^e");
  const std::string ax = text.substr(5, 1);
  Axis axis;
  if (ax == "X") axis = Axis::X;
  else if (ax == "Y") axis = Axis::Y;
  else if (ax == "Z") axis = Axis::Z;
  else throw std::invalid_argument("FermatPoint: unknown axis '" + ax + "'");
  return FermatPoint(d, axis, parse_unity(text.substr(11)));
}

namespace detail {
/// Projective triple with exactly one zero coordinate; entries are roots of
/// unity.  nullopt encodes the zero.
using Triple = std::array<std::optional<UnityExp>, 3>;

inline Triple to_triple(const FermatPoint& p) {
  Triple v;
  const int z = static_cast<int>(p.axis());
  v[z] = std::nullopt;
  v[(z + 1) % 3] = p.eta();
  v[(z + 2) % 3] = UnityExp::one();
  return v;
}

inline FermatPoint from_triple(int d, const Triple& v) {
  int z = -1;
  for (int r = 0; r < 3; ++r)
    if (!v[r]) {
      if (z >= 0) throw std::logic_error("FermatPoint: two zero coordinates");
      z = r;
    }
  if (z < 0) throw std::logic_error("FermatPoint: no zero coordinate");
  const UnityExp eta = *v[(z + 1) % 3] / *v[(z + 2) % 3];
  return FermatPoint(d, static_cast<Axis>(z), eta);
}
}  // namespace detail

/// Applies the monomial map to the point's coordinate triple and
/// renormalizes to canonical section form.
inline FermatPoint act(const FermatAut& g, const FermatPoint& p) {
  if (g.d() != p.d()) throw std::invalid_argument("FermatAut: acting across degrees");
  const detail::Triple v = detail::to_triple(p);
  detail::Triple w;
  for (int r = 0; r < 3; ++r) {
    w[r] = v[g.perm().map()[r]];
    if (w[r]) *w[r] = *w[r] * UnityExp(2 * g.d(), 2 * g.diag_exp(r));  // zeta_d^e over 2d
  }
  return detail::from_triple(g.d(), w);
}

/// All 3d section points, sorted.
inline std::vector<FermatPoint> special_points(int d) {
  std::vector<FermatPoint> out;
  out.reserve(3 * d);
  for (const Axis axis : {Axis::X, Axis::Y, Axis::Z})
    for (int e = 1; e < 2 * d; e += 2) out.emplace_back(d, axis, UnityExp(2 * d, e));
  return out;
}

/// The outer base point: the Z-section point with eta = zeta_{2d}.  The
/// classification does not depend on which section point is chosen; the
/// test suite checks invariance over all d choices.
inline FermatPoint base_point(int d) { return FermatPoint(d, Axis::Z, UnityExp(2 * d, 1)); }

// ---------------------------------------------------------------------------
// Named groups
// ---------------------------------------------------------------------------

/// G1 = {diag(zeta_d^i, 1, 1)}: the Galois group of the outer point (1:0:0).
inline Group<FermatAut> galois_group_1(int d) {
  if (d < 3) throw std::invalid_argument("galois_group_1: d must be >= 3");
  std::vector<FermatAut> elems;
  for (int i = 0; i < d; ++i) elems.emplace_back(d, i, 0);
  return Group<FermatAut>::from_elements(std::move(elems));
}

/// G2 = {diag(1, zeta_d^j, 1)}: the Galois group of the outer point (0:1:0).
inline Group<FermatAut> galois_group_2(int d) {
  if (d < 3) throw std::invalid_argument("galois_group_2: d must be >= 3");
  std::vector<FermatAut> elems;
  for (int j = 0; j < d; ++j) elems.emplace_back(d, 0, j);
  return Group<FermatAut>::from_elements(std::move(elems));
}

/// K_l = {diag(zeta_l^i, zeta_l^j, 1)} for l dividing d; order l^2.
inline Group<FermatAut> k_subgroup(int d, int l) {
  if (l < 1 || d % l != 0)
    throw std::invalid_argument("k_subgroup: l = " + std::to_string(l) +
                                " does not divide d = " + std::to_string(d));
  const int step = d / l;
  std::vector<FermatAut> elems;
  elems.reserve(static_cast<std::size_t>(l) * l);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) elems.emplace_back(d, a * step, b * step);
  return Group<FermatAut>::from_elements(std::move(elems));
}

/// The full automorphism group K_d semidirect the coordinate permutations;
/// order 6d^2 for d >= 4.
inline Group<FermatAut> full_aut(int d, std::size_t bound = kDefaultClosureBound) {
  if (d < 4) throw std::invalid_argument("full_aut: d must be >= 4");
  const Group<FermatAut> g = closure(
      std::vector<FermatAut>{FermatAut(d, 1, 0), FermatAut(d, 0, 1),
                             FermatAut(d, 0, 0, Perm3::named("xzy")),
                             FermatAut(d, 0, 0, Perm3::named("xy"))},
      bound);
  if (g.order() != static_cast<std::size_t>(6) * d * d)
    throw std::logic_error("full_aut: expected order 6d^2, got " + std::to_string(g.order()));
  return g;
}

inline bool is_diagonal(const Group<FermatAut>& h) {
  for (const FermatAut& g : h.elements())
    if (!g.is_diagonal()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Quotient genus and identification
// ---------------------------------------------------------------------------

/// Genus of X/H for a diagonal subgroup H, by Riemann-Hurwitz over the 3d
/// section points: 2g - 2 = |H|(2g' - 2) + sum_P (|Stab_H(P)| - 1).  The
/// ramification of a diagonal subgroup is supported entirely on the section
/// points (a nontrivial diagonal map fixes no curve point with all three
/// coordinates nonzero), so the sum is complete.  A non-integer result
/// means the group law or the stabilizer count is broken - hard failure.
inline std::int64_t quotient_genus_diagonal(int d, const Group<FermatAut>& h) {
  if (!is_diagonal(h))
    throw std::invalid_argument("quotient_genus_diagonal: subgroup contains a coordinate permutation");
  const std::int64_t g_top = static_cast<std::int64_t>(d - 1) * (d - 2) / 2;
  std::int64_t ram = 0;
  for (const FermatPoint& p : special_points(d)) {
    std::int64_t stab = 0;
    for (const FermatAut& g : h.elements())
      if (act(g, p) == p) ++stab;
    ram += stab - 1;
  }
  const std::int64_t num = 2 * g_top - 2 - ram;
  const std::int64_t order = static_cast<std::int64_t>(h.order());
  if (num % order != 0)
    throw std::logic_error("quotient_genus_diagonal: Riemann-Hurwitz total not divisible by |H|");
  const std::int64_t two_g_minus_2 = num / order;
  if ((two_g_minus_2 + 2) % 2 != 0 || two_g_minus_2 + 2 < 0)
    throw std::logic_error("quotient_genus_diagonal: non-integer or negative genus");
  return (two_g_minus_2 + 2) / 2;
}

/// Recognizes H as some K_l (then X/H is the Fermat curve of degree d/l) or
/// reports Unknown.  The lattice-index cross-check |det diag(l,l)| = |H|
/// guards the recognized case.
inline CurveId identify_quotient(int d, const Group<FermatAut>& h) {
  for (int l = 1; l <= d; ++l) {
    if (d % l != 0 || h.order() != static_cast<std::size_t>(l) * l) continue;
    if (h == k_subgroup(d, l)) {
      const std::int64_t lattice_index = static_cast<std::int64_t>(l) * l;  // det [[l,0],[0,l]]
      if (lattice_index != static_cast<std::int64_t>(h.order()))
        throw std::logic_error("identify_quotient: lattice index mismatch");
      return CurveId::fermat(d / l);
    }
  }
  return CurveId::unknown();
}

}  // namespace galois::fermat
