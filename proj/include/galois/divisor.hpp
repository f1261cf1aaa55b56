#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"

namespace galois {

/// An effective divisor: a finite set of points with nonnegative integer
/// multiplicities.  Zero-multiplicity entries are never stored, so equal
/// divisors compare equal structurally.
template <class P>
class Divisor {
 public:
  Divisor() = default;

  void add(const P& p, std::int64_t mult = 1) {
    if (mult < 0) throw std::invalid_argument("Divisor: negative multiplicity");
    if (mult == 0) return;
    coeffs_[p] += mult;
  }

  std::int64_t coefficient(const P& p) const {
    const auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0 : it->second;
  }

  std::int64_t degree() const {
    std::int64_t sum = 0;
    for (const auto& [p, n] : coeffs_) sum += n;
    return sum;
  }

  const std::map<P, std::int64_t>& terms() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  /// True when every multiplicity is divisible by k.
  bool divisible_by(std::int64_t k) const {
    for (const auto& [p, n] : coeffs_)
      if (n % k != 0) return false;
    return true;
  }

  Divisor scaled(std::int64_t k) const {
    Divisor out;
    for (const auto& [p, n] : coeffs_) out.add(p, n * k);
    return out;
  }

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

 private:
  std::map<P, std::int64_t> coeffs_;
};

template <class P>
std::string to_string(const Divisor<P>& d) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& [p, n] : d.terms()) {
    if (!out.empty()) out += " + ";
    if (n != 1) out += std::to_string(n) + "*";
    out += "(" + to_string(p) + ")";
  }
  return out;
}

/// The sum over the *elements* of S of sigma(Q), counted with multiplicity:
/// a point hit by k distinct elements appears with coefficient k, so the
/// degree always equals |S|.  (This is the sum over the group, not over the
/// distinct image points.)
template <class E, class P>
Divisor<P> orbit_sum(const std::vector<E>& elems, const P& q) {
  Divisor<P> out;
  for (const E& g : elems) out.add(act(g, q));
  return out;
}

template <GroupElement E, class P>
Divisor<P> orbit_sum(const Group<E>& g, const P& q) {
  return orbit_sum(g.elements(), q);
}

template <GroupElement E, class P>
std::set<P> orbit(const Group<E>& h, const P& q) {
  std::set<P> out;
  for (const E& g : h.elements()) out.insert(act(g, q));
  return out;
}

/// Canonical name for the H-orbit of q: its least point.
template <GroupElement E, class P>
P orbit_label(const Group<E>& h, const P& q) {
  return *orbit(h, q).begin();
}

/// Pushforward along X -> X/H: each point maps to its orbit label, keeping
/// multiplicity.
template <GroupElement E, class P>
Divisor<P> pushforward(const Group<E>& h, const Divisor<P>& d) {
  Divisor<P> out;
  for (const auto& [p, n] : d.terms()) out.add(orbit_label(h, p), n);
  return out;
}

/// Pullback along X -> X/H of a divisor supported on orbit labels: each
/// label Q expands to sum_{h in H} h(Q), so points with stabilizer order s
/// receive coefficient s and degrees scale by |H|.
template <GroupElement E, class P>
Divisor<P> pullback(const Group<E>& h, const Divisor<P>& dbar) {
  Divisor<P> out;
  for (const auto& [p, n] : dbar.terms()) {
    if (!(orbit_label(h, p) == p))
      throw std::invalid_argument("pullback: divisor not supported on orbit labels at " +
                                  to_string(p));
    for (const E& g : h.elements()) out.add(act(g, p), n);
  }
  return out;
}

}  // namespace galois
