#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace galois {

/// Contract every family element type satisfies.  The group law is supplied
/// through free functions found by ADL; the strict order gives canonical
/// (sorted, duplicate-free) element sets so groups compare by value.
template <class E>
concept GroupElement = requires(const E& a, const E& b) {
  { group_product(a, b) } -> std::same_as<E>;
  { group_inverse(a) } -> std::same_as<E>;
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

inline constexpr std::size_t kDefaultClosureBound = 200000;
inline constexpr std::size_t kDefaultSubgroupBound = 600;

/// A finite group: its identity plus the full element list, sorted.
/// `from_elements` verifies the group axioms; the unchecked constructor is
/// reserved for call sites where closedness is already a theorem (orbit
/// closures, intersections of groups, coset partitions).
template <GroupElement E>
class Group {
 public:
  static Group trivial(E identity) {
    return Group(identity, std::vector<E>{identity});
  }

  static Group from_elements(std::vector<E> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
      throw std::invalid_argument("Group: duplicate element in set");
    if (elements.empty()) throw std::invalid_argument("Group: empty element set");
    const E id = group_product(elements.front(), group_inverse(elements.front()));
    Group g(id, std::move(elements));
    if (!g.contains(id)) throw std::invalid_argument("Group: set lacks the identity");
    for (const E& a : g.elems_) {
      if (!g.contains(group_inverse(a)))
        throw std::invalid_argument("Group: set not closed under inverse at " + to_string(a));
      for (const E& b : g.elems_)
        if (!g.contains(group_product(a, b)))
          throw std::invalid_argument("Group: set not closed under product at " +
                                      to_string(a) + " * " + to_string(b));
    }
    return g;
  }

  static Group from_sorted_unchecked(E identity, std::vector<E> sorted_elements) {
    return Group(std::move(identity), std::move(sorted_elements));
  }

  std::size_t order() const { return elems_.size(); }
  const std::vector<E>& elements() const { return elems_; }
  const E& identity() const { return identity_; }

  bool contains(const E& e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
  }

  bool is_subset_of(const Group& g) const {
    return std::includes(g.elems_.begin(), g.elems_.end(), elems_.begin(), elems_.end());
  }

  friend bool operator==(const Group& a, const Group& b) { return a.elems_ == b.elems_; }
  friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }
  /// Orders groups by (order, element list); used to sort subgroup lists.
  friend bool operator<(const Group& a, const Group& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems_ < b.elems_;
  }

 private:
  Group(E id, std::vector<E> elems) : identity_(std::move(id)), elems_(std::move(elems)) {}

  E identity_;
  std::vector<E> elems_;
};

// ---------------------------------------------------------------------------
// Closure and elementary set operations
// ---------------------------------------------------------------------------

/// Orbit closure: the set reached from {identity} by right-multiplying with
/// the generators.  For finite element types this set is the generated
/// subgroup (inverses come for free from finite element order).
template <GroupElement E>
std::vector<E> closed_set(const std::vector<E>& generators,
                          std::size_t bound = kDefaultClosureBound) {
  if (generators.empty())
    throw std::invalid_argument("closure: at least one generator required");
  const E id = group_product(generators.front(), group_inverse(generators.front()));
  std::set<E> seen{id};
  std::deque<E> todo{id};
  while (!todo.empty()) {
    const E cur = todo.front();
    todo.pop_front();
    for (const E& g : generators) {
      E next = group_product(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw BoundExceeded("closure: generated set exceeds bound " + std::to_string(bound));
        todo.push_back(std::move(next));
      }
    }
  }
  return std::vector<E>(seen.begin(), seen.end());
}

template <GroupElement E>
Group<E> closure(const std::vector<E>& generators,
                 std::size_t bound = kDefaultClosureBound) {
  if (generators.empty())
    throw std::invalid_argument("closure: at least one generator required");
  const E id = group_product(generators.front(), group_inverse(generators.front()));
  return Group<E>::from_sorted_unchecked(id, closed_set(generators, bound));
}

/// Element set {a*b : a in A, b in B}, sorted; not a group in general.
template <GroupElement E>
std::vector<E> set_product(const Group<E>& a, const Group<E>& b) {
  std::set<E> out;
  for (const E& x : a.elements())
    for (const E& y : b.elements()) out.insert(group_product(x, y));
  return std::vector<E>(out.begin(), out.end());
}

/// Whether a sorted element set satisfies the group axioms.
template <GroupElement E>
bool is_group(const std::vector<E>& sorted_set) {
  if (sorted_set.empty()) return false;
  const auto member = [&](const E& e) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), e);
  };
  const E id = group_product(sorted_set.front(), group_inverse(sorted_set.front()));
  if (!member(id)) return false;
  for (const E& a : sorted_set) {
    if (!member(group_inverse(a))) return false;
    for (const E& b : sorted_set)
      if (!member(group_product(a, b))) return false;
  }
  return true;
}

template <GroupElement E>
bool is_normal(const Group<E>& h, const Group<E>& g) {
  if (!h.is_subset_of(g)) throw std::invalid_argument("is_normal: H is not a subgroup of G");
  for (const E& x : g.elements()) {
    const E xi = group_inverse(x);
    for (const E& a : h.elements())
      if (!h.contains(group_product(group_product(x, a), xi))) return false;
  }
  return true;
}

template <GroupElement E>
Group<E> intersection(const Group<E>& a, const Group<E>& b) {
  std::vector<E> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  if (out.empty())
    throw std::invalid_argument("intersection: groups share no identity (mismatched laws?)");
  return Group<E>::from_sorted_unchecked(a.identity(), std::move(out));
}

/// Deterministic small generating set: scan elements in canonical order and
/// keep those that enlarge the generated subgroup.  Independent of how the
/// group was discovered, so reports are stable.
template <GroupElement E>
std::vector<E> canonical_generators(const Group<E>& g) {
  std::vector<E> gens;
  std::vector<E> current{g.identity()};
  if (g.order() == 1) return gens;
  for (const E& e : g.elements()) {
    if (std::binary_search(current.begin(), current.end(), e)) continue;
    gens.push_back(e);
    current = closed_set(gens, g.order());
    if (current.size() == g.order()) break;
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

/// The quotient G/H for H normal in G, represented by right cosets H*g.
/// Cosets are canonical sorted element lists ordered by their least element;
/// products are computed on representatives and located by lookup.
template <GroupElement E>
class CosetGroup {
 public:
  CosetGroup(Group<E> base, Group<E> kernel)
      : base_(std::move(base)), kernel_(std::move(kernel)) {
    if (!kernel_.is_subset_of(base_))
      throw std::invalid_argument("quotient: kernel is not a subgroup of the base");
    if (base_.order() % kernel_.order() != 0)
      throw std::logic_error("quotient: Lagrange violated - |H| does not divide |G|");
    if (!is_normal(kernel_, base_))
      throw std::invalid_argument("quotient: kernel is not normal in the base");
    std::set<E> assigned;
    for (const E& g : base_.elements()) {
      if (assigned.count(g)) continue;
      std::vector<E> coset;
      coset.reserve(kernel_.order());
      for (const E& h : kernel_.elements()) coset.push_back(group_product(h, g));
      std::sort(coset.begin(), coset.end());
      for (const E& e : coset) assigned.insert(e);
      cosets_.push_back(std::move(coset));
    }
    std::sort(cosets_.begin(), cosets_.end());
    for (std::size_t i = 0; i < cosets_.size(); ++i)
      for (const E& e : cosets_[i]) index_[e] = i;
  }

  std::size_t order() const { return cosets_.size(); }
  const std::vector<std::vector<E>>& cosets() const { return cosets_; }
  const E& representative(std::size_t i) const { return cosets_.at(i).front(); }

  std::size_t coset_index(const E& e) const {
    const auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("quotient: element outside the base group");
    return it->second;
  }

  std::size_t identity_index() const { return coset_index(base_.identity()); }
  std::size_t product(std::size_t a, std::size_t b) const {
    return coset_index(group_product(representative(a), representative(b)));
  }
  std::size_t inverse(std::size_t a) const {
    return coset_index(group_inverse(representative(a)));
  }

  const Group<E>& base() const { return base_; }
  const Group<E>& kernel() const { return kernel_; }

 private:
  Group<E> base_, kernel_;
  std::vector<std::vector<E>> cosets_;
  std::map<E, std::size_t> index_;
};

template <GroupElement E>
CosetGroup<E> quotient(const Group<E>& g, const Group<E>& h) {
  return CosetGroup<E>(g, h);
}

// ---------------------------------------------------------------------------
// Subgroup enumeration
// ---------------------------------------------------------------------------

namespace detail {

/// Index-space view of a group: elements renamed 0..n-1 with a dense
/// multiplication table, so the subgroup search stays cheap.
template <GroupElement E>
struct IndexedGroup {
  explicit IndexedGroup(const Group<E>& g) : elems(g.elements()), n(g.order()) {
    const auto index_of = [&](const E& e) {
      const auto it = std::lower_bound(elems.begin(), elems.end(), e);
      if (it == elems.end() || !(*it == e))
        throw std::logic_error("enumerate_subgroups: product escapes the group");
      return static_cast<std::uint32_t>(it - elems.begin());
    };
    mult.resize(n * n);
    inv.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      inv[a] = index_of(group_inverse(elems[a]));
      for (std::size_t b = 0; b < n; ++b)
        mult[a * n + b] = index_of(group_product(elems[a], elems[b]));
    }
    id = index_of(group_product(elems[0], group_inverse(elems[0])));
  }

  std::uint32_t prod(std::uint32_t a, std::uint32_t b) const { return mult[a * n + b]; }

  std::vector<std::uint32_t> close(const std::vector<std::uint32_t>& gens) const {
    std::vector<char> member(n, 0);
    std::vector<std::uint32_t> out, todo;
    member[id] = 1;
    out.push_back(id);
    todo.push_back(id);
    while (!todo.empty()) {
      const std::uint32_t cur = todo.back();
      todo.pop_back();
      for (const std::uint32_t g : gens) {
        const std::uint32_t next = prod(cur, g);
        if (!member[next]) {
          member[next] = 1;
          out.push_back(next);
          todo.push_back(next);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<E> elems;
  std::size_t n;
  std::vector<std::uint32_t> mult, inv;
  std::uint32_t id = 0;
};

}  // namespace detail

/// All subgroups of g, the trivial subgroup and g itself included.
///
/// Search: seed with every cyclic subgroup, then repeatedly extend a known
/// subgroup by one outside element and close, de-duplicating by element set,
/// until a fixpoint.  Every subgroup is reachable this way because each has
/// a finite generating chain.  `ordering` selects the internal exploration
/// order (0 = canonical, 1 = reversed); the resulting set is identical for
/// both, which the test suite relies on.
template <GroupElement E>
std::vector<Group<E>> enumerate_subgroups(const Group<E>& g,
                                          std::size_t bound = kDefaultSubgroupBound,
                                          int ordering = 0) {
  if (g.order() > bound)
    throw BoundExceeded("enumerate_subgroups: group order " + std::to_string(g.order()) +
                        " exceeds bound " + std::to_string(bound));
  const detail::IndexedGroup<E> ig(g);
  std::vector<std::uint32_t> iter(ig.n);
  for (std::size_t i = 0; i < ig.n; ++i) iter[i] = static_cast<std::uint32_t>(i);
  if (ordering != 0) std::reverse(iter.begin(), iter.end());

  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> found;  // elems -> gens
  std::deque<std::vector<std::uint32_t>> queue;                            // element sets
  const auto add = [&](std::vector<std::uint32_t> elems, std::vector<std::uint32_t> gens) {
    if (ig.n % elems.size() != 0)
      throw std::logic_error("enumerate_subgroups: Lagrange violated for subgroup of order " +
                             std::to_string(elems.size()));
    if (found.emplace(elems, std::move(gens)).second) queue.push_back(std::move(elems));
  };

  add({ig.id}, {});
  for (const std::uint32_t s : iter) add(ig.close({s}), {s});
  while (!queue.empty()) {
    const std::vector<std::uint32_t> elems = std::move(queue.front());
    queue.pop_front();
    if (elems.size() == ig.n) continue;  // the full group cannot be extended
    const std::vector<std::uint32_t> gens = found.at(elems);
    for (const std::uint32_t s : iter) {
      if (std::binary_search(elems.begin(), elems.end(), s)) continue;
      std::vector<std::uint32_t> next_gens = gens;
      next_gens.push_back(s);
      std::vector<std::uint32_t> closed = ig.close(next_gens);  // before the move below
      add(std::move(closed), std::move(next_gens));
    }
  }

  std::vector<Group<E>> out;
  out.reserve(found.size());
  for (const auto& [elems, gens] : found) {
    std::vector<E> members;
    members.reserve(elems.size());
    for (const std::uint32_t i : elems) members.push_back(ig.elems[i]);
    std::sort(members.begin(), members.end());
    out.push_back(Group<E>::from_elements(std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace galois
