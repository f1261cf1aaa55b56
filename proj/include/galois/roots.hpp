#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace galois {

/// Bound on the moduli that mixed-modulus products are allowed to produce.
/// Mutable so callers working with unusually large scenarios can raise it.
inline std::int64_t& unity_modulus_bound() {
  static std::int64_t bound = 1'000'000;
  return bound;
}

/// A root of unity zeta_N^e = exp(2*pi*i*e/N), stored exactly as the pair
/// (modulus, exponent) with 0 <= e < N.  No floating point is involved in
/// any operation.
///
/// Two values with different moduli are equal when they agree after
/// rescaling to the common modulus; comparison therefore works on the
/// reduced form (N/g, e/g) with g = gcd(N, e), which is unique per value.
class UnityExp {
 public:
  /// The value 1 (= zeta_1^0).
  UnityExp() = default;

  UnityExp(std::int64_t modulus, std::int64_t exponent) : n_(modulus) {
    if (modulus < 1) throw std::invalid_argument("UnityExp: modulus must be >= 1");
    if (modulus > unity_modulus_bound())
      throw BoundExceeded("UnityExp: modulus " + std::to_string(modulus) +
                          " exceeds bound " + std::to_string(unity_modulus_bound()));
    e_ = ((exponent % n_) + n_) % n_;
  }

  static UnityExp one() { return UnityExp(); }

  std::int64_t modulus() const { return n_; }
  std::int64_t exponent() const { return e_; }
  bool is_one() const { return e_ == 0; }

  /// Multiplicative order: the smallest k >= 1 with pow(k) == 1.
  std::int64_t order() const { return n_ / std::gcd(n_, e_); }

  UnityExp operator*(const UnityExp& o) const {
    const std::int64_t g = std::gcd(n_, o.n_);
    const std::int64_t m = (n_ / g) * o.n_;  // lcm; fits in 64 bits given the bound
    if (m > unity_modulus_bound())
      throw BoundExceeded("UnityExp: product modulus " + std::to_string(m) +
                          " exceeds bound " + std::to_string(unity_modulus_bound()));
    return UnityExp(m, e_ * (m / n_) + o.e_ * (m / o.n_));
  }

  UnityExp inverse() const { return UnityExp(n_, n_ - e_); }

  UnityExp operator/(const UnityExp& o) const { return *this * o.inverse(); }

  UnityExp pow(std::int64_t k) const {
    const std::int64_t km = ((k % n_) + n_) % n_;
    return UnityExp(n_, (e_ % n_) * km % n_);
  }

  /// Re-express over a larger modulus; new_modulus must be a multiple of
  /// the current one.
  UnityExp rescale(std::int64_t new_modulus) const {
    if (new_modulus < 1 || new_modulus % n_ != 0)
      throw std::invalid_argument("UnityExp: cannot rescale modulus " +
                                  std::to_string(n_) + " to " + std::to_string(new_modulus));
    return UnityExp(new_modulus, e_ * (new_modulus / n_));
  }

  friend bool operator==(const UnityExp& a, const UnityExp& b) {
    const std::int64_t ga = std::gcd(a.n_, a.e_), gb = std::gcd(b.n_, b.e_);
    return a.n_ / ga == b.n_ / gb && a.e_ / ga == b.e_ / gb;
  }
  friend bool operator!=(const UnityExp& a, const UnityExp& b) { return !(a == b); }
  friend bool operator<(const UnityExp& a, const UnityExp& b) {
    const std::int64_t ga = std::gcd(a.n_, a.e_), gb = std::gcd(b.n_, b.e_);
    if (a.n_ / ga != b.n_ / gb) return a.n_ / ga < b.n_ / gb;
    return a.e_ / ga < b.e_ / gb;
  }

 private:
  std::int64_t n_ = 1;  // gcd(n, e) may be > 1: values keep the modulus they
  std::int64_t e_ = 0;  // were built with so a scenario prints uniformly
};

inline std::string to_string(const UnityExp& z) {
  return "zeta(" + std::to_string(z.modulus()) + ")^" + std::to_string(z.exponent());
}

/// Parses the textual form "zeta(N)^e"; the "^e" part may be omitted and
/// defaults to 1.
inline UnityExp parse_unity(const std::string& text) {
  const auto fail = [&] {
    throw std::invalid_argument("UnityExp: cannot parse '" + text + "', expected zeta(N)^e");
  };
  if (text.rfind("zeta(", 0) != 0) fail();
  const auto close = text.find(')', 5);
  if (close == std::string::npos) fail();
  std::int64_t n = 0, e = 1;
  try {
    std::size_t used = 0;
    n = std::stoll(text.substr(5, close - 5), &used);
    if (used != close - 5) fail();
    if (close + 1 < text.size()) {
      if (text[close + 1] != '^') fail();
      const std::string rest = text.substr(close + 2);
      e = std::stoll(rest, &used);
      if (used != rest.size() || rest.empty()) fail();
    }
  } catch (const std::invalid_argument&) {
    fail();
  } catch (const std::out_of_range&) {
    fail();
  }
  return UnityExp(n, e);
}

}  // namespace galois
