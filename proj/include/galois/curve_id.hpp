#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace galois {

/// Identification of a quotient curve.  Genus is recorded when the family
/// pins it down: Fermat curves of degree n have genus (n-1)(n-2)/2 and a
/// conic has genus 0; for other members it is left unset.
struct CurveId {
  enum class Family { Fermat, Takahashi, Conic, Unknown };

  Family family = Family::Unknown;
  int param = 0;
  std::optional<std::int64_t> genus;

  static CurveId fermat(int n) {
    return {Family::Fermat, n, static_cast<std::int64_t>(n - 1) * (n - 2) / 2};
  }
  static CurveId takahashi(int n) { return {Family::Takahashi, n, std::nullopt}; }
  static CurveId conic() { return {Family::Conic, 0, 0}; }
  static CurveId unknown() { return {Family::Unknown, 0, std::nullopt}; }

  std::string label() const {
    switch (family) {
      case Family::Fermat: return "F_" + std::to_string(param);
      case Family::Takahashi: return "T_" + std::to_string(param);
      case Family::Conic: return "conic";
      case Family::Unknown: return "unknown";
    }
    return "unknown";
  }

  friend bool operator==(const CurveId& a, const CurveId& b) {
    return a.family == b.family && a.param == b.param;
  }
  friend bool operator!=(const CurveId& a, const CurveId& b) { return !(a == b); }
};

}  // namespace galois
