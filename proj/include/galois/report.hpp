#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace galois {

/// Outcome of one labelled condition.  `Asserted` marks hypotheses taken
/// from the scenario assumptions rather than computed (and counts as
/// satisfied); `NotEvaluated` marks conditions outside the checker's reach
/// (and does not).
enum class Verdict { Holds, Fails, Asserted, NotEvaluated };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Asserted: return "asserted";
    case Verdict::NotEvaluated: return "not-evaluated";
  }
  return "?";
}

struct ConditionResult {
  Verdict verdict = Verdict::NotEvaluated;
  std::string witness;  // set on failure: the offending element/point/orbit

  static ConditionResult holds() { return {Verdict::Holds, ""}; }
  static ConditionResult asserted() { return {Verdict::Asserted, ""}; }
  static ConditionResult not_evaluated() { return {Verdict::NotEvaluated, ""}; }
  static ConditionResult fails(std::string witness) { return {Verdict::Fails, std::move(witness)}; }
};

/// Verdicts for a set of single-letter conditions, e.g. (a)(b)(c) for a base
/// configuration or (d)(e)(f) for a candidate subgroup.
class ConditionReport {
 public:
  void set(char label, ConditionResult r) { items_[label] = std::move(r); }

  const ConditionResult& get(char label) const {
    const auto it = items_.find(label);
    if (it == items_.end())
      throw std::invalid_argument(std::string("ConditionReport: no condition '") + label + "'");
    return it->second;
  }

  bool has(char label) const { return items_.count(label) != 0; }
  const std::map<char, ConditionResult>& items() const { return items_; }

  /// Satisfied as a whole: every recorded condition holds or is asserted.
  bool overall() const {
    if (items_.empty()) return false;
    for (const auto& [label, r] : items_)
      if (r.verdict != Verdict::Holds && r.verdict != Verdict::Asserted) return false;
    return true;
  }

  /// Witness of the first failing condition, if any.
  std::string first_witness() const {
    for (const auto& [label, r] : items_)
      if (r.verdict == Verdict::Fails)
        return std::string("(") + label + ") " + r.witness;
    return "";
  }

 private:
  std::map<char, ConditionResult> items_;
};

}  // namespace galois
