#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "criteria.hpp"
#include "group.hpp"
#include "report.hpp"
#include "scenario.hpp"
#include "table_action.hpp"

namespace galois::io {

// ordered_json keeps insertion order, so emitted reports are byte-stable.
using json = nlohmann::ordered_json;

template <GroupElement E>
json group_summary(const Group<E>& g) {
  json j;
  j["order"] = g.order();
  json gens = json::array();
  for (const E& e : canonical_generators(g)) gens.push_back(to_string(e));
  j["generators"] = std::move(gens);
  return j;
}

template <GroupElement E>
json group_full(const Group<E>& g) {
  json j = group_summary(g);
  json elems = json::array();
  for (const E& e : g.elements()) elems.push_back(to_string(e));
  j["elements"] = std::move(elems);
  return j;
}

inline json condition_json(const ConditionResult& r) {
  json j;
  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness;
  return j;
}

inline json report_json(const ConditionReport& rep) {
  json j;
  for (const auto& [c, r] : rep.items()) j[std::string(1, c)] = condition_json(r);
  return j;
}

template <class S>
json scenario_json(const S& s) {
  json j;
  j["family"] = s.family();
  j["curve"] = s.label();
  j["parameter"] = s.parameter();
  j["base_point"] = to_string(s.base);
  j["ambient_order"] = s.ambient.order();
  j["g1"] = group_summary(s.g1);
  j["g2"] = group_summary(s.g2);
  j["assumptions"] = s.assumptions();
  j["notes"] = s.notes();
  return j;
}

template <class S>
json entry_json(const criteria::ClassifyEntry<S>& e) {
  json j;
  j["order"] = e.subgroup.order();
  json gens = json::array();
  for (const auto& g : e.generators) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  j["conditions"] = report_json(e.report);
  j["descendant"] = e.descendant;
  j["quotient"] = e.quotient.label();
  j["witness"] = e.report.first_witness();
  return j;
}

template <class S>
json classification_json(const S& s, const criteria::Classification<S>& c) {
  json j;
  j["scenario"] = scenario_json(s);
  j["base_conditions"] = report_json(c.base_report);
  if (c.self) {
    json self;
    self["order"] = c.self->subgroup.order();
    self["quotient"] = s.label();
    self["note"] = "trivial subgroup; the quotient is the curve itself";
    j["self"] = std::move(self);
  }
  json subs = json::array();
  for (const auto& e : c.entries) subs.push_back(entry_json(e));
  j["subgroups"] = std::move(subs);
  j["subgroup_count"] = c.subgroup_count;
  json predicted = json::array();
  for (const auto& k : s.predicted_kernels()) predicted.push_back(group_summary(k));
  j["predicted_kernels"] = std::move(predicted);
  j["theorem_match"] = c.theorem_match;
  return j;
}

template <class S>
json check_json(const S& s, const Group<typename S::Elem>& h, const ConditionReport& rep,
                const CurveId& quotient) {
  json j;
  j["scenario"] = scenario_json(s);
  j["subgroup"] = group_full(h);
  j["base_conditions"] = report_json(criteria::check_outer_base(s));
  j["conditions"] = report_json(rep);
  j["descendant"] = rep.overall();
  j["quotient"] = quotient.label();
  j["witness"] = rep.first_witness();
  return j;
}

template <class S>
json ancestor_json(const criteria::AncestorWitness<S>& w, const std::string& curve) {
  json j;
  j["curve"] = curve;
  j["ancestor"] = w.ancestor.label();
  j["kernel"] = group_summary(w.kernel);
  j["conditions"] = report_json(w.report);
  j["quotient"] = w.quotient.label();
  j["verified"] = w.verified;
  return j;
}

// ---------------------------------------------------------------------------
// Custom (table-driven) scenarios from JSON
// ---------------------------------------------------------------------------
//
// Shape:
//   {
//     "points": ["q0", "q1", ...],
//     "g1": [[...image table...], ...],   // generators; identity implied
//     "g2": [[...]],
//     "h":  [[...]],                      // may be empty (trivial H)
//     "p1": "q0", "p2": "q1",
//     "assume": ["a"]                     // conditions taken on trust
//   }

namespace detail {

inline table::TableAut parse_perm(const table::LabelsPtr& labels, const json& row) {
  if (!row.is_array())
    throw std::invalid_argument("scenario file: permutation must be an array of indices");
  std::vector<std::uint16_t> ims;
  for (const auto& v : row) {
    if (!v.is_number_unsigned())
      throw std::invalid_argument("scenario file: permutation entries must be point indices");
    ims.push_back(v.get<std::uint16_t>());
  }
  return table::TableAut(labels, std::move(ims));
}

inline Group<table::TableAut> parse_group(const table::LabelsPtr& labels, const json& rows) {
  std::vector<table::TableAut> gens{table::TableAut::identity(labels)};
  for (const auto& row : rows) gens.push_back(parse_perm(labels, row));
  return closure(gens);
}

inline table::TablePoint parse_point(const table::LabelsPtr& labels, const json& v) {
  const std::string name = v.get<std::string>();
  for (std::size_t i = 0; i < labels->size(); ++i)
    if ((*labels)[i] == name) return table::TablePoint(labels, static_cast<std::uint16_t>(i));
  throw std::invalid_argument("scenario file: unknown point \"" + name + "\"");
}

}  // namespace detail

inline criteria::CustomScenario load_custom_scenario(const json& j) {
  for (const char* key : {"points", "g1", "g2", "h", "p1", "p2"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("scenario file: missing field \"") + key + "\"");
  std::vector<std::string> names;
  for (const auto& v : j.at("points")) names.push_back(v.get<std::string>());
  const table::LabelsPtr labels = table::make_labels(std::move(names));
  std::set<char> assumed;
  if (j.contains("assume"))
    for (const auto& v : j.at("assume")) {
      const std::string s = v.get<std::string>();
      if (s.size() != 1 || s[0] < 'a' || s[0] > 'g')
        throw std::invalid_argument("scenario file: assume entries must be one of a..g");
      assumed.insert(s[0]);
    }
  return criteria::CustomScenario(
      labels, detail::parse_group(labels, j.at("g1")), detail::parse_group(labels, j.at("g2")),
      detail::parse_group(labels, j.at("h")), detail::parse_point(labels, j.at("p1")),
      detail::parse_point(labels, j.at("p2")), std::move(assumed));
}

inline json inner_check_json(const criteria::CustomScenario& s, const ConditionReport& rep) {
  json j;
  json sc;
  sc["family"] = "custom";
  sc["points"] = *s.labels;
  sc["g1"] = group_summary(s.g1);
  sc["g2"] = group_summary(s.g2);
  sc["p1"] = to_string(s.p1);
  sc["p2"] = to_string(s.p2);
  json assume = json::array();
  for (const char c : s.assumed) assume.push_back(std::string(1, c));
  sc["assume"] = std::move(assume);
  j["scenario"] = std::move(sc);
  j["subgroup"] = group_full(s.h);
  j["conditions"] = report_json(rep);
  j["descendant"] = rep.overall();
  j["witness"] = rep.first_witness();
  return j;
}

}  // namespace galois::io
