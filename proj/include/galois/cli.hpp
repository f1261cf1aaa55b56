#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "json_io.hpp"

namespace galois::cli {

// Exit codes shared by the subcommands:
//   0  success (classify: theorem match; check: descendant; ancestor: verified)
//   1  check: conditions fail, the subgroup is not a descendant kernel
//   2  usage or parse error
//   3  classify: descent results contradict the predicted kernel list
//   4  a search bound was exceeded (see --bound / GALOIS_DESCENT_BOUND)
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotDescendant = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitBound = 4;

namespace detail {

struct CurveRef {
  CurveId::Family family = CurveId::Family::Unknown;
  int param = 0;
};

inline CurveRef parse_curve(const std::string& label) {
  CurveRef out;
  if (label.size() < 3 || label[1] != '_')
    throw std::invalid_argument("curve must look like F_6 or T_4, got \"" + label + "\"");
  const std::string num = label.substr(2);
  for (const char c : num)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("curve parameter must be a number, got \"" + label + "\"");
  out.param = std::stoi(num);
  if (label[0] == 'F') out.family = CurveId::Family::Fermat;
  else if (label[0] == 'T') out.family = CurveId::Family::Takahashi;
  else throw std::invalid_argument("curve family must be F or T, got \"" + label + "\"");
  return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

/// Subgroup spec: "K_l", "G1", "G2" ("G3", "aut"), or a space-separated
/// list of generator strings in the family's element syntax.
inline Group<fermat::FermatAut> parse_subgroup_fermat(int d, const std::string& spec) {
  if (spec == "G1") return fermat::galois_group_1(d);
  if (spec == "G2") return fermat::galois_group_2(d);
  if (spec == "aut") return fermat::full_aut(d);
  if (spec.rfind("K_", 0) == 0) return fermat::k_subgroup(d, std::stoi(spec.substr(2)));
  std::vector<fermat::FermatAut> gens;
  for (const std::string& tok : split_ws(spec)) gens.push_back(fermat::parse_fermat_aut(tok, d));
  if (gens.empty()) throw std::invalid_argument("empty subgroup spec");
  return closure(gens);
}

inline Group<takahashi::TakAut> parse_subgroup_takahashi(int m, const std::string& spec) {
  if (spec == "G1") return takahashi::g1(m);
  if (spec == "G2") return takahashi::g2(m);
  if (spec == "G3") return takahashi::g3(m);
  if (spec == "aut") return takahashi::full_aut(m);
  if (spec.rfind("K_", 0) == 0) return takahashi::k_subgroup(m, std::stoi(spec.substr(2)));
  std::vector<takahashi::TakAut> gens;
  for (const std::string& tok : split_ws(spec)) gens.push_back(takahashi::parse_tak_aut(tok, m));
  if (gens.empty()) throw std::invalid_argument("empty subgroup spec");
  return closure(gens);
}

inline std::size_t default_bound() {
  if (const char* env = std::getenv("GALOIS_DESCENT_BOUND")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSubgroupBound;
}

inline void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + output_path);
  f << text;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

template <class S>
std::string classification_csv(const criteria::Classification<S>& c) {
  std::string out = "order,generators,d,e,f,descendant,quotient\n";
  for (const auto& e : c.entries) {
    std::string gens;
    for (const auto& g : e.generators) {
      if (!gens.empty()) gens += " ";
      gens += to_string(g);
    }
    out += std::to_string(e.subgroup.order()) + "," + csv_field(gens);
    for (const char cond : {'d', 'e', 'f'})
      out += std::string(",") + verdict_name(e.report.get(cond).verdict);
    out += std::string(",") + (e.descendant ? "true" : "false");
    out += "," + csv_field(e.quotient.label()) + "\n";
  }
  return out;
}

template <class S>
std::string classification_md(const S& s, const criteria::Classification<S>& c) {
  std::string out = "# Descent classification for " + s.label() + "\n\n";
  out += "Subgroups enumerated: " + std::to_string(c.subgroup_count) + "\n\n";
  out += "| order | generators | (d) | (e) | (f) | descendant | quotient |\n";
  out += "| --- | --- | --- | --- | --- | --- | --- |\n";
  for (const auto& e : c.entries) {
    std::string gens;
    for (const auto& g : e.generators) {
      if (!gens.empty()) gens += " ";
      gens += "`" + to_string(g) + "`";
    }
    out += "| " + std::to_string(e.subgroup.order()) + " | " + gens;
    for (const char cond : {'d', 'e', 'f'})
      out += std::string(" | ") + verdict_name(e.report.get(cond).verdict);
    out += std::string(" | ") + (e.descendant ? "yes" : "no");
    out += " | " + e.quotient.label() + " |\n";
  }
  out += "\nPredicted kernels ";
  out += c.theorem_match ? "match the descent results.\n" : "do NOT match the descent results.\n";
  return out;
}

template <class S>
int run_classify_scenario(const S& s, const std::string& format, const std::string& output,
                          std::size_t bound, std::ostream& out) {
  const auto c = criteria::classify_descendants(s, bound);
  std::string text;
  if (format == "json") text = io::classification_json(s, c).dump(2) + "\n";
  else if (format == "csv") text = classification_csv(c);
  else if (format == "md") text = classification_md(s, c);
  else throw std::invalid_argument("unknown format " + format);
  emit(text, output, out);
  return c.theorem_match ? kExitOk : kExitMismatch;
}

template <class S>
int run_check_scenario(const S& s, const Group<typename S::Elem>& h, const std::string& output,
                       std::ostream& out) {
  const ConditionReport rep = criteria::check_descent(s, h);
  const CurveId q = s.identify(h);
  emit(io::check_json(s, h, rep, q).dump(2) + "\n", output, out);
  return rep.overall() ? kExitOk : kExitNotDescendant;
}

}  // namespace detail

/// Entry point used by the binary and the test suite alike.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois-point descent calculator for Fermat and Takahashi plane curves"};
  app.require_subcommand(1);

  std::string curve, format = "json", output, subgroup_spec, scenario = "A", inner_file;
  std::size_t bound = detail::default_bound();

  CLI::App* classify = app.add_subcommand(
      "classify", "Enumerate all subgroups and report which are descendant kernels");
  classify->add_option("--curve", curve, "curve label, e.g. F_6 or T_4")->required();
  classify->add_option("--format", format, "json, csv, or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  classify->add_option("--scenario", scenario, "Takahashi base-point scenario, A or B")
      ->check(CLI::IsMember({"A", "B"}));
  classify->add_option("--output", output, "write the report to a file");
  classify->add_option("--bound", bound, "subgroup enumeration bound");

  CLI::App* check = app.add_subcommand(
      "check", "Check the descent conditions for one subgroup or an inner scenario file");
  check->add_option("--curve", curve, "curve label, e.g. F_6 or T_4");
  check->add_option("--subgroup", subgroup_spec,
                    "K_l, G1, G2, G3, aut, or space-separated generators");
  check->add_option("--scenario", scenario, "Takahashi base-point scenario, A or B")
      ->check(CLI::IsMember({"A", "B"}));
  check->add_option("--inner", inner_file, "JSON file with an inner base-point scenario");
  check->add_option("--output", output, "write the report to a file");

  CLI::App* genus = app.add_subcommand(
      "genus", "Genus of the quotient of a Fermat curve by a diagonal subgroup");
  genus->add_option("--curve", curve, "Fermat curve label, e.g. F_6")->required();
  genus->add_option("--subgroup", subgroup_spec, "K_l, G1, G2, or generators")->required();
  genus->add_option("--output", output, "write the report to a file");

  CLI::App* ancestor = app.add_subcommand(
      "ancestor", "Exhibit the curve as a descendant of the doubled-parameter curve");
  ancestor->add_option("--curve", curve, "curve label, e.g. F_6 or T_4")->required();
  ancestor->add_option("--scenario", scenario, "Takahashi base-point scenario, A or B")
      ->check(CLI::IsMember({"A", "B"}));
  ancestor->add_option("--output", output, "write the report to a file");

  CLI::App* dump = app.add_subcommand("dump-group", "List the elements of a named subgroup");
  dump->add_option("--curve", curve, "curve label, e.g. F_6 or T_4")->required();
  dump->add_option("--subgroup", subgroup_spec, "K_l, G1, G2, G3, aut, or generators")
      ->required();
  dump->add_option("--output", output, "write the report to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify->parsed()) {
      const detail::CurveRef c = detail::parse_curve(curve);
      if (c.family == CurveId::Family::Fermat)
        return detail::run_classify_scenario(criteria::FermatScenario::standard(c.param), format,
                                             output, bound, out);
      if (scenario == "B")
        return detail::run_classify_scenario(criteria::TakahashiScenarioB::standard(c.param),
                                             format, output, bound, out);
      return detail::run_classify_scenario(criteria::TakahashiScenarioA::standard(c.param),
                                           format, output, bound, out);
    }

    if (check->parsed()) {
      if (!inner_file.empty()) {
        std::ifstream f(inner_file);
        if (!f) throw std::invalid_argument("cannot open scenario file " + inner_file);
        io::json j;
        f >> j;
        const criteria::CustomScenario s = io::load_custom_scenario(j);
        const ConditionReport rep = criteria::check_inner(s);
        detail::emit(io::inner_check_json(s, rep).dump(2) + "\n", output, out);
        return rep.overall() ? kExitOk : kExitNotDescendant;
      }
      if (curve.empty() || subgroup_spec.empty())
        throw std::invalid_argument("check needs --curve and --subgroup, or --inner FILE");
      const detail::CurveRef c = detail::parse_curve(curve);
      if (c.family == CurveId::Family::Fermat)
        return detail::run_check_scenario(criteria::FermatScenario::standard(c.param),
                                          detail::parse_subgroup_fermat(c.param, subgroup_spec),
                                          output, out);
      const auto h = detail::parse_subgroup_takahashi(c.param, subgroup_spec);
      if (scenario == "B")
        return detail::run_check_scenario(criteria::TakahashiScenarioB::standard(c.param), h,
                                          output, out);
      return detail::run_check_scenario(criteria::TakahashiScenarioA::standard(c.param), h,
                                        output, out);
    }

    if (genus->parsed()) {
      const detail::CurveRef c = detail::parse_curve(curve);
      if (c.family != CurveId::Family::Fermat)
        throw std::invalid_argument("genus is implemented for Fermat curves only");
      const auto h = detail::parse_subgroup_fermat(c.param, subgroup_spec);
      io::json j;
      j["curve"] = "F_" + std::to_string(c.param);
      j["subgroup"] = io::group_summary(h);
      j["genus"] = fermat::quotient_genus_diagonal(c.param, h);
      j["quotient"] = fermat::identify_quotient(c.param, h).label();
      detail::emit(j.dump(2) + "\n", output, out);
      return kExitOk;
    }

    if (ancestor->parsed()) {
      const detail::CurveRef c = detail::parse_curve(curve);
      io::json j;
      bool ok = false;
      if (c.family == CurveId::Family::Fermat) {
        const auto w = criteria::ancestor_witness_fermat(c.param);
        j = io::ancestor_json(w, "F_" + std::to_string(c.param));
        ok = w.verified;
      } else if (scenario == "B") {
        const auto w = criteria::ancestor_witness_takahashi_b(c.param);
        j = io::ancestor_json(w, "T_" + std::to_string(c.param));
        ok = w.verified;
      } else {
        const auto w = criteria::ancestor_witness_takahashi_a(c.param);
        j = io::ancestor_json(w, "T_" + std::to_string(c.param));
        ok = w.verified;
      }
      detail::emit(j.dump(2) + "\n", output, out);
      return ok ? kExitOk : kExitMismatch;
    }

    if (dump->parsed()) {
      const detail::CurveRef c = detail::parse_curve(curve);
      io::json j;
      j["curve"] = curve;
      if (c.family == CurveId::Family::Fermat)
        j["subgroup"] = io::group_full(detail::parse_subgroup_fermat(c.param, subgroup_spec));
      else
        j["subgroup"] = io::group_full(detail::parse_subgroup_takahashi(c.param, subgroup_spec));
      detail::emit(j.dump(2) + "\n", output, out);
      return kExitOk;
    }
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace galois::cli
