// Command implementations behind the lusym CLI. Each returns the rendered
// output and the process exit code so tests can drive them directly.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lusym/lusym.hpp"

namespace lusym::cli {

enum class Format { Json, Table };

struct CommandResult {
  int exit_code = 0;
  std::string output;  // stdout on success
  std::string error;   // stderr message, if any
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline CommandResult usage_error(const std::string& message) {
  return {kExitUsage, "", message};
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline long family_rank(const GroupFamily& f, const Symbol& s) {
  return f.is_unitary() ? rank_u(s) : rank(s);
}

inline long family_degree(const GroupFamily& f, const Symbol& s) {
  return f.is_unitary() ? deg_unitary(s, f.size()) : deg_sp_o(s, f);
}

inline CommandResult cmd_enumerate(const std::string& family, Format format,
                                   const Limits& limits = kDefaultLimits) {
  const GroupFamily f = GroupFamily::parse(family);
  const auto members = enumerate_family(f, limits);

  if (format == Format::Json) {
    json rows = json::array();
    for (const auto& s : members)
      rows.push_back({{"symbol", s},
                      {"defect", defect(s)},
                      {"rank", family_rank(f, s)},
                      {"upsilon", upsilon(s)},
                      {"degree", family_degree(f, s)}});
    return {kExitOk, dump({{"family", f}, {"count", members.size()}, {"symbols", rows}}), ""};
  }
  Table t({"symbol", "defect", f.is_unitary() ? "rk_U" : "rk", "upsilon", "deg_q"});
  for (const auto& s : members)
    t.add({to_compact(s), std::to_string(defect(s)), std::to_string(family_rank(f, s)),
           to_text(upsilon(s)), std::to_string(family_degree(f, s))});
  return {kExitOk,
          f.tag() + ": " + std::to_string(members.size()) + " unipotent symbols\n" +
              t.render(),
          ""};
}

// Levels at which admissibility is reported: 0..n-k, even only for Sp/O.
inline std::vector<int> admissibility_levels(const DualPair& pair) {
  std::vector<int> out;
  const int step = pair.is_unitary() ? 1 : 2;
  for (int ell = 0; ell <= pair.n() - pair.k(); ell += step)
    out.push_back(ell);
  return out;
}

inline CommandResult cmd_theta(const std::string& pair_text, const Symbol& s, Format format,
                               const Limits& limits = kDefaultLimits) {
  const DualPair pair = DualPair::parse(pair_text);
  if (!family_contains(pair.first(), s))
    return usage_error("symbol " + to_compact(s) + " is not in S_" + pair.first().tag());

  const int t = tau(pair, s);
  std::optional<Symbol> image;
  if (t >= 0)
    image = theta_bar(pair, s);
  const auto partners = theta_partners(pair, s, limits);
  const auto levels = admissibility_levels(pair);

  if (format == Format::Json) {
    json admissible = json::array();
    for (int ell : levels)
      admissible.push_back({{"ell", ell}, {"admissible", is_admissible(pair, s, ell)}});
    json out = {{"pair", pair}, {"symbol", s}, {"tau", t}};
    out["theta_bar"] = image ? json(*image) : json("undefined");
    out["partners"] = partners;
    out["admissible"] = admissible;
    return {kExitOk, dump(out), ""};
  }

  std::string text = "pair       " + pair.tag() + "\n" +
                     "symbol     " + to_compact(s) + "\n" +
                     "tau        " + std::to_string(t) + "\n" +
                     "theta-bar  " + (image ? to_compact(*image) : "undefined") + "\n";
  text += "partners   " + std::to_string(partners.size()) + "\n";
  for (const auto& p : partners)
    text += "  " + to_compact(p) + "\n";
  Table adm({"ell", "admissible"});
  for (int ell : levels)
    adm.add({std::to_string(ell), is_admissible(pair, s, ell) ? "yes" : "no"});
  return {kExitOk, text + adm.render(), ""};
}

struct VerifyOptions {
  std::string suite;
  std::optional<std::string> pair;    // SpO, OSp, UU
  std::optional<std::string> target;  // Sp, Oeps, U
  int n_max = 8;
  std::optional<int> k_max;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "degree-diff", "theta-rank", "structural", "degree-oracle", "lusztig-identities", "all"};
  return names;
}

inline CommandResult cmd_verify(const VerifyOptions& opt, Format format,
                                const Limits& limits = kDefaultLimits) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end())
    return usage_error("unknown suite '" + opt.suite + "'");

  std::vector<PairKind> pair_kinds = {PairKind::SpO, PairKind::OSp, PairKind::UU};
  if (opt.pair) {
    if (*opt.pair == "SpO") pair_kinds = {PairKind::SpO};
    else if (*opt.pair == "OSp") pair_kinds = {PairKind::OSp};
    else if (*opt.pair == "UU") pair_kinds = {PairKind::UU};
    else return usage_error("unknown pair kind '" + *opt.pair + "' (SpO, OSp, UU)");
  }
  std::vector<TargetKind> targets = {TargetKind::Sp, TargetKind::Oeps, TargetKind::U};
  if (opt.target) {
    if (*opt.target == "Sp") targets = {TargetKind::Sp};
    else if (*opt.target == "Oeps") targets = {TargetKind::Oeps};
    else if (*opt.target == "U") targets = {TargetKind::U};
    else return usage_error("unknown target '" + *opt.target + "' (Sp, Oeps, U)");
  }
  const int k_max = opt.k_max.value_or(opt.n_max);

  std::vector<VerificationReport> reports;
  const bool all = opt.suite == "all";
  if (all || opt.suite == "degree-diff")
    for (auto kind : pair_kinds)
      reports.push_back(verify_degree_difference(kind, opt.n_max, limits));
  if (all || opt.suite == "theta-rank")
    for (auto kind : targets)
      reports.push_back(verify_theta_rank_characterization(kind, opt.n_max, limits));
  if (all || opt.suite == "structural")
    reports.push_back(verify_structural_lemmas(opt.n_max, limits));
  if (all || opt.suite == "degree-oracle")
    reports.push_back(verify_degree_oracle(k_max, limits));
  if (all || opt.suite == "lusztig-identities")
    reports.push_back(verify_lusztig_identities(k_max, opt.n_max));

  bool passed = true;
  for (const auto& r : reports)
    passed = passed && r.passed();
  const int code = passed ? kExitOk : kExitFailure;

  if (format == Format::Json)
    return {code, dump({{"passed", passed}, {"reports", reports}}), ""};

  Table t({"suite", "instances", "failures", "status"});
  for (const auto& r : reports)
    t.add({r.suite, std::to_string(r.instances), std::to_string(r.failures.size()),
           r.passed() ? "pass" : "FAIL"});
  std::string text = t.render();
  for (const auto& r : reports)
    for (const auto& f : r.failures)
      text += r.suite + ": " + f.context + " " + f.symbol + " expected " + f.expected +
              ", got " + f.actual + "\n";
  return {code, text, ""};
}

}  // namespace lusym::cli
