// Acceptance run: one PASS/FAIL line per criterion, exact equality
// throughout, wall-clock budgets where the criterion names one.
//
// Exit status is 0 when every criterion passes or fails only as listed in
// kKnownFailures; an unexpected failure or an unexpected pass is an error.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lusym/compact.hpp"
#include "lusym/degrees.hpp"
#include "lusym/theta.hpp"
#include "lusym/verify.hpp"
#include "oracles.hpp"

using namespace lusym;

namespace {

// Criterion 8 includes "every symbol is k-admissible" for (Sp_k, O-_n). The
// admissibility table asks mu_1 <= k/2 - 2d - 1 there, and the trivial symbol
// [k/2|] has d = 0 and mu_1 = k/2, so the claim fails once per pair. See
// README, "Known deviations".
const std::set<int> kKnownFailures = {8};

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string summary(const VerificationReport& r) {
  return r.suite + ": " + std::to_string(r.instances) + " checks, " +
         std::to_string(r.failures.size()) + " failures";
}

std::vector<GroupFamily> sp_o_families(int k) {
  return {GroupFamily::sp(k), GroupFamily::o_plus(k), GroupFamily::o_minus(k)};
}

Symbol steinberg(int k) {
  if (k % 2 == 0)
    return upsilon_inverse({{}, Partition(std::vector<int>(k / 2, 1))}, 0);
  return upsilon_inverse({Partition(std::vector<int>((k - 1) / 2, 1)), {}}, -1);
}

Outcome criterion1() {
  Outcome o;
  const auto p = oracle::partition_counts(20);
  if (p[10] != 42 || p[20] != 627) {
    o.ok = false;
    o.detail = "partition oracle is wrong";
    return o;
  }
  for (int k = 0; k <= 20; ++k) {
    const long got = static_cast<long>(enumerate_family(GroupFamily::u(k)).size());
    if (got != p[k]) {
      o.ok = false;
      o.detail += "|S_U" + std::to_string(k) + "| = " + std::to_string(got) +
                  " != " + std::to_string(p[k]) + "; ";
    }
  }
  if (o.ok)
    o.detail = "k = 0..20, p(10) = 42, p(20) = 627";
  return o;
}

Outcome from_reports(const std::vector<VerificationReport>& reports) {
  Outcome o;
  for (const auto& r : reports) {
    o.ok = o.ok && r.passed() && r.instances > 0;
    if (!o.detail.empty())
      o.detail += "; ";
    o.detail += summary(r);
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      o.detail += " (first: " + f.context + " " + f.symbol + " expected " + f.expected +
                  ", got " + f.actual + ")";
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto fail = [&](const std::string& what) {
    o.ok = false;
    o.detail += what + "; ";
  };
  for (int k = 1; k <= 20; ++k) {
    const Symbol st = steinberg(k);
    if (!family_contains(GroupFamily::u(k), st) || deg_unitary(st, k) != k * (k - 1) / 2)
      fail("Steinberg U" + std::to_string(k));
  }
  for (int d = 0; d <= 6; ++d) {
    const int k = d * (d + 1) / 2;
    const Symbol cusp = cuspidal_unitary(d);
    if (!family_contains(GroupFamily::u(k), cusp) ||
        deg_unitary(cusp, k) != (d - 1) * d * (d + 1) * (3 * d + 2) / 24)
      fail("cuspidal d=" + std::to_string(d));
  }
  const long chain[] = {0, 0, 2, 11, 35};
  for (int d = 0; d <= 4; ++d) {
    const int k = d * (d + 1) / 2;
    const int n = (d + 1) * (d + 2) / 2;
    const DualPair pair(GroupFamily::u(k), GroupFamily::u(n));
    const Symbol from = cuspidal_unitary(d);
    if (!is_admissible(pair, from, n - k)) {
      fail("Lambda_" + std::to_string(d) + " not admissible");
      continue;
    }
    const Symbol to = theta_bar(pair, from);
    if (to != cuspidal_unitary(d + 1))
      fail("theta-bar(Lambda_" + std::to_string(d) + ") = " + to_compact(to));
    if (deg_unitary(from, k) != chain[d])
      fail("deg Lambda_" + std::to_string(d));
    const long target = static_cast<long>(d) * (d + 1) * (d + 2) * (3 * d + 5) / 24;
    if (deg_unitary(to, n) != target || chain[d] + static_cast<long>(k) * (n - k) != target)
      fail("chain degree at d=" + std::to_string(d));
  }
  if (o.ok)
    o.detail = "Steinberg k = 1..20, cuspidal d = 0..6, chain d = 0..4 (0, 0, 2, 11, 35)";
  return o;
}

// 0-admissible sets for the four pair types, k even up to 12.
Outcome criterion7() {
  Outcome o;
  auto zero_admissible = [](const DualPair& pair) {
    std::set<Symbol> out;
    for (const auto& s : enumerate_family(pair.first()))
      if (is_admissible(pair, s, 0))
        out.insert(s);
    return out;
  };
  auto range = [](int hi, int lo) {
    std::vector<int> v;
    for (int x = hi; x >= lo; --x)
      v.push_back(x);
    return BetaSet(v);
  };
  for (int k = 0; k <= 12; k += 2) {
    const int h = k / 2;
    std::map<std::string, std::pair<std::set<Symbol>, std::set<Symbol>>> cases;
    // (1) Sp_k, O+: only Upsilon empty, so only k = 0
    cases["Sp:O+"] = {zero_admissible({GroupFamily::sp(k), GroupFamily::o_plus(k)}),
                      k == 0 ? std::set<Symbol>{Symbol(BetaSet{0}, BetaSet{})}
                             : std::set<Symbol>{}};
    // (2) Sp_k, O-: never
    cases["Sp:O-"] = {zero_admissible({GroupFamily::sp(k), GroupFamily::o_minus(k)}), {}};
    // (3) O+_k, Sp: (k/2, ..., 1 | k/2 - 1, ..., 0)
    cases["O+:Sp"] = {zero_admissible({GroupFamily::o_plus(k), GroupFamily::sp(k)}),
                      {Symbol(range(h, 1), range(h - 1, 0))}};
    // (4) O-_k, Sp: (k/2 - 1, ..., 1 | k/2, ..., 0); O-_0 has no symbols
    cases["O-:Sp"] = {zero_admissible({GroupFamily::o_minus(k), GroupFamily::sp(k)}),
                      k == 0 ? std::set<Symbol>{}
                             : std::set<Symbol>{Symbol(range(h - 1, 1), range(h, 0))}};
    for (const auto& [name, sets] : cases) {
      if (sets.first != sets.second) {
        o.ok = false;
        o.detail += name + " k=" + std::to_string(k) + " differs; ";
      }
    }
    const Symbol o_plus_symbol(range(h, 1), range(h - 1, 0));
    if (upsilon(o_plus_symbol) != BiPartition{Partition(std::vector<int>(h, 1)), {}}) {
      o.ok = false;
      o.detail += "Upsilon of case (3) at k=" + std::to_string(k) + "; ";
    }
  }
  if (o.ok)
    o.detail = "four pair types, k = 0..12 even; case (2) empty";
  return o;
}

Outcome criterion8(const VerificationReport& r) {
  Outcome o;
  std::map<std::string, long> by_claim;
  long sp_o_minus_trivial = 0;
  for (const auto& f : r.failures) {
    ++by_claim[f.expected];
    if (f.expected == "k-admissible" && f.context.starts_with("Sp") &&
        f.context.find(":O-") != std::string::npos) {
      const int k = std::stoi(f.context.substr(2));
      if (f.symbol == "[" + std::to_string(k / 2) + "|]")
        ++sp_o_minus_trivial;
    }
  }
  o.ok = r.passed();
  o.detail = summary(r);
  for (const auto& [claim, count] : by_claim)
    o.detail += "; " + claim + ": " + std::to_string(count) + " counterexamples";
  if (!r.failures.empty() && sp_o_minus_trivial == static_cast<long>(r.failures.size()))
    o.detail += " (all are the trivial symbol [k/2|] of Sp_k against O-_n)";
  return o;
}

Outcome criterion10() {
  Outcome o;
  long count = 0;
  auto run = [&](const GroupFamily& f) {
    for (const auto& s : enumerate_family(f)) {
      ++count;
      if (upsilon_inverse(upsilon(s), defect(s)) != s) {
        o.ok = false;
        o.detail += f.tag() + " " + to_compact(s) + "; ";
      }
    }
  };
  for (int k = 0; k <= 20; ++k)
    run(GroupFamily::u(k));
  for (int k = 0; k <= 24; k += 2)
    for (const auto& f : sp_o_families(k))
      run(f);
  if (o.ok)
    o.detail = std::to_string(count) + " symbols (U_0..U_20, Sp/O+/O- of rank <= 12)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;  // 0: no budget
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "unitary family sizes are partition numbers", 5, criterion1},
      {2, "unitary degree difference k(n-k), n <= 14", 30,
       [] { return from_reports({verify_degree_difference(PairKind::UU, 14)}); }},
      {3, "Sp/O degree differences, n <= 16", 30,
       [] {
         return from_reports({verify_degree_difference(PairKind::OSp, 16),
                              verify_degree_difference(PairKind::SpO, 16)});
       }},
      {4, "Theta-rank characterization (U n <= 10, Sp/O n <= 12)", 0,
       [] {
         return from_reports({verify_theta_rank_characterization(TargetKind::U, 10),
                              verify_theta_rank_characterization(TargetKind::Sp, 12),
                              verify_theta_rank_characterization(TargetKind::Oeps, 12)});
       }},
      {5, "closed-form unitary degree equals polynomial degree, k <= 10", 60,
       [] { return from_reports({verify_degree_oracle(10)}); }},
      {6, "Steinberg, cuspidal and cuspidal-chain degrees", 0, criterion6},
      {7, "0-admissible symbols of the four pair types", 0, criterion7},
      {8, "structural lemmas over families of rank/size <= 12", 0,
       [] { return criterion8(verify_structural_lemmas(12)); }},
      {9, "telescoping degree identities, n <= 40", 1,
       [] { return from_reports({verify_lusztig_identities(40, 40)}); }},
      {10, "Upsilon round trip on every enumerated symbol", 0, criterion10},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(start);
    const bool in_budget = c.budget_seconds == 0 || secs < c.budget_seconds;
    const bool pass = o.ok && in_budget;
    if (!pass)
      failed.insert(c.id);
    std::string timing = std::to_string(secs).substr(0, 5) + " s";
    if (c.budget_seconds > 0)
      timing += " of " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    std::printf("criterion %2d %s  %s [%s]: %s\n", c.id, pass ? "PASS" : "FAIL", c.title,
                timing.c_str(), o.detail.c_str());
  }

  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed == kKnownFailures) {
    if (!failed.empty())
      std::printf("failures match the documented deviations\n");
    return 0;
  }
  for (int id : failed)
    if (!kKnownFailures.contains(id))
      std::printf("unexpected failure: criterion %d\n", id);
  for (int id : kKnownFailures)
    if (!failed.contains(id))
      std::printf("documented failure no longer fails: criterion %d\n", id);
  return 1;
}
