// Exhaustive verification suites.
//
// Every suite walks a bounded instance space completely and records every
// failure instead of stopping at the first one. Reports also list which
// library operations the suite exercised.

#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "lusym/compact.hpp"
#include "lusym/degrees.hpp"
#include "lusym/errors.hpp"
#include "lusym/partition.hpp"
#include "lusym/symbol.hpp"
#include "lusym/theta.hpp"

namespace lusym {

struct Failure {
  std::string context;   // pair or family, e.g. "U3:U6"
  std::string symbol;    // compact form, or a parameter tuple
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string suite;
  long instances = 0;
  std::vector<Failure> failures;
  std::chrono::nanoseconds elapsed{0};
  std::set<std::string> operations;

  bool passed() const { return failures.empty(); }

  void fail(std::string context, std::string symbol, std::string expected,
            std::string actual) {
    failures.push_back({std::move(context), std::move(symbol),
                        std::move(expected), std::move(actual)});
  }

  void check(bool ok, const std::string& context, const std::string& symbol,
             const std::string& what) {
    ++instances;
    if (!ok)
      fail(context, symbol, what, "violated");
  }

  void check_equal(long expected, long actual, const std::string& context,
                   const std::string& symbol) {
    ++instances;
    if (expected != actual)
      fail(context, symbol, std::to_string(expected), std::to_string(actual));
  }
};

enum class PairKind { SpO, OSp, UU };
enum class TargetKind { Sp, Oeps, U };

// Hard cap on suite bounds; the instance spaces grow like p(n)^2.
inline constexpr int kMaxSuiteBound = 64;

namespace impl {

class Stopwatch {
 public:
  explicit Stopwatch(VerificationReport& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start_);
  }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

inline void check_bound(int bound, const char* name) {
  if (bound < 0)
    throw DomainError(std::string(name) + " must be non-negative");
  if (bound > kMaxSuiteBound)
    throw ResourceError(std::string(name) + " exceeds the hard cap of " +
                        std::to_string(kMaxSuiteBound));
}

// Every dual pair of the given kind with k <= n <= n_max.
inline std::vector<DualPair> pairs_of_kind(PairKind kind, int n_max) {
  std::vector<DualPair> out;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      switch (kind) {
        case PairKind::UU:
          out.emplace_back(GroupFamily::u(k), GroupFamily::u(n));
          break;
        case PairKind::SpO:
          if (k % 2 == 0 && n % 2 == 0) {
            out.emplace_back(GroupFamily::sp(k), GroupFamily::o_plus(n));
            out.emplace_back(GroupFamily::sp(k), GroupFamily::o_minus(n));
          }
          break;
        case PairKind::OSp:
          if (k % 2 == 0 && n % 2 == 0) {
            out.emplace_back(GroupFamily::o_plus(k), GroupFamily::sp(n));
            out.emplace_back(GroupFamily::o_minus(k), GroupFamily::sp(n));
          }
          break;
      }
    }
  }
  return out;
}

inline long degree_of(const Symbol& s, const GroupFamily& f) {
  return f.is_unitary() ? deg_unitary(s, f.size()) : deg_sp_o(s, f);
}

// deg(theta-bar) - deg for a pair with k <= n.
inline long expected_degree_shift(const DualPair& pair) {
  const long k = pair.k();
  const long n = pair.n();
  if (pair.is_unitary())
    return k * (n - k);
  if (pair.symplectic_first())
    return k * (n - k - 1) / 2;
  return k * (n - k + 1) / 2;
}

// theta-bar images of the (n-k)-admissible symbols of the first member.
inline std::set<Symbol> admissible_images(const DualPair& pair, const Limits& limits) {
  std::set<Symbol> out;
  for (const auto& s : enumerate_family(pair.first(), limits))
    if (is_admissible(pair, s, pair.n() - pair.k()))
      out.insert(theta_bar(pair, s));
  return out;
}

// Cuspidal unitary symbol: Upsilon empty, def = d or -d.
inline Symbol cuspidal_symbol(int d) {
  return upsilon_inverse({}, unitary_defect(d));
}

}  // namespace impl

// The unitary cuspidal symbol Lambda_d of U_{d(d+1)/2}.
inline Symbol cuspidal_unitary(int d) {
  if (d < 0)
    throw DomainError("cuspidal index must be non-negative");
  return impl::cuspidal_symbol(d);
}

// deg(theta-bar(s)) - deg(s) over every (n-k)-admissible s, k <= n <= n_max.
inline VerificationReport verify_degree_difference(PairKind kind, int n_max,
                                                   const Limits& limits = kDefaultLimits) {
  impl::check_bound(n_max, "n_max");
  VerificationReport r;
  r.suite = kind == PairKind::UU ? "degree-diff UU"
          : kind == PairKind::SpO ? "degree-diff SpO" : "degree-diff OSp";
  impl::Stopwatch watch(r);

  for (const auto& pair : impl::pairs_of_kind(kind, n_max)) {
    const long shift = impl::expected_degree_shift(pair);
    for (const auto& s : enumerate_family(pair.first(), limits)) {
      if (!is_admissible(pair, s, pair.n() - pair.k()))
        continue;
      const Symbol t = theta_bar(pair, s);
      const std::string where = pair.tag();
      const std::string what = to_compact(s);
      if (!in_b_relation(pair, s, t)) {
        ++r.instances;
        r.fail(where, what, "theta-bar image in B", to_compact(t));
        continue;
      }
      const long before = impl::degree_of(s, pair.first());
      const long after = impl::degree_of(t, pair.second());
      r.check_equal(before + shift, after, where, what);
    }
  }
  r.operations = {"enumerate_family", "enumerate_bipartitions", "enumerate_partitions",
                  "is_admissible", "tau", "theta_bar", "in_b_relation",
                  "upsilon", "upsilon_inverse", "bipartition_transpose",
                  "bipartition_union", "interlaces", "family_contains", "defect"};
  if (kind == PairKind::UU)
    r.operations.insert({"deg_unitary", "hook_data", "rank_u"});
  else
    r.operations.insert({"deg_sp_o", "rank"});
  return r;
}

// For each n <= n_max and each target symbol: the unipotent Theta-rank is k
// exactly when the symbol is a theta-bar image of an (n-k)-admissible symbol
// (up to sgn twist for orthogonal targets).
inline VerificationReport verify_theta_rank_characterization(
    TargetKind kind, int n_max, const Limits& limits = kDefaultLimits) {
  impl::check_bound(n_max, "n_max");
  VerificationReport r;
  r.suite = kind == TargetKind::U ? "theta-rank U"
          : kind == TargetKind::Sp ? "theta-rank Sp" : "theta-rank Oeps";
  impl::Stopwatch watch(r);

  auto classify = [&](const GroupFamily& target,
                      const std::vector<std::set<Symbol>>& predicted) {
    const int n = target.size();
    for (const auto& s : enumerate_family(target, limits)) {
      ++r.instances;
      const int rank_found = theta_rank(target, s, limits);
      int rank_predicted = -1;
      for (int k = 0; k < static_cast<int>(predicted.size()); ++k)
        if (predicted[k].contains(s)) {
          if (rank_predicted != -1) {
            r.fail(target.tag(), to_compact(s), "one predicted rank",
                   std::to_string(rank_predicted) + " and " + std::to_string(k));
          }
          rank_predicted = k;
        }
      if (rank_found > n || rank_found != rank_predicted)
        r.fail(target.tag(), to_compact(s), std::to_string(rank_predicted),
               std::to_string(rank_found));
    }
    // Every predicted symbol must be a member of the target family.
    for (const auto& images : predicted)
      for (const auto& s : images)
        if (!family_contains(target, s))
          r.fail(target.tag(), to_compact(s), "member of target", "outsider");
  };

  for (int n = 0; n <= n_max; ++n) {
    if (kind == TargetKind::U) {
      const GroupFamily target = GroupFamily::u(n);
      std::vector<std::set<Symbol>> predicted(n + 1);
      for (int k = 0; k <= n; ++k)
        predicted[k] = impl::admissible_images({GroupFamily::u(k), target}, limits);
      classify(target, predicted);
      continue;
    }
    if (n % 2 != 0)
      continue;
    if (kind == TargetKind::Sp) {
      const GroupFamily target = GroupFamily::sp(n);
      std::vector<std::set<Symbol>> predicted(n + 1);
      for (int k = 0; k <= n; k += 2)
        for (const auto& source : {GroupFamily::o_plus(k), GroupFamily::o_minus(k)})
          predicted[k].merge(impl::admissible_images({source, target}, limits));
      classify(target, predicted);
      continue;
    }
    for (const auto& target : {GroupFamily::o_plus(n), GroupFamily::o_minus(n)}) {
      std::vector<std::set<Symbol>> predicted(n + 1);
      for (int k = 0; k <= n; k += 2) {
        for (const auto& s : impl::admissible_images({GroupFamily::sp(k), target}, limits)) {
          predicted[k].insert(s);
          predicted[k].insert(sgn_twist(s, target));
        }
      }
      classify(target, predicted);
    }
  }
  r.operations = {"theta_rank", "enumerate_family", "is_admissible", "theta_bar", "tau",
                  "in_b_relation", "family_contains", "upsilon", "upsilon_inverse",
                  "interlaces", "bipartition_union", "bipartition_transpose"};
  if (kind == TargetKind::Oeps)
    r.operations.insert({"sgn_twist", "transpose"});
  return r;
}

// Invariant battery over all families: U_k for k <= n_max and Sp/O of rank
// <= n_max.
inline VerificationReport verify_structural_lemmas(int n_max,
                                                   const Limits& limits = kDefaultLimits) {
  impl::check_bound(n_max, "n_max");
  VerificationReport r;
  r.suite = "structural";
  impl::Stopwatch watch(r);

  // Partitions: transpose involution, interlacing facts, bi-partition counts.
  for (int n = 0; n <= n_max; ++n) {
    const auto parts = enumerate_partitions(n, limits);
    for (const auto& p : parts) {
      r.check(size(p) == n, "partitions", "n=" + std::to_string(n), "size");
      r.check(interlaces(p, p), "partitions", "n=" + std::to_string(n), "reflexive");
    }
    for (const auto& a : parts)
      for (const auto& b : parts)
        if (interlaces(a, b))
          r.check(a == b, "partitions", "n=" + std::to_string(n),
                  "antisymmetric at equal size");

    long expected = 0;
    for (int j = 0; j <= n; ++j)
      expected += static_cast<long>(enumerate_partitions(j, limits).size() *
                                    enumerate_partitions(n - j, limits).size());
    const auto bips = enumerate_bipartitions(n, limits);
    r.check_equal(expected, static_cast<long>(bips.size()), "bipartitions",
                  "n=" + std::to_string(n));
    for (const auto& b : bips) {
      r.check(transpose(transpose(b)) == b, "bipartitions", "n=" + std::to_string(n),
              "transpose involution");
      if (interlaces(b.top, b.bottom))
        r.check(size(b.top) <= size(b.bottom), "bipartitions",
                "n=" + std::to_string(n), "interlacing bounds size");
    }
  }

  auto battery = [&](const GroupFamily& f) {
    const auto members = enumerate_family(f, limits);
    std::set<Symbol> seen;
    long max_degree = -1;
    for (const auto& s : members) {
      const std::string tag = f.tag();
      const std::string what = to_compact(s);
      r.check(seen.insert(s).second, tag, what, "duplicate-free enumeration");
      r.check(family_contains(f, s), tag, what, "membership");
      r.check(upsilon_inverse(upsilon(s), defect(s)) == s, tag, what, "round trip");
      const Symbol t = transpose(s);
      r.check(defect(t) == -defect(s), tag, what, "transpose negates defect");
      r.check(rank(t) == rank(s), tag, what, "transpose keeps rank");
      r.check(rank_u(t) == rank_u(s), tag, what, "transpose keeps unitary rank");
      if (f.is_unitary()) {
        const int d = std::abs(defect(s));
        r.check_equal(2L * f.size() - d * (d + 1), 4L * size(upsilon(s)), tag, what);
        max_degree = std::max(max_degree, deg_unitary(s, f.size()));
      } else {
        r.check_equal(bipartition_size_identity(s), size(upsilon(s)), tag, what);
        max_degree = std::max(max_degree, deg_sp_o(s, f));
      }
      if (f.is_orthogonal()) {
        const Symbol tw = sgn_twist(s, f);
        r.check(family_contains(f, tw) && sgn_twist(tw, f) == s, tag, what,
                "sgn twist is an involution on the family");
      }
    }
    // The Steinberg character has the top degree: deg|G| minus the rank.
    if (!members.empty()) {
      const long rank_of_group = f.is_unitary() ? f.size() : f.size() / 2;
      r.check_equal(group_order_degree(f) - rank_of_group, max_degree, f.tag(),
                    "max degree");
    }
    return members;
  };

  for (int k = 0; k <= n_max; ++k)
    battery(GroupFamily::u(k));

  for (int k = 0; k <= 2 * n_max; k += 2) {
    const auto sp = battery(GroupFamily::sp(k));
    const auto op = battery(GroupFamily::o_plus(k));
    const auto om = battery(GroupFamily::o_minus(k));
    const std::string tag = "Sp/O+/O-" + std::to_string(k);
    for (const auto& s : sp)
      r.check(!family_contains(GroupFamily::o_plus(k), s) &&
                  !family_contains(GroupFamily::o_minus(k), s),
              tag, to_compact(s), "families disjoint");
    for (const auto& s : op)
      r.check(!family_contains(GroupFamily::o_minus(k), s), tag, to_compact(s),
              "families disjoint");
    r.check(sp.size() + op.size() + om.size() ==
                std::set<Symbol>(sp.begin(), sp.end()).size() +
                    std::set<Symbol>(op.begin(), op.end()).size() +
                    std::set<Symbol>(om.begin(), om.end()).size(),
            tag, "-", "fibers duplicate-free");
  }

  // Every symbol is first.size-admissible; admissible at n-k forces tau >= 0
  // and a theta-bar image in B. Partner searches are quadratic in the family
  // sizes, so they stop at group size n_max.
  auto pair_lemmas = [&](const DualPair& pair) {
    const int ell = pair.n() - pair.k();
    const bool partners_in_scope = pair.n() <= n_max && 2 * pair.k() <= pair.n() &&
                                   !enumerate_family(pair.second(), limits).empty();
    for (const auto& s : enumerate_family(pair.first(), limits)) {
      const std::string what = to_compact(s);
      r.check(is_admissible(pair, s, pair.k()), pair.tag(), what, "k-admissible");
      if (is_admissible(pair, s, ell)) {
        const int t = tau(pair, s);
        r.check(t >= 0, pair.tag(), what, "tau >= 0");
        if (t >= 0)
          r.check(in_b_relation(pair, s, theta_bar(pair, s)), pair.tag(), what,
                  "theta-bar image in B");
        // Monotone in ell (same parity for Sp/O).
        const int step = pair.is_unitary() ? 1 : 2;
        r.check(is_admissible(pair, s, ell + step), pair.tag(), what,
                "admissibility monotone");
      }
      // Below the stable range unipotent characters can lack unipotent
      // partners (the trivial character of U1 against U1).
      if (partners_in_scope) {
        const auto partners = theta_partners(pair, s, limits);
        r.check(!partners.empty(), pair.tag(), what, "partners exist in stable range");
        for (const auto& p : partners)
          r.check(in_b_relation(pair.reversed(), p, s), pair.tag(), what,
                  "B symmetric under reversal");
      }
    }
  };
  for (int n = 0; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      pair_lemmas({GroupFamily::u(k), GroupFamily::u(n)});
  for (int n = 0; n <= 2 * n_max; n += 2)
    for (int k = 0; k <= n; k += 2)
      for (const auto& pair : {DualPair(GroupFamily::sp(k), GroupFamily::o_plus(n)),
                               DualPair(GroupFamily::sp(k), GroupFamily::o_minus(n)),
                               DualPair(GroupFamily::o_plus(k), GroupFamily::sp(n)),
                               DualPair(GroupFamily::o_minus(k), GroupFamily::sp(n))})
        pair_lemmas(pair);

  // Cuspidal symbols: Lambda_d is ell-admissible exactly for ell >= d.
  for (int d = 0; d <= 5; ++d) {
    const Symbol cusp = cuspidal_unitary(d);
    const int k = d * (d + 1) / 2;
    r.check(family_contains(GroupFamily::u(k), cusp), "U" + std::to_string(k),
            to_compact(cusp), "cuspidal membership");
    const DualPair pair(GroupFamily::u(k), GroupFamily::u(k));
    for (int ell = std::max(0, d - 2); ell <= d + 4; ++ell)
      r.check(is_admissible(pair, cusp, ell) == (ell >= d), pair.tag(),
              to_compact(cusp) + " ell=" + std::to_string(ell), "cuspidal admissibility");
  }

  r.operations = {"size", "interlaces", "bipartition_transpose", "enumerate_partitions",
                  "enumerate_bipartitions", "defect", "rank", "rank_u", "transpose",
                  "upsilon", "upsilon_inverse", "bipartition_size_identity",
                  "family_contains", "enumerate_family", "group_order_degree",
                  "deg_sp_o", "deg_unitary", "hook_data", "in_b_relation",
                  "theta_partners", "tau", "theta_bar", "is_admissible", "sgn_twist",
                  "bipartition_union"};
  return r;
}

// Closed-form unitary degree against the exact degree polynomial.
inline VerificationReport verify_degree_oracle(int k_max,
                                               const Limits& limits = kDefaultLimits) {
  impl::check_bound(k_max, "k_max");
  VerificationReport r;
  r.suite = "degree-oracle";
  impl::Stopwatch watch(r);

  for (int k = 0; k <= k_max; ++k) {
    const IntPolynomial order = unitary_order_polynomial(k);
    const std::string tag = "U" + std::to_string(k);
    for (const auto& s : enumerate_family(GroupFamily::u(k), limits)) {
      const std::string what = to_compact(s);
      IntPolynomial poly;
      try {
        poly = unitary_degree_polynomial(s, k);
      } catch (const InternalError& e) {
        ++r.instances;
        r.fail(tag, what, "exact division", e.what());
        continue;
      }
      r.check_equal(deg_unitary(s, k), poly.degree(), tag, what);
      for (long q : {2L, 3L, 4L, 5L}) {
        const mpz_class value = poly.evaluate(mpz_class(q));
        // |U_k(q)| = q^{k(k-1)/2} prod (q^h - (-1)^h)
        mpz_class group_order = order.evaluate(mpz_class(q));
        for (long i = 0; i < static_cast<long>(k) * (k - 1) / 2; ++i)
          group_order *= q;
        ++r.instances;
        if (value <= 0 || group_order % value != 0)
          r.fail(tag, what + " q=" + std::to_string(q),
                 "positive divisor of " + group_order.get_str(), value.get_str());
      }
    }
  }
  r.operations = {"enumerate_family", "unitary_degree_polynomial", "deg_unitary",
                  "hook_data", "family_contains"};
  return r;
}

// The five telescoping degree identities of the non-unipotent bookkeeping,
// over 0 <= l <= k <= min(k_max, n) <= n <= n_max. Everything is scaled by 4
// to stay in integers.
inline VerificationReport verify_lusztig_identities(int k_max, int n_max) {
  impl::check_bound(n_max, "n_max");
  if (k_max < 0)
    throw DomainError("k_max must be non-negative");
  VerificationReport r;
  r.suite = "lusztig-identities";
  impl::Stopwatch watch(r);

  auto record = [&](const char* name, long k, long n, long l, long lhs4, long rhs4) {
    r.check_equal(rhs4, lhs4, name,
                  "(k,n,l)=(" + std::to_string(k) + "," + std::to_string(n) + "," +
                      std::to_string(l) + ")");
  };

  for (long n = 0; n <= n_max; ++n) {
    for (long k = 0; k <= std::min<long>(n, k_max); ++k) {
      for (long l = 0; l <= k; ++l) {
        if (k % 2 == 0 && n % 2 == 0) {
          record("O-Sp even", k, n, l,
                 2 * (k - 2 * l) * (n - k + 1) + n * (n + 2) - k * k -
                     (n - 2 * l) * (n - 2 * l + 2) + (k - 2 * l) * (k - 2 * l),
                 2 * k * (n - k + 1));
          record("Sp-O even", k, n, l,
                 2 * (k - 2 * l) * (n - k - 1) + n * n - k * (k + 2) -
                     (n - 2 * l) * (n - 2 * l) + (k - 2 * l) * (k - 2 * l + 2),
                 2 * k * (n - k - 1));
        }
        if (k % 2 != 0 && n % 2 == 0)
          record("O odd-Sp", k, n, l,
                 2 * (k - 2 * l - 1) * (n - k) + n * (n + 2) - (k - 1) * (k + 1) -
                     (n - 2 * l) * (n - 2 * l) + (k - 1 - 2 * l) * (k + 1 - 2 * l),
                 2 * k * (n - k + 1));
        if (k % 2 == 0 && n % 2 != 0)
          record("Sp-O odd", k, n, l,
                 2 * (k - 2 * l) * (n - k) + (n - 1) * (n + 1) - k * (k + 2) -
                     (n - 1 - 2 * l) * (n + 1 - 2 * l) + (k - 2 * l) * (k - 2 * l),
                 2 * k * (n - k - 1));
        record("U-U", k, n, l,
               4 * (k - l) * (n - k) + 2 * n * (n + 1) - 2 * k * (k + 1) -
                   2 * (n - l) * (n - l + 1) + 2 * (k - l) * (k - l + 1),
               4 * k * (n - k));
      }
    }
  }
  return r;
}

}  // namespace lusym
