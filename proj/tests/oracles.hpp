// Test-only reference computations. None of these reuse the library's
// enumeration or degree code.

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "lusym/symbol.hpp"

namespace oracle {

// p(n) by Euler's pentagonal recurrence.
inline std::vector<long> partition_counts(int n_max) {
  std::vector<long> p(n_max + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n)
        break;
      const long sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[n - g1];
      if (g2 <= n)
        total += sign * p[n - g2];
    }
    p[n] = total;
  }
  return p;
}

inline long bipartition_count(int n) {
  const auto p = partition_counts(n);
  long total = 0;
  for (int j = 0; j <= n; ++j)
    total += p[j] * p[n - j];
  return total;
}

// All strictly decreasing subsets of {0..max_entry} with at most max_len
// elements.
inline std::vector<std::vector<int>> beta_sets(int max_entry, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int below) {
    out.push_back(current);
    if (static_cast<int>(current.size()) == max_len)
      return;
    for (int x = below - 1; x >= 0; --x) {
      current.push_back(x);
      rec(x);
      current.pop_back();
    }
  };
  rec(max_entry + 1);
  return out;
}

inline long sum(const std::vector<int>& v) {
  long s = 0;
  for (int x : v)
    s += x;
  return s;
}

// Rank and unitary rank straight from their definitions, in rationals
// scaled by 4.
inline long rank_times4(const std::vector<int>& a, const std::vector<int>& b) {
  const long m = static_cast<long>(a.size() + b.size());
  const long floor_term = ((m - 1) * (m - 1)) / 4;
  return 4 * (sum(a) + sum(b) - floor_term);
}

inline long rank_u_times2(const std::vector<int>& a, const std::vector<int>& b) {
  const long m1 = static_cast<long>(a.size());
  const long m2 = static_cast<long>(b.size());
  const long m = m1 + m2;
  return 4 * sum(a) + 4 * sum(b) + std::labs(m1 - m2) - m * (m - 2);
}

// Brute-force family: every symbol in S with entries <= max_entry and rows
// of length <= max_len meeting the family's rank and defect conditions.
inline std::set<lusym::Symbol> search_family(const lusym::GroupFamily& f, int max_entry,
                                             int max_len) {
  std::set<lusym::Symbol> out;
  const auto rows = beta_sets(max_entry, max_len);
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      const bool zero_both = std::find(a.begin(), a.end(), 0) != a.end() &&
                             std::find(b.begin(), b.end(), 0) != b.end();
      if (zero_both)
        continue;
      const long d = static_cast<long>(a.size()) - static_cast<long>(b.size());
      bool ok = false;
      const long k = f.size();
      switch (f.kind()) {
        case lusym::Kind::Sp: ok = rank_times4(a, b) == 2 * k && ((d % 4) + 4) % 4 == 1; break;
        case lusym::Kind::OPlus: ok = rank_times4(a, b) == 2 * k && ((d % 4) + 4) % 4 == 0; break;
        case lusym::Kind::OMinus: ok = rank_times4(a, b) == 2 * k && ((d % 4) + 4) % 4 == 2; break;
        case lusym::Kind::U:
          ok = rank_u_times2(a, b) == 2 * k && ((d % 2 == 0) ? d >= 0 : d < 0);
          break;
      }
      if (ok)
        out.insert(lusym::Symbol(lusym::BetaSet(a), lusym::BetaSet(b)));
    }
  }
  return out;
}

// deg_q of a unipotent character of Sp or O± from the generic-degree product
// over the rows S, T of the symbol:
//
//   |G|_{p'} prod_{S}(q^l' - q^l) prod_{T}(q^m' - q^m) prod_{S x T}(q^l + q^m)
//   ------------------------------------------------------------------------
//   prod_{l in S u T} prod_{h=1..l}(q^{2h} - 1) * q^{C(m-2,2) + C(m-4,2) + ...}
//
// up to a power of 2, so the degree is a difference of exponent sums.
inline long generic_degree_sp_o(const lusym::Symbol& s, const lusym::GroupFamily& f) {
  const auto a = s.top().entries();
  const auto b = s.bottom().entries();
  const long r = f.size() / 2;
  long deg = (f.kind() == lusym::Kind::Sp) ? r * (r + 1) : r * r;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      deg += std::max(a[i], a[j]);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      deg += std::max(b[i], b[j]);
  for (int x : a)
    for (int y : b)
      deg += std::max(x, y);
  for (int x : a)
    deg -= static_cast<long>(x) * (x + 1);
  for (int y : b)
    deg -= static_cast<long>(y) * (y + 1);
  const long m = static_cast<long>(a.size() + b.size());
  for (long j = m - 2; j >= 2; j -= 2)
    deg -= j * (j - 1) / 2;
  return deg;
}

}  // namespace oracle
