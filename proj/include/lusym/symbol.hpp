// Beta-sets, symbols, and the unipotent symbol families of Sp, O+, O- and U.
//
// A symbol is an ordered pair of beta-sets (top row, bottom row). The set S
// of admissible symbols excludes those with 0 in both rows, which makes the
// representative of each shift class unique.

#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lusym/errors.hpp"
#include "lusym/partition.hpp"

namespace lusym {

// Finite set of non-negative integers, stored strictly decreasing.
class BetaSet {
 public:
  BetaSet() = default;

  explicit BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] < 0)
        throw DomainError("beta-set entry is negative");
      if (i > 0 && entries_[i - 1] <= entries_[i])
        throw DomainError("beta-set entries must be strictly decreasing");
    }
  }

  BetaSet(std::initializer_list<int> entries)
      : BetaSet(std::vector<int>(entries)) {}

  std::span<const int> entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  bool contains(int x) const {
    return std::find(entries_.begin(), entries_.end(), x) != entries_.end();
  }
  int sum() const {
    int s = 0;
    for (int x : entries_)
      s += x;
    return s;
  }

  friend bool operator==(const BetaSet&, const BetaSet&) = default;
  friend auto operator<=>(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<int> entries_;
};

class Symbol {
 public:
  Symbol() = default;

  Symbol(BetaSet top, BetaSet bottom)
      : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.contains(0) && bottom_.contains(0))
      throw DomainError("symbol has 0 in both rows");
  }

  const BetaSet& top() const { return top_; }
  const BetaSet& bottom() const { return bottom_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  BetaSet top_;
  BetaSet bottom_;
};

enum class Kind { Sp, OPlus, OMinus, U };

// Sp_k, O+_k, O-_k (k even) or U_k.
class GroupFamily {
 public:
  GroupFamily(Kind kind, int size) : kind_(kind), size_(size) {
    if (size < 0)
      throw DomainError("group size must be non-negative");
    if (kind != Kind::U && size % 2 != 0)
      throw DomainError("symplectic and orthogonal sizes must be even");
  }

  static GroupFamily sp(int k) { return {Kind::Sp, k}; }
  static GroupFamily o_plus(int k) { return {Kind::OPlus, k}; }
  static GroupFamily o_minus(int k) { return {Kind::OMinus, k}; }
  static GroupFamily u(int k) { return {Kind::U, k}; }

  Kind kind() const { return kind_; }
  int size() const { return size_; }
  bool is_unitary() const { return kind_ == Kind::U; }
  bool is_orthogonal() const {
    return kind_ == Kind::OPlus || kind_ == Kind::OMinus;
  }

  // "Sp", "O+", "O-", "U"
  std::string kind_name() const {
    switch (kind_) {
      case Kind::Sp: return "Sp";
      case Kind::OPlus: return "O+";
      case Kind::OMinus: return "O-";
      case Kind::U: return "U";
    }
    return "?";
  }

  // "Sp4", "O+4", "O-4", "U6"
  std::string tag() const { return kind_name() + std::to_string(size_); }

  static GroupFamily parse(std::string_view text) {
    auto fail = [&]() -> GroupFamily {
      throw DomainError("bad group family tag '" + std::string(text) +
                        "' (expected Sp<k>, O+<k>, O-<k> or U<k>)");
    };
    Kind kind;
    std::string_view rest;
    if (text.starts_with("Sp")) {
      kind = Kind::Sp;
      rest = text.substr(2);
    } else if (text.starts_with("O+")) {
      kind = Kind::OPlus;
      rest = text.substr(2);
    } else if (text.starts_with("O-")) {
      kind = Kind::OMinus;
      rest = text.substr(2);
    } else if (text.starts_with("U")) {
      kind = Kind::U;
      rest = text.substr(1);
    } else {
      return fail();
    }
    int k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (rest.empty() || ec != std::errc{} || ptr != rest.data() + rest.size())
      return fail();
    return {kind, k};
  }

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;

 private:
  Kind kind_;
  int size_;
};

inline int defect(const Symbol& s) {
  return s.top().length() - s.bottom().length();
}

// rk = sum of entries - floor(((m1 + m2 - 1) / 2)^2)
inline int rank(const Symbol& s) {
  const int m = s.top().length() + s.bottom().length();
  return s.top().sum() + s.bottom().sum() - (m - 1) * (m - 1) / 4;
}

// rk_U = 2 sum + |m1 - m2| / 2 - (m1 + m2)(m1 + m2 - 2) / 2. Evaluated at
// twice its value so the half-integer terms stay exact.
inline int rank_u(const Symbol& s) {
  const int m = s.top().length() + s.bottom().length();
  const int twice = 4 * (s.top().sum() + s.bottom().sum()) +
                    std::abs(defect(s)) - m * (m - 2);
  if (twice % 2 != 0)
    throw InternalError("unitary rank is not an integer");
  return twice / 2;
}

inline Symbol transpose(const Symbol& s) { return {s.bottom(), s.top()}; }

namespace impl {

inline Partition strip_staircase(const BetaSet& row) {
  const int m = row.length();
  std::vector<int> parts;
  parts.reserve(m);
  for (int i = 0; i < m; ++i)
    parts.push_back(row.entries()[i] - (m - 1 - i));
  return Partition(std::move(parts));
}

inline BetaSet add_staircase(const Partition& p, int length) {
  std::vector<int> entries;
  entries.reserve(length);
  for (int i = 0; i < length; ++i)
    entries.push_back(p[i] + (length - 1 - i));
  return BetaSet(std::move(entries));
}

inline int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace impl

// Upsilon: subtract the staircase (m-1, ..., 1, 0) from each row.
inline BiPartition upsilon(const Symbol& s) {
  return {impl::strip_staircase(s.top()), impl::strip_staircase(s.bottom())};
}

// The unique symbol in S with the given Upsilon image and defect. Only one
// row ever receives zero padding beyond its partition length, so 0 cannot
// land in both rows.
inline Symbol upsilon_inverse(const BiPartition& b, int target_defect) {
  const int l1 = static_cast<int>(b.top.length());
  const int l2 = static_cast<int>(b.bottom.length());
  const int m1 = std::max({l1, l2 + target_defect, target_defect, 0});
  const int m2 = m1 - target_defect;
  return {impl::add_staircase(b.top, m1), impl::add_staircase(b.bottom, m2)};
}

// |Upsilon(s)| recovered from rank and defect alone:
//   rk - (def - 1)(def + 1) / 4   if def is odd
//   rk - def^2 / 4                if def is even
inline int bipartition_size_identity(const Symbol& s) {
  const int d = defect(s);
  const int correction = (d % 2 != 0) ? (d - 1) * (d + 1) / 4 : d * d / 4;
  return rank(s) - correction;
}

inline bool family_contains(const GroupFamily& f, const Symbol& s) {
  const int d = defect(s);
  switch (f.kind()) {
    case Kind::Sp:
      return 2 * rank(s) == f.size() && impl::mod4(d) == 1;
    case Kind::OPlus:
      return 2 * rank(s) == f.size() && impl::mod4(d) == 0;
    case Kind::OMinus:
      return 2 * rank(s) == f.size() && impl::mod4(d) == 2;
    case Kind::U: {
      const bool parity_ok = (d % 2 == 0) ? d >= 0 : d < 0;
      return parity_ok && rank_u(s) == f.size();
    }
  }
  return false;
}

// The defect a unitary symbol carries when |def| = d: even defects are
// non-negative, odd ones negative.
inline int unitary_defect(int d) { return d % 2 == 0 ? d : -d; }

// Size of Upsilon(s) for s in S_{U_k} with |def(s)| = d, if such symbols
// exist: 4 |Upsilon| = 2k - d(d+1).
inline std::optional<int> unitary_upsilon_size(int k, int d) {
  const int four_size = 2 * k - d * (d + 1);
  if (four_size < 0 || four_size % 4 != 0)
    return std::nullopt;
  return four_size / 4;
}

// Every member of S_f, grouped by defect fiber. Sp/O fibers run over
// defects in increasing order; U fibers over d = |def| = 0, 1, 2, ...
inline std::vector<Symbol> enumerate_family(
    const GroupFamily& f, const Limits& limits = kDefaultLimits) {
  if (f.size() > limits.max_family_size)
    throw ResourceError("family enumeration bound exceeded: " + f.tag());
  std::vector<Symbol> out;
  auto add_fiber = [&](int fiber_size, int target_defect) {
    for (const auto& b : enumerate_bipartitions(fiber_size, limits))
      out.push_back(upsilon_inverse(b, target_defect));
  };

  if (f.is_unitary()) {
    for (int d = 0; d * (d + 1) <= 2 * f.size(); ++d)
      if (auto sz = unitary_upsilon_size(f.size(), d))
        add_fiber(*sz, unitary_defect(d));
    return out;
  }

  const int residue = f.kind() == Kind::OPlus ? 0 : f.kind() == Kind::Sp ? 1 : 2;
  const int rk = f.size() / 2;
  // |Upsilon| = rk - floor(def^2 / 4) >= 0 bounds |def| by 2 sqrt(rk) + 1.
  int bound = 1;
  while ((bound * bound) / 4 <= rk)
    ++bound;
  for (int d = -bound; d <= bound; ++d) {
    if (impl::mod4(d) != residue)
      continue;
    const int fiber = rk - (d * d) / 4;
    if (fiber >= 0)
      add_fiber(fiber, d);
  }
  return out;
}

}  // namespace lusym
