// Theta correspondence on unipotent symbols.
//
// For a dual pair (G, G') the correspondence of unipotent characters is the
// relation B_{G,G'} on symbols. Inside it sits the one-to-one map theta-bar,
// defined by transposing Upsilon(Lambda) and inserting one part tau. The
// l-admissibility tables decide when theta-bar(Lambda) has Theta-rank k.

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "lusym/errors.hpp"
#include "lusym/partition.hpp"
#include "lusym/symbol.hpp"

namespace lusym {

// (Sp_k, O±_n), (O±_k, Sp_n) with k, n even, or (U_k, U_n).
class DualPair {
 public:
  DualPair(GroupFamily first, GroupFamily second)
      : first_(first), second_(second) {
    const bool sp_o = first.kind() == Kind::Sp && second.is_orthogonal();
    const bool o_sp = first.is_orthogonal() && second.kind() == Kind::Sp;
    const bool u_u = first.is_unitary() && second.is_unitary();
    if (!(sp_o || o_sp || u_u))
      throw DomainError("not a dual pair: (" + first.tag() + ", " +
                        second.tag() + ")");
  }

  // "U3:U6", "Sp2:O-4", "O+2:Sp6"
  static DualPair parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
      throw DomainError("bad dual pair '" + std::string(text) +
                        "' (expected FIRST:SECOND)");
    return {GroupFamily::parse(text.substr(0, colon)),
            GroupFamily::parse(text.substr(colon + 1))};
  }

  const GroupFamily& first() const { return first_; }
  const GroupFamily& second() const { return second_; }
  int k() const { return first_.size(); }
  int n() const { return second_.size(); }
  bool is_unitary() const { return first_.is_unitary(); }
  bool symplectic_first() const { return first_.kind() == Kind::Sp; }

  // The orthogonal member of an Sp/O pair.
  const GroupFamily& orthogonal() const {
    return symplectic_first() ? second_ : first_;
  }
  // Sign epsilon of the orthogonal member.
  bool epsilon_plus() const { return orthogonal().kind() == Kind::OPlus; }

  DualPair reversed() const { return {second_, first_}; }

  std::string tag() const { return first_.tag() + ":" + second_.tag(); }

  friend bool operator==(const DualPair&, const DualPair&) = default;

 private:
  GroupFamily first_;
  GroupFamily second_;
};

struct ThetaPair {
  Symbol lhs;
  Symbol rhs;
  DualPair pair;
};

namespace impl {

inline void require_member(const GroupFamily& f, const Symbol& s) {
  if (!family_contains(f, s))
    throw DomainError("symbol is not in S_" + f.tag());
}

// d with def = 4d, 4d+1, 4d+2 for O+, Sp, O- respectively (d may be negative).
inline int sp_o_defect_index(const GroupFamily& f, const Symbol& s) {
  const int residue = f.kind() == Kind::OPlus ? 0 : f.kind() == Kind::Sp ? 1 : 2;
  const int shifted = defect(s) - residue;
  if (mod4(shifted) != 0)
    throw DomainError("defect does not match family " + f.tag());
  return shifted / 4;
}

// Defect the partner of a symbol of defect `d` must have under B.
inline int partner_defect(const DualPair& pair, int d) {
  if (pair.is_unitary()) {
    if ((pair.k() + pair.n()) % 2 == 0)
      return d == 0 ? 0 : 1 - d;
    return -d - 1;
  }
  // def' = 1 - def for epsilon = +, -def - 1 for epsilon = -. The relation
  // is an involution on defects, so this serves both orientations.
  return pair.epsilon_plus() ? 1 - d : -d - 1;
}

// The Sp-first / epsilon-+ / (k+n)-even shape of B and theta-bar: Upsilon
// rows are compared crosswise as nu ⪯ mu', nu' ⪯ mu and tau goes on top.
inline bool top_insertion(const DualPair& pair) {
  if (pair.is_unitary())
    return (pair.k() + pair.n()) % 2 == 0;
  return pair.epsilon_plus();
}

}  // namespace impl

// (l, r) ∈ B_{G,G'}. Pairs with the orthogonal group first use the relation
// of the reversed pair.
inline bool in_b_relation(const DualPair& pair, const Symbol& l, const Symbol& r) {
  impl::require_member(pair.first(), l);
  impl::require_member(pair.second(), r);
  if (!pair.is_unitary() && !pair.symplectic_first())
    return in_b_relation(pair.reversed(), r, l);

  const BiPartition ul = upsilon(l);
  const BiPartition ur = upsilon(r);
  if (defect(r) != impl::partner_defect(pair, defect(l)))
    return false;
  if (impl::top_insertion(pair))
    return interlaces(ul.bottom, ur.top) && interlaces(ur.bottom, ul.top);
  return interlaces(ul.top, ur.bottom) && interlaces(ur.top, ul.bottom);
}

inline std::vector<Symbol> theta_partners(const DualPair& pair, const Symbol& l,
                                          const Limits& limits = kDefaultLimits) {
  impl::require_member(pair.first(), l);
  std::vector<Symbol> out;
  for (const auto& r : enumerate_family(pair.second(), limits))
    if (in_b_relation(pair, l, r))
      out.push_back(r);
  return out;
}

// Size of the part theta-bar inserts. May be negative.
//   unitary, d = |def|:   (n-k+d)/2 if k+n+d even, (n-k-d-1)/2 otherwise
//   Sp/O, def = 4d+r:     (n-k)/2 + 2d for epsilon = +, (n-k)/2 - (2d+1) for -
inline int tau(const DualPair& pair, const Symbol& s) {
  impl::require_member(pair.first(), s);
  const int k = pair.k();
  const int n = pair.n();
  if (pair.is_unitary()) {
    const int d = std::abs(defect(s));
    if ((k + n + d) % 2 == 0)
      return (n - k + d) / 2;
    return (n - k - d - 1) / 2;
  }
  const int d = impl::sp_o_defect_index(pair.first(), s);
  return pair.epsilon_plus() ? (n - k) / 2 + 2 * d : (n - k) / 2 - (2 * d + 1);
}

// theta-bar(s): Upsilon(s)^t with tau inserted on top (epsilon = +, or k+n
// even for unitary pairs) or on the bottom, lifted at the defect B demands.
inline Symbol theta_bar(const DualPair& pair, const Symbol& s) {
  const int t = tau(pair, s);
  if (t < 0)
    throw UndefinedMapError("theta-bar is undefined: tau = " + std::to_string(t) +
                            " for " + pair.tag());
  const BiPartition flipped = transpose(upsilon(s));
  const BiPartition image = impl::top_insertion(pair)
                                ? bipartition_union(flipped, t, std::nullopt)
                                : bipartition_union(flipped, std::nullopt, t);
  const int target = impl::partner_defect(pair, defect(s));
  Symbol out = upsilon_inverse(image, target);
  if (defect(out) != target || !family_contains(pair.second(), out))
    throw InternalError("theta-bar image is not in S_" + pair.second().tag());
  return out;
}

// Whether s is ell-admissible for the pair; mu_1, nu_1 are the largest parts
// of Upsilon(s). Sp/O pairs require ell even.
inline bool is_admissible(const DualPair& pair, const Symbol& s, int ell) {
  impl::require_member(pair.first(), s);
  if (ell < 0)
    throw DomainError("admissibility level must be non-negative");
  const BiPartition u = upsilon(s);
  const int mu1 = u.top.largest();
  const int nu1 = u.bottom.largest();

  if (pair.is_unitary()) {
    // Compared at twice their value.
    const int d = std::abs(defect(s));
    const bool ell_even = ell % 2 == 0;
    const bool d_even = d % 2 == 0;
    if (ell_even && d_even)
      return 2 * mu1 <= ell - d && 2 * nu1 <= ell + d;
    if (ell_even)
      return 2 * mu1 <= ell + d + 1 && 2 * nu1 <= ell - d - 1;
    if (d_even)
      return 2 * mu1 <= ell - d - 1 && 2 * nu1 <= ell + d + 1;
    return 2 * mu1 <= ell + d && 2 * nu1 <= ell - d;
  }

  if (ell % 2 != 0)
    throw DomainError("admissibility for Sp/O pairs needs an even level");
  const int d = impl::sp_o_defect_index(pair.first(), s);
  const int half = ell / 2;
  if (pair.symplectic_first()) {
    if (pair.epsilon_plus())
      return mu1 <= half - 2 * d && nu1 <= half + 2 * d;
    return mu1 <= half - 2 * d - 1 && nu1 <= half + 2 * d + 1;
  }
  if (pair.epsilon_plus())
    return mu1 <= half - 2 * d + 1 && nu1 <= half + 2 * d;
  return mu1 <= half - 2 * d - 1 && nu1 <= half + 2 * d + 2;
}

// Twist by the sign character of an even orthogonal group: transposition.
// def -> -def keeps O+ in O+ and O- in O-.
inline Symbol sgn_twist(const Symbol& s, const GroupFamily& f) {
  if (!f.is_orthogonal())
    throw DomainError("sgn twist needs an orthogonal family, got " + f.tag());
  impl::require_member(f, s);
  return transpose(s);
}

// Unipotent Theta-rank of s ∈ S_target: the least k such that s (or, for an
// orthogonal target, its sgn twist) pairs with some unipotent symbol of the
// other member. Sp targets scan O±_k for even k; O targets scan Sp_k; U
// targets scan U_k for every k.
inline int theta_rank(const GroupFamily& target, const Symbol& s,
                      const Limits& limits = kDefaultLimits) {
  impl::require_member(target, s);
  const int n = target.size();
  // Past the stable range every symbol occurs, so 2n + 2 is a safe ceiling.
  const int ceiling = 2 * n + 2;

  auto pairs_with_some = [&](const GroupFamily& source, const Symbol& x) {
    const DualPair pair(source, target);
    for (const auto& l : enumerate_family(source, limits))
      if (in_b_relation(pair, l, x))
        return true;
    return false;
  };

  switch (target.kind()) {
    case Kind::U:
      for (int k = 0; k <= ceiling; ++k)
        if (pairs_with_some(GroupFamily::u(k), s))
          return k;
      break;
    case Kind::Sp:
      for (int k = 0; k <= ceiling; k += 2)
        if (pairs_with_some(GroupFamily::o_plus(k), s) ||
            pairs_with_some(GroupFamily::o_minus(k), s))
          return k;
      break;
    case Kind::OPlus:
    case Kind::OMinus: {
      const Symbol twisted = sgn_twist(s, target);
      for (int k = 0; k <= ceiling; k += 2)
        if (pairs_with_some(GroupFamily::sp(k), s) ||
            pairs_with_some(GroupFamily::sp(k), twisted))
          return k;
      break;
    }
  }
  throw InternalError("no theta partner found below size " +
                      std::to_string(ceiling) + " for a symbol of " + target.tag());
}

}  // namespace lusym
