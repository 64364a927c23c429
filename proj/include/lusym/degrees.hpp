// Degrees in q of unipotent characters.
//
// Two routes are provided for unitary groups: the closed-form degree and the
// full degree polynomial built from the hook data of the symbol. They are
// meant to be checked against each other. For Sp and O only the closed form
// is available.

#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "lusym/errors.hpp"
#include "lusym/polynomial.hpp"
#include "lusym/symbol.hpp"

namespace lusym {

// deg_q |G|_{p'}:  k(k+2)/4 for Sp_k,  k^2/4 for O±_k,  k(k+1)/2 for U_k.
inline long group_order_degree(const GroupFamily& f) {
  const long k = f.size();
  switch (f.kind()) {
    case Kind::Sp: return k * (k + 2) / 4;
    case Kind::OPlus:
    case Kind::OMinus: return k * k / 4;
    case Kind::U: return k * (k + 1) / 2;
  }
  return 0;
}

namespace impl {

inline std::vector<long> entries_descending(const Symbol& s) {
  std::vector<long> z(s.top().entries().begin(), s.top().entries().end());
  z.insert(z.end(), s.bottom().entries().begin(), s.bottom().entries().end());
  std::sort(z.begin(), z.end(), std::greater<>());
  return z;
}

inline long exact_div(long numerator, long denominator, const char* what) {
  if (numerator % denominator != 0)
    throw InternalError(std::string(what) + " is not an integer");
  return numerator / denominator;
}

}  // namespace impl

// deg_q(rho_Lambda) for Lambda in S_{Sp_k} or S_{O±_k}:
//
//   sum_i (m-i) z_i - z_i (z_i + 1)
//     + k(k+2)/4 - (m-1)(m-3)(2m-1)/24    (m odd)
//     + k^2/4    - m(m-2)(2m-5)/24        (m even)
//
// with z_1 >= ... >= z_m all entries of both rows.
inline long deg_sp_o(const Symbol& s, const GroupFamily& f) {
  if (f.is_unitary())
    throw DomainError("deg_sp_o needs a symplectic or orthogonal family");
  if (!family_contains(f, s))
    throw DomainError("symbol is not in S_" + f.tag());
  const std::vector<long> z = impl::entries_descending(s);
  const long m = static_cast<long>(z.size());
  const long k = f.size();
  long times24 = 0;
  for (long i = 0; i < m; ++i)
    times24 += 24 * ((m - 1 - i) * z[i] - z[i] * (z[i] + 1));
  if (m % 2 != 0)
    times24 += 6 * k * (k + 2) - (m - 1) * (m - 3) * (2 * m - 1);
  else
    times24 += 6 * k * k - m * (m - 2) * (2 * m - 5);
  return impl::exact_div(times24, 24, "symplectic/orthogonal degree");
}

struct HookData {
  BetaSet x0;  // even entries
  BetaSet x1;  // odd entries
};

// X^0 = 2 * bottom, X^1 = 2 * top + 1 when def is even; rows swap roles when
// def is odd.
inline HookData hook_data(const Symbol& s) {
  auto scaled = [](const BetaSet& row, int offset) {
    std::vector<int> out;
    for (int x : row.entries())
      out.push_back(2 * x + offset);
    return BetaSet(std::move(out));
  };
  if (defect(s) % 2 == 0)
    return {scaled(s.bottom(), 0), scaled(s.top(), 1)};
  return {scaled(s.top(), 0), scaled(s.bottom(), 1)};
}

namespace impl {

// q^h - (-1)^h
inline IntPolynomial twisted_cyclotomic(unsigned h) {
  return IntPolynomial::binomial(h, h % 2 == 0 ? -1 : 1);
}

inline IntPolynomial vandermonde(const BetaSet& a) {
  IntPolynomial out = IntPolynomial::constant(1);
  const auto e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      out *= IntPolynomial::monomial(1, e[i]) - IntPolynomial::monomial(1, e[j]);
  return out;
}

inline IntPolynomial cross_sum(const BetaSet& a, const BetaSet& b) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (int x : a.entries())
    for (int y : b.entries())
      out *= IntPolynomial::monomial(1, x) + IntPolynomial::monomial(1, y);
  return out;
}

}  // namespace impl

// |U_k(q)|_{p'} = prod_{h=1}^{k} (q^h - (-1)^h)
inline IntPolynomial unitary_order_polynomial(int k) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (int h = 1; h <= k; ++h)
    out *= impl::twisted_cyclotomic(h);
  return out;
}

// rho_Lambda(1) for Lambda in S_{U_k}:
//
//   Delta(X0) Delta(X1) Xi(X0, X1) |U_k(q)|_{p'}
//   ---------------------------------------------
//   Theta(X0) Theta(X1) q^{C(m-1,2) + ... + C(2,2)}
//
// Every division is carried out exactly; a remainder throws InternalError.
inline IntPolynomial unitary_degree_polynomial(const Symbol& s, int k) {
  if (!family_contains(GroupFamily::u(k), s))
    throw DomainError("symbol is not in S_U" + std::to_string(k));
  const HookData h = hook_data(s);

  IntPolynomial value = impl::vandermonde(h.x0) * impl::vandermonde(h.x1) *
                        impl::cross_sum(h.x0, h.x1) *
                        unitary_order_polynomial(k);

  // Theta(X0) Theta(X1), one monic factor at a time.
  for (const BetaSet* row : {&h.x0, &h.x1})
    for (int a : row->entries())
      for (int j = 1; j <= a; ++j)
        value = value.exact_quotient(impl::twisted_cyclotomic(j));

  const long m = s.top().length() + s.bottom().length();
  const long shift = m * (m - 1) * (m - 2) / 6;
  const int low = value.is_zero() ? 0 : static_cast<int>(value.terms().begin()->first);
  if (low < shift)
    throw InternalError("unitary degree polynomial is not divisible by q^" +
                        std::to_string(shift));
  IntPolynomial::Terms lowered;
  for (const auto& [e, c] : value.terms())
    lowered.emplace(e - static_cast<unsigned>(shift), c);
  return IntPolynomial(std::move(lowered));
}

// Closed form of deg_q(rho_Lambda) for Lambda in S_{U_k}:
//
//   sum (m-i) z_i - sum z_i(z_i+1)/2 + k(k+1)/2 - m(m-1)(m-2)/6
//
// with z_1 > ... > z_m the entries of X0 ∪ X1.
inline long deg_unitary(const Symbol& s, int k) {
  if (!family_contains(GroupFamily::u(k), s))
    throw DomainError("symbol is not in S_U" + std::to_string(k));
  const HookData h = hook_data(s);
  std::vector<long> z(h.x0.entries().begin(), h.x0.entries().end());
  z.insert(z.end(), h.x1.entries().begin(), h.x1.entries().end());
  std::sort(z.begin(), z.end(), std::greater<>());
  if (std::adjacent_find(z.begin(), z.end()) != z.end())
    throw InternalError("hook entries are not distinct");

  const long m = static_cast<long>(z.size());
  long times6 = 0;
  for (long i = 0; i < m; ++i)
    times6 += 6 * (m - 1 - i) * z[i] - 3 * z[i] * (z[i] + 1);
  times6 += 3L * k * (k + 1) - m * (m - 1) * (m - 2);
  return impl::exact_div(times6, 6, "unitary degree");
}

}  // namespace lusym
