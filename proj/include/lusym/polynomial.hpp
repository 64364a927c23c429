// Univariate polynomials in q with exact coefficients.

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lusym/errors.hpp"

namespace lusym {

// Sparse polynomial: exponent -> coefficient, zero coefficients never
// stored. Coeff must behave like an integer ring element (mpz_class, long).
template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<unsigned, Coeff>;

  Polynomial() = default;

  explicit Polynomial(Terms terms) : terms_(std::move(terms)) { normalize(); }

  static Polynomial constant(Coeff c) { return monomial(std::move(c), 0); }

  static Polynomial monomial(Coeff c, unsigned exponent) {
    Terms t;
    t.emplace(exponent, std::move(c));
    return Polynomial(std::move(t));
  }

  // q^a + sign, where sign is +1 or -1.
  static Polynomial binomial(unsigned exponent, int sign) {
    return monomial(Coeff(1), exponent) + constant(Coeff(sign));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
  }

  Coeff coefficient(unsigned exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff leading_coefficient() const {
    return terms_.empty() ? Coeff(0) : terms_.rbegin()->second;
  }

  Coeff evaluate(const Coeff& q) const {
    // Horner over the dense range, skipping gaps with repeated multiplication.
    Coeff acc(0);
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      for (int e = prev; e > static_cast<int>(it->first); --e)
        acc *= q;
      acc += it->second;
      prev = static_cast<int>(it->first);
    }
    for (int e = prev; e > 0; --e)
      acc *= q;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_)
      terms_[e] += c;
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_)
      terms_[e] -= c;
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Coeff> dense(a.degree() + b.degree() + 1, Coeff(0));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        dense[ea + eb] += ca * cb;
    return from_dense(dense);
  }

  // Multiplication by q^shift.
  Polynomial shifted(unsigned shift) const {
    Terms t;
    for (const auto& [e, c] : terms_)
      t.emplace(e + shift, c);
    return Polynomial(std::move(t));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  struct DivisionResult;

  // Long division by a divisor with leading coefficient +1 or -1, so the
  // quotient stays integral.
  DivisionResult divide(const Polynomial& divisor) const;

  // Quotient of an exact division; a nonzero remainder is an InternalError.
  Polynomial exact_quotient(const Polynomial& divisor) const;

  static Polynomial from_dense(const std::vector<Coeff>& dense) {
    Terms t;
    for (std::size_t e = 0; e < dense.size(); ++e)
      if (dense[e] != 0)
        t.emplace(static_cast<unsigned>(e), dense[e]);
    return Polynomial(std::move(t));
  }

  std::vector<Coeff> to_dense() const {
    std::vector<Coeff> dense(degree() + 1, Coeff(0));
    for (const auto& [e, c] : terms_)
      dense[e] = c;
    return dense;
  }

 private:
  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Terms terms_;
};

template <class Coeff>
struct Polynomial<Coeff>::DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

template <class Coeff>
auto Polynomial<Coeff>::divide(const Polynomial& divisor) const -> DivisionResult {
  if (divisor.is_zero())
    throw DomainError("polynomial division by zero");
  const Coeff lead = divisor.leading_coefficient();
  if (lead != 1 && lead != -1)
    throw DomainError("divisor must have leading coefficient +1 or -1");
  if (degree() < divisor.degree())
    return {Polynomial(), *this};

  std::vector<Coeff> rem = to_dense();
  const std::vector<Coeff> div = divisor.to_dense();
  const int dd = divisor.degree();
  std::vector<Coeff> quot(degree() - dd + 1, Coeff(0));
  for (int e = degree(); e >= dd; --e) {
    if (rem[e] == 0)
      continue;
    const Coeff factor = rem[e] * lead;  // lead is its own inverse
    quot[e - dd] = factor;
    for (int j = 0; j <= dd; ++j)
      if (div[j] != 0)
        rem[e - dd + j] -= factor * div[j];
  }
  rem.resize(dd);
  return {from_dense(quot), from_dense(rem)};
}

template <class Coeff>
auto Polynomial<Coeff>::exact_quotient(const Polynomial& divisor) const -> Polynomial {
  auto [quotient, remainder] = divide(divisor);
  if (!remainder.is_zero())
    throw InternalError("polynomial division is not exact");
  return quotient;
}

using IntPolynomial = Polynomial<mpz_class>;

}  // namespace lusym
