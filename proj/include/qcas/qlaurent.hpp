#pragma once

#include <map>
#include <string>

#include "qcas/rational.hpp"

namespace qcas {

/// Laurent polynomial in q with Rational coefficients. Stored as a map from
/// exponent to coefficient; no stored coefficient is zero and the empty map
/// is the zero element.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(const Rational& c) { set(0, c); }  // NOLINT: constant embedding
  QLaurent(long c) { set(0, Rational(c)); }   // NOLINT

  static QLaurent q_power(long e) { return term(Rational(1), e); }
  static QLaurent term(const Rational& c, long e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True for a single term c*q^e.
  bool is_monomial() const { return terms_.size() == 1; }

  /// Lowest/highest stored exponent; callable only on nonzero elements.
  long min_exp() const;
  long max_exp() const;

  const std::map<long, Rational>& terms() const { return terms_; }
  Rational coeff(long e) const;
  /// Adds c*q^e, erasing the slot if the sum vanishes.
  void add_term(long e, const Rational& c);

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent& operator*=(const Rational& c);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(QLaurent a, const Rational& c) { return a *= c; }

  /// Multiply by q^e.
  QLaurent shifted(long e) const;

  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  /// Exact evaluation at q = a. Throws PoleAtPoint when a = 0 meets a
  /// negative exponent.
  Rational eval(const Rational& a) const;

  /// Human-readable form, exponents descending: "q^3 + q - 2*q^-1".
  std::string str() const;

 private:
  void set(long e, const Rational& c);
  std::map<long, Rational> terms_;
};

}  // namespace qcas
