#pragma once

#include <string>

#include "qcas/qlaurent.hpp"

namespace qcas {

/// Element of Q(q), stored as a normalized ratio num/den of Laurent
/// polynomials. Canonical form: den is an ordinary polynomial in q (lowest
/// exponent 0) with nonzero constant term and leading coefficient 1, and the
/// numerator shifted down to exponent 0 is coprime to den. Zero is 0/1.
/// Equal field elements therefore have identical representations.
class QField {
 public:
  QField() : num_(), den_(1) {}
  QField(long c) : num_(c), den_(1) {}  // NOLINT
  QField(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  QField(const QLaurent& num) : num_(num), den_(1) {}  // NOLINT
  QField(const QLaurent& num, const QLaurent& den);

  static QField q_power(long e) { return QField(QLaurent::q_power(e)); }

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  QField operator-() const;
  QField& operator+=(const QField& o);
  QField& operator-=(const QField& o);
  QField& operator*=(const QField& o);
  QField& operator/=(const QField& o);
  friend QField operator+(QField a, const QField& b) { return a += b; }
  friend QField operator-(QField a, const QField& b) { return a -= b; }
  friend QField operator*(QField a, const QField& b) { return a *= b; }
  friend QField operator/(QField a, const QField& b) { return a /= b; }

  QField inverse() const;
  QField pow(long e) const;

  /// Canonical form makes equality-by-representation valid.
  friend bool operator==(const QField& a, const QField& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QField& a, const QField& b) { return !(a == b); }

  /// Evaluates at q = a. Removable singularities are already cancelled by
  /// normalization; throws PoleAtPoint when the denominator (or a negative
  /// q-power at a = 0) vanishes.
  Rational eval_at(const Rational& a) const;

  std::string str() const;

 private:
  struct raw_tag {};
  QField(QLaurent num, QLaurent den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QLaurent num_;
  QLaurent den_;
};

}  // namespace qcas
