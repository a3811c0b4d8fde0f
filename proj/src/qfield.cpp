#include "qcas/qfield.hpp"

#include <vector>

namespace qcas {

namespace {

// Dense ascending coefficient vector of an ordinary polynomial in q.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// p * q^{-shift} must have only nonnegative exponents.
Dense to_dense(const QLaurent& p, long shift) {
  Dense d(static_cast<size_t>(p.max_exp() - shift) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - shift)] = c;
  return d;
}

QLaurent from_dense(const Dense& d, long shift) {
  QLaurent p;
  for (size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) p.add_term(static_cast<long>(i) + shift, d[i]);
  return p;
}

// a mod b in place; b nonzero.
void dense_mod(Dense& a, const Dense& b) {
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational f = a.back() / lead;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();  // leading slot cancels exactly
    trim(a);
    if (a.empty()) return;
  }
}

Dense dense_divexact(const Dense& a, const Dense& b) {
  Dense rem = a;
  Dense quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const Rational lead = b.back();
  while (rem.size() >= b.size()) {
    Rational f = rem.back() / lead;
    size_t off = rem.size() - b.size();
    quo[off] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
    rem.pop_back();
    trim(rem);
    if (rem.empty()) break;
  }
  if (!rem.empty()) throw Error("internal: inexact univariate division");
  trim(quo);
  return quo;
}

// Monic gcd via Euclid.
Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    dense_mod(a, b);
    std::swap(a, b);
  }
  if (!a.empty() && !a.back().is_one()) {
    Rational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

}  // namespace

QField::QField(const QLaurent& num, const QLaurent& den) : num_(num), den_(den) { normalize(); }

void QField::normalize() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator in Q(q)");
  if (num_.is_zero()) {
    den_ = QLaurent(1);
    return;
  }
  if (den_.is_one()) return;
  const long snum = num_.min_exp();
  const long sden = den_.min_exp();
  Dense a = to_dense(num_, snum);
  Dense b = to_dense(den_, sden);
  Dense g = dense_gcd(a, b);
  if (g.size() > 1) {
    a = dense_divexact(a, g);
    b = dense_divexact(b, g);
  }
  // force the denominator monic in its top coefficient
  if (!b.back().is_one()) {
    Rational inv = b.back().inverse();
    for (auto& c : a) c *= inv;
    for (auto& c : b) c *= inv;
  }
  num_ = from_dense(a, snum - sden);
  den_ = from_dense(b, 0);
}

QField QField::operator-() const { return QField(-num_, den_, raw_tag{}); }

QField& QField::operator+=(const QField& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QField& QField::operator-=(const QField& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ -= o.num_;
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QField& QField::operator*=(const QField& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

QField& QField::operator/=(const QField& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero in Q(q)");
  if (this == &o) {
    num_ = QLaurent(1);
    den_ = QLaurent(1);
    return *this;
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

QField QField::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
  return QField(den_, num_);
}

QField QField::pow(long e) const {
  if (e == 0) return QField(1);
  QField base = e > 0 ? *this : inverse();
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  QField acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rational QField::eval_at(const Rational& a) const {
  Rational d = den_.eval(a);
  if (d.is_zero()) throw PoleAtPoint("denominator vanishes at q = " + a.str());
  return num_.eval(a) / d;
}

std::string QField::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.is_monomial() ? num_.str() : "(" + num_.str() + ")";
  return n + "/(" + den_.str() + ")";
}

}  // namespace qcas
