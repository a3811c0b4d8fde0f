#include "qcas/rational.hpp"

#include <ostream>

namespace qcas {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw Error("cannot parse rational: '" + s + "'");
  if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator: '" + s + "'");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? *this : inverse();
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qcas
