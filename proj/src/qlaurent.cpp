#include "qcas/qlaurent.hpp"

#include <sstream>

namespace qcas {

QLaurent QLaurent::term(const Rational& c, long e) {
  QLaurent p;
  p.set(e, c);
  return p;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

long QLaurent::min_exp() const {
  if (is_zero()) throw Error("min_exp of zero Laurent polynomial");
  return terms_.begin()->first;
}

long QLaurent::max_exp() const {
  if (is_zero()) throw Error("max_exp of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Rational QLaurent::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QLaurent::set(long e, const Rational& c) {
  if (!c.is_zero()) terms_[e] = c;
}

void QLaurent::add_term(long e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (this == &o) {
    for (auto& [e, c] : terms_) c *= Rational(2);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  *this = *this * o;
  return *this;
}

QLaurent& QLaurent::operator*=(const Rational& c) {
  const Rational factor = c;  // c may alias one of our coefficients
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= factor;
  return *this;
}

QLaurent QLaurent::shifted(long e) const {
  QLaurent r;
  for (const auto& [ee, c] : terms_) r.terms_.emplace(ee + e, c);
  return r;
}

Rational QLaurent::eval(const Rational& a) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    if (e < 0 && a.is_zero()) throw PoleAtPoint("q^" + std::to_string(e) + " at q = 0");
    acc += c * a.pow(e);
  }
  return acc;
}

std::string QLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponent first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Rational c = it->second;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else if (c.sign() < 0) {
      os << " - ";
      c = -c;
    } else {
      os << " + ";
    }
    if (e == 0) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace qcas
