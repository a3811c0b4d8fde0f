#include "qcas/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcas {

namespace {

long degree_of(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0L); }

std::string monomial_str(const std::vector<int>& exps) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << "*";
    os << "L" << (i + 1);
    if (exps[i] != 1) os << "^" << exps[i];
    first = false;
  }
  if (first) return "1";
  return os.str();
}

// Coefficient in front of a monomial or a factored sum. Single Laurent terms
// render bare ("q^2", "-3*q"), anything else is parenthesized as needed.
std::string coeff_product_str(const QField& c) {
  if (c.is_laurent()) {
    if (c.num().is_monomial()) return c.num().str();
    return "(" + c.num().str() + ")";
  }
  return c.str();
}

}  // namespace

bool GradedLexDesc::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const long da = degree_of(a);
  const long db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(int n) : n_(n) {
  if (n < 1) throw IndexOutOfRange("variable count must be >= 1");
}

MPoly MPoly::constant(int n, const QField& c) {
  MPoly p(n);
  p.add_term(std::vector<int>(n, 0), c);
  return p;
}

MPoly MPoly::variable(int n, int i) {
  if (i < 1 || i > n) throw IndexOutOfRange("variable index out of range");
  std::vector<int> e(n, 0);
  e[i - 1] = 1;
  return monomial(n, e, QField(1));
}

MPoly MPoly::monomial(int n, std::vector<int> exps, const QField& c) {
  MPoly p(n);
  if (static_cast<int>(exps.size()) != n) throw IndexOutOfRange("exponent vector length mismatch");
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

QField MPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? QField() : it->second;
}

int MPoly::total_degree() const {
  if (is_zero()) throw Error("total_degree of zero polynomial");
  // graded order: the first key has maximal degree
  return static_cast<int>(degree_of(terms_.begin()->first));
}

bool MPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

void MPoly::add_term(const std::vector<int>& exps, const QField& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(exps.size()) != n_) throw IndexOutOfRange("exponent vector length mismatch");
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (n_ != o.n_) throw IndexOutOfRange("variable count mismatch");
  if (this == &o) {
    for (auto& [e, v] : terms_) v *= QField(2);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (n_ != o.n_) throw IndexOutOfRange("variable count mismatch");
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const QField& c) {
  const QField factor = c;  // c may alias a coefficient of this polynomial
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= factor;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.n_ != b.n_) throw IndexOutOfRange("variable count mismatch");
  MPoly r(a.n_);
  std::vector<int> e(static_cast<size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw IndexOutOfRange("negative polynomial power");
  MPoly acc = constant(n_, QField(1));
  MPoly base = *this;
  unsigned n = static_cast<unsigned>(e);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

MPoly MPoly::times_var_power(int i, int m) const {
  if (i < 1 || i > n_) throw IndexOutOfRange("variable index out of range");
  MPoly r(n_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    e2[i - 1] += m;
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MPoly MPoly::shifted(const std::vector<int>& delta) const {
  MPoly r(n_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    for (size_t i = 0; i < e2.size(); ++i) e2[i] += delta[i];
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MPoly MPoly::embedded(int new_n) const {
  if (new_n < n_) throw IndexOutOfRange("cannot embed into fewer variables");
  MPoly r(new_n);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    e2.resize(static_cast<size_t>(new_n), 0);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MPoly MPoly::with_swapped_vars(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw IndexOutOfRange("variable index out of range");
  MPoly r(n_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    std::swap(e2[i - 1], e2[j - 1]);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

QField MPoly::substitute_q_powers(const std::vector<long>& e) const {
  if (static_cast<int>(e.size()) != n_) throw IndexOutOfRange("substitution vector length mismatch");
  QField acc;
  for (const auto& [exps, c] : terms_) {
    long qexp = 0;
    for (size_t i = 0; i < exps.size(); ++i) qexp += static_cast<long>(exps[i]) * e[i];
    acc += c * QField::q_power(qexp);
  }
  return acc;
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  if (is_constant()) return terms_.begin()->second.str();

  // factor out a coefficient shared by every term
  const QField& c0 = terms_.begin()->second;
  bool common = terms_.size() >= 2 && !c0.is_one() &&
                std::all_of(terms_.begin(), terms_.end(),
                            [&](const auto& t) { return t.second == c0; });
  std::ostringstream os;
  if (common) {
    os << coeff_product_str(c0) << "*(";
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      os << monomial_str(e);
      first = false;
    }
    os << ")";
    return os.str();
  }

  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string piece;
    if (is_const_term) {
      piece = c.is_laurent() && !c.num().is_monomial() ? "(" + c.str() + ")" : c.str();
    } else if (c.is_one()) {
      piece = monomial_str(e);
    } else if ((-c).is_one()) {
      piece = "-" + monomial_str(e);
    } else {
      piece = coeff_product_str(c) + "*" + monomial_str(e);
    }
    if (first) {
      os << piece;
      first = false;
    } else if (piece.size() > 1 && piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  return os.str();
}

MPoly mpoly_exact_divide_linear(const MPoly& p, int i, int j) {
  const int n = p.nvars();
  if (i < 1 || j < 1 || i > n || j > n || i >= j)
    throw IndexOutOfRange("divisor indices must satisfy 1 <= i < j <= n");
  if (p.is_zero()) return p;

  // bucket terms by their L_i exponent, zeroing that slot
  int dmax = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e[i - 1] < 0) throw NotDivisible("negative exponent in division variable");
    dmax = std::max(dmax, e[i - 1]);
  }
  if (dmax == 0) throw NotDivisible("no occurrence of L" + std::to_string(i));
  std::vector<MPoly> bucket(static_cast<size_t>(dmax) + 1, MPoly(n));
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> e2 = e;
    int d = e2[i - 1];
    e2[i - 1] = 0;
    bucket[static_cast<size_t>(d)].add_term(e2, c);
  }

  // synthetic division by (L_i - L_j): q_{d-1} = c_d + L_j * q_d
  MPoly quo(n);
  MPoly carry = bucket[static_cast<size_t>(dmax)];
  quo += carry.times_var_power(i, dmax - 1);
  for (int d = dmax - 1; d >= 1; --d) {
    carry = bucket[static_cast<size_t>(d)] + carry.times_var_power(j, 1);
    quo += carry.times_var_power(i, d - 1);
  }
  MPoly rem = bucket[0] + carry.times_var_power(j, 1);
  if (!rem.is_zero())
    throw NotDivisible("remainder after division by (L" + std::to_string(i) + " - L" +
                       std::to_string(j) + ")");
  return quo;
}

}  // namespace qcas
