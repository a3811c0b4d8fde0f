#include "qcas/factored.hpp"

#include <sstream>

namespace qcas {

namespace {

MPoly linear_factor(int n, int i, int j) {
  MPoly f = MPoly::variable(n, i);
  f -= MPoly::variable(n, j);
  return f;
}

}  // namespace

FactoredRational::FactoredRational(MPoly num, const DenMap& den, int sign)
    : num_(std::move(num)), sign_(sign) {
  for (const auto& [pair, mult] : den) push_den_factor(pair.first, pair.second, mult);
}

void FactoredRational::push_den_factor(int i, int j, int mult) {
  if (i == j || i < 1 || j < 1 || i > nvars() || j > nvars())
    throw IndexOutOfRange("denominator factor indices out of range");
  if (mult < 0) throw IndexOutOfRange("negative factor multiplicity");
  if (mult == 0) return;
  if (i > j) {
    std::swap(i, j);
    if (mult % 2 != 0) sign_ = -sign_;
  }
  den_[{i, j}] += mult;
}

MPoly FactoredRational::to_mpoly() const {
  if (!is_polynomial()) throw CancellationFailure("denominator factors remain: " + str());
  return sign_ < 0 ? -num_ : num_;
}

MPoly FactoredRational::den_poly() const {
  MPoly d = MPoly::constant(nvars(), QField(1));
  for (const auto& [pair, mult] : den_)
    for (int m = 0; m < mult; ++m) d = d * linear_factor(nvars(), pair.first, pair.second);
  return d;
}

FactoredRational& FactoredRational::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    sign_ = 1;
    return *this;
  }
  bool progress = true;
  while (progress && !den_.empty()) {
    progress = false;
    for (auto it = den_.begin(); it != den_.end();) {
      try {
        MPoly quo = mpoly_exact_divide_linear(num_, it->first.first, it->first.second);
        num_ = std::move(quo);
        if (--it->second == 0) it = den_.erase(it);
        progress = true;
      } catch (const NotDivisible&) {
        ++it;
      }
    }
  }
  return *this;
}

FactoredRational& FactoredRational::operator*=(const QField& c) {
  num_ *= c;
  if (num_.is_zero()) {
    den_.clear();
    sign_ = 1;
  }
  return *this;
}

FactoredRational& FactoredRational::operator*=(const MPoly& p) {
  num_ = num_ * p;
  if (num_.is_zero()) {
    den_.clear();
    sign_ = 1;
  }
  return *this;
}

FactoredRational frac_add(const FactoredRational& a, const FactoredRational& b) {
  if (a.nvars() != b.nvars()) throw IndexOutOfRange("variable count mismatch");
  // least common denominator: per-factor max multiplicity
  FactoredRational::DenMap lcd = a.den_;
  for (const auto& [pair, mult] : b.den_) {
    int& m = lcd[pair];
    m = std::max(m, mult);
  }
  const int n = a.nvars();
  auto scaled_num = [&](const FactoredRational& x) {
    MPoly p = x.sign_ < 0 ? -x.num_ : x.num_;
    for (const auto& [pair, mult] : lcd) {
      auto it = x.den_.find(pair);
      int missing = mult - (it == x.den_.end() ? 0 : it->second);
      for (int m = 0; m < missing; ++m) p = p * linear_factor(n, pair.first, pair.second);
    }
    return p;
  };
  FactoredRational r(scaled_num(a) + scaled_num(b), lcd);
  r.reduce();
  return r;
}

FactoredRational frac_mul(const FactoredRational& a, const FactoredRational& b) {
  if (a.nvars() != b.nvars()) throw IndexOutOfRange("variable count mismatch");
  FactoredRational r(a.num_ * b.num_, FactoredRational::DenMap{}, a.sign_ * b.sign_);
  for (const auto& [pair, mult] : a.den_) r.push_den_factor(pair.first, pair.second, mult);
  for (const auto& [pair, mult] : b.den_) r.push_den_factor(pair.first, pair.second, mult);
  r.reduce();
  return r;
}

bool FactoredRational::value_equals(const FactoredRational& o) const {
  if (nvars() != o.nvars()) return false;
  MPoly lhs = num_ * o.den_poly();
  MPoly rhs = o.num_ * den_poly();
  if (sign_ < 0) lhs = -lhs;
  if (o.sign_ < 0) rhs = -rhs;
  return lhs == rhs;
}

std::string FactoredRational::str() const {
  std::ostringstream os;
  if (sign_ < 0) os << "-";
  os << "(" << num_.str() << ")";
  if (!den_.empty()) {
    os << " / ";
    for (const auto& [pair, mult] : den_) {
      os << "(L" << pair.first << " - L" << pair.second << ")";
      if (mult > 1) os << "^" << mult;
    }
  }
  return os.str();
}

}  // namespace qcas
