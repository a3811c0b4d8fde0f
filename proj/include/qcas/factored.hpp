#pragma once

#include <map>
#include <string>
#include <utility>

#include "qcas/mpoly.hpp"

namespace qcas {

/// Rational function sign * num / prod (L_i - L_j)^mult with the denominator
/// kept as a multiset of linear factors, i < j. Factors supplied with i > j
/// are normalized with the sign flip absorbed. This structured form is all
/// the Casimir formulas ever need; no general multivariate gcd exists here.
class FactoredRational {
 public:
  using DenMap = std::map<std::pair<int, int>, int>;

  explicit FactoredRational(MPoly num) : num_(std::move(num)), sign_(1) {}
  FactoredRational(MPoly num, const DenMap& den, int sign = 1);

  int nvars() const { return num_.nvars(); }
  const MPoly& num() const { return num_; }
  const DenMap& den() const { return den_; }
  int sign() const { return sign_; }
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Multiply the denominator by (L_i - L_j)^mult, i != j in any order.
  void push_den_factor(int i, int j, int mult = 1);

  /// The value as a polynomial; requires an empty denominator.
  MPoly to_mpoly() const;
  /// Denominator expanded to an MPoly (for cross-multiplied comparisons).
  MPoly den_poly() const;

  /// Removes denominator factors that exactly divide the numerator, until
  /// none does. Value-preserving.
  FactoredRational& reduce();

  FactoredRational& operator*=(const QField& c);
  FactoredRational& operator*=(const MPoly& p);

  /// Exact sum over the least common denominator (multiset union), reduced.
  friend FactoredRational frac_add(const FactoredRational& a, const FactoredRational& b);
  friend FactoredRational frac_mul(const FactoredRational& a, const FactoredRational& b);

  /// Equality of values, by cross-multiplication; representation-independent.
  bool value_equals(const FactoredRational& o) const;

  std::string str() const;

 private:
  MPoly num_;
  DenMap den_;
  int sign_;
};

}  // namespace qcas
