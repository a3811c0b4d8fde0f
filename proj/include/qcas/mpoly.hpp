#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcas/qfield.hpp"

namespace qcas {

/// Term order used everywhere for storage, serialization and leading-term
/// extraction: graded lexicographic, descending. Works unchanged on Laurent
/// exponent vectors and on multisets of unequal length.
struct GradedLexDesc {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Multivariate polynomial in L_1..L_n with QField coefficients. Exponent
/// vectors are dense length-n arrays; negative entries are permitted so the
/// same type carries the Laurent elements handled by center_express.
class MPoly {
 public:
  using TermMap = std::map<std::vector<int>, QField, GradedLexDesc>;

  explicit MPoly(int n);
  static MPoly constant(int n, const QField& c);
  /// L_i, 1-based.
  static MPoly variable(int n, int i);
  static MPoly monomial(int n, std::vector<int> exps, const QField& c);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  QField coeff(const std::vector<int>& exps) const;
  /// Max total degree over terms; valid only for nonzero polynomials.
  int total_degree() const;
  bool has_negative_exponent() const;

  void add_term(const std::vector<int>& exps, const QField& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const QField& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const QField& c) { return a *= c; }
  friend MPoly operator*(const QField& c, MPoly a) { return a *= c; }
  MPoly pow(int e) const;

  /// Multiply by the monomial L_i^m (i 1-based; m may be negative).
  MPoly times_var_power(int i, int m) const;
  /// Shift every exponent vector by delta (componentwise).
  MPoly shifted(const std::vector<int>& delta) const;
  /// Reinterpret in new_n >= n variables, appending zero exponents.
  MPoly embedded(int new_n) const;
  /// Exchange variables L_i and L_j (1-based).
  MPoly with_swapped_vars(int i, int j) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Substitute L_i -> q^{e_i}, exactly in QField.
  QField substitute_q_powers(const std::vector<long>& e) const;

  /// Text form: graded-lex descending terms, "q^a" powers, "*" products,
  /// variables named L1..Ln. A common coefficient shared by every term is
  /// factored out, e.g. "q*(L1 + L2)".
  std::string str() const;

 private:
  int n_;
  TermMap terms_;
};

/// Exact division of p by (L_i - L_j), 1 <= i < j <= n, by synthetic
/// division treating p as univariate in L_i. Throws NotDivisible when a
/// nonzero remainder arises.
MPoly mpoly_exact_divide_linear(const MPoly& p, int i, int j);

}  // namespace qcas
