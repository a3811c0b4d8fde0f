#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qcas/factored.hpp"
#include "qcas/symfun.hpp"

namespace qcas {

/// Dominant integral highest weight (L1 >= L2 >= ... >= Ln, integer
/// coordinates). Carries the derived exponents 2(Lambda+rho, eps_i)
/// = 2*Lambda_i + n - 2i + 1 used in every q-power substitution.
class Weight {
 public:
  explicit Weight(std::vector<int> coords);

  int n() const { return static_cast<int>(coords_.size()); }
  const std::vector<int>& coords() const { return coords_; }
  /// 1-based; always an integer by construction.
  long exp2(int i) const;
  std::vector<long> exp2_vector() const;
  std::string str() const;

 private:
  std::vector<int> coords_;
};

/// Concurrent memo table for G_{n,k}. Entries are immutable and published
/// at most once; a racing duplicate computation is discarded.
class GCache {
 public:
  std::shared_ptr<const MPoly> get(int n, int k);

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, std::shared_ptr<const MPoly>> cells_;
};

GCache& global_g_cache();

/// P_{n,i} = prod_{j != i} (q L_i - q^{-1} L_j) / (L_i - L_j), numerator
/// expanded, denominator as a normalized factor multiset.
FactoredRational p_ni(int n, int i);

/// G_{n,k} = sum_i L_i^k P_{n,i}, formed as a rational function and reduced.
/// The denominator must cancel completely; a surviving factor means an
/// arithmetic bug and raises CancellationFailure.
MPoly g_direct(int n, int k);

/// G_{n,k} from the k-sum recursion
/// G_{n,k} = q G_{n-1,k} + (q - q^{-1}) sum_{i<k} L_n^{k-i} G_{n-1,i}
///           + q^{-(n-1)} L_n^k,  base G_{1,k} = L_1^k; memoized.
MPoly g_recursive(int n, int k);
MPoly g_recursive(int n, int k, GCache& cache);

/// Independent route via the two-term recursion
/// G_{n,k} = L_n G_{n,k-1} + q G_{n-1,k} - q^{-1} L_n G_{n-1,k-1}.
MPoly g_two_term(int n, int k);

/// G_{n,k} as the signed combination of hook characters:
/// sum_{i=1}^{min(k,n)} (-1)^{i-1} q^{n-2i+1} s_{hook(k,i)}; requires k >= 1.
MPoly g_character(int n, int k);

/// Hook Schur polynomial Gamma_{k,i} in n variables, zero when i > k.
MPoly gamma_ki(int n, int k, int i);

/// Harish-Chandra image C0_{n,k}, computed by two independent routes that
/// are compared on every call:
///   (q^{-1}-q)^{-k} sum_j binom(k,j) (-q^{1-n})^j G_{n,j}
/// and the reduced sum of ((q^{1-n} L_i - 1)/(q - q^{-1}))^k P_{n,i}.
/// Memoized. Coefficient denominators are powers of q - q^{-1}.
MPoly hc_image(int n, int k);
MPoly hc_image_binomial(int n, int k);
MPoly hc_image_binomial(int n, int k, GCache& cache);
MPoly hc_image_product(int n, int k);

/// Eigenvalue of C_{n,k} on the irreducible with highest weight w, from the
/// closed trace formula (exact in Q(q)).
QField eigenvalue_direct(const Weight& w, int k);

/// The same eigenvalue by substituting L_i -> q^{exp2(i)}, both into the
/// assembled C0_{n,k} and into the binomial combination of substituted
/// G_{n,l}; the two substitution routes must coincide.
QField eigenvalue_via_hc(const Weight& w, int k);

/// Element of the G-product span: sum over multisets mu (descending, parts
/// >= 1; the empty multiset is the constant slot) of coeff * prod_j
/// G_{n,mu_j}.
struct CasimirExpression {
  int n = 1;
  std::map<std::vector<int>, QField, GradedLexDesc> terms;

  MPoly reconstruct() const;
  std::string str() const;
};

/// Expresses a symmetric polynomial in products of G_{n,1}..G_{n,n} by an
/// exact graded linear solve. SolveFailure here would contradict the
/// generation theorem and is treated as fatal.
CasimirExpression express_in_casimirs(const MPoly& p);

/// Symmetric Laurent input: finds minimal m >= 0 such that
/// p * (L_1...L_n)^m is polynomial and expresses that; p is then
/// c^{2m} * (expression) since c^{-2} = L_1...L_n.
std::pair<int, CasimirExpression> center_express(const MPoly& p);

/// Verifies the generating-function identity
/// S_n = ((q-q^{-1})/(1-tL_n)) S_{n-1} + q^{-1} S_{n-1}
///       + q^{-(n-1)}/(1-tL_n)
/// coefficient-by-coefficient through t^trunc.
bool generating_function_check(int n, int trunc);

long binomial(int n, int k);

}  // namespace qcas
