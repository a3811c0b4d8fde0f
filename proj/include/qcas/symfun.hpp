#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcas/mpoly.hpp"

namespace qcas {

/// Integer partition: weakly decreasing nonnegative parts, stored with
/// trailing zeros stripped; padded back out to n coordinates on demand.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// 1-based part, zero beyond the length.
  int part(int i) const;
  /// Coordinates (p1,...,pn); throws IndexOutOfRange if more than n parts.
  std::vector<int> padded(int n) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// Index of the hook-shaped weight with k boxes, arm length k-i+1 and leg
/// length i-1, in n variables. The character is nonzero iff i <= min(k, n).
struct HookIndex {
  int k;
  int i;
  int n;
};

/// The hook partition (k-i+1, 1^{i-1}, 0^{n-i}), or nullopt for the
/// zero-character case i > k. Throws IndexOutOfRange when i > n.
std::optional<Partition> hook_partition(const HookIndex& h);

/// Schur polynomial via the alternant sum_w sign(w) L^{w(lambda+delta)}
/// divided exactly by the Vandermonde product, delta = (n-1,...,1,0).
MPoly schur_bialternant(const Partition& lambda, int n);

struct TableauxBounds {
  int max_weight = 8;
  int max_vars = 5;
};

/// Independent oracle: sums the content monomials of all semistandard Young
/// tableaux of shape lambda with entries in {1..n}.
MPoly schur_tableaux_oracle(const Partition& lambda, int n, const TableauxBounds& bounds = {});

/// Number of semistandard tableaux counted by the oracle (the dimension of
/// the corresponding irreducible).
long tableaux_count(const Partition& lambda, int n, const TableauxBounds& bounds = {});

/// h_k: sum of all monomials of total degree k.
MPoly complete_homogeneous(int k, int n);
/// e_k: sum of all squarefree monomials of degree k (zero when k > n).
MPoly elementary(int k, int n);

/// True iff p is invariant under every adjacent transposition of variables.
bool is_symmetric(const MPoly& p);

/// Coefficient map of p in products of graded generators: gens[j-1] must be
/// homogeneous of degree j, and p = sum_mu c_mu * prod_j gens[mu_j - 1] with
/// mu running over partitions (descending multisets) with parts <=
/// gens.size(). The empty multiset carries the constant component. Solved
/// exactly per graded component; throws SolveFailure if no expression exists.
std::map<std::vector<int>, QField, GradedLexDesc> express_in_graded_products(
    const MPoly& p, const std::vector<MPoly>& gens);

/// Decomposition of a symmetric polynomial into the complete-homogeneous
/// basis: p = sum_mu c_mu * prod_j h_{mu_j}. Throws NotSymmetric on
/// asymmetric or Laurent input.
std::map<std::vector<int>, QField, GradedLexDesc> decompose_h_basis(const MPoly& p);

/// All partitions of d with parts <= max_part, graded-lex descending.
std::vector<std::vector<int>> partitions_of(int d, int max_part);

}  // namespace qcas
