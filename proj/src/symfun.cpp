#include "qcas/symfun.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcas/linsolve.hpp"

namespace qcas {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw IndexOutOfRange("negative partition part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw IndexOutOfRange("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw IndexOutOfRange("partition part index is 1-based");
  return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw IndexOutOfRange("partition has more than n parts");
  std::vector<int> out = parts_;
  out.resize(static_cast<size_t>(n), 0);
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < length(); ++i) {
    if (i) os << ",";
    os << parts_[static_cast<size_t>(i)];
  }
  os << ")";
  return os.str();
}

std::optional<Partition> hook_partition(const HookIndex& h) {
  if (h.k < 1 || h.i < 1 || h.n < 1) throw IndexOutOfRange("hook indices must be positive");
  if (h.i > h.n) throw IndexOutOfRange("hook leg index exceeds variable count");
  if (h.i > h.k) return std::nullopt;  // zero character
  std::vector<int> parts;
  parts.push_back(h.k - h.i + 1);
  parts.insert(parts.end(), static_cast<size_t>(h.i - 1), 1);
  return Partition(std::move(parts));
}

MPoly schur_bialternant(const Partition& lambda, int n) {
  std::vector<int> mu = lambda.padded(n);  // throws if too many parts
  for (int j = 0; j < n; ++j) mu[static_cast<size_t>(j)] += n - 1 - j;

  // alternant sum over the symmetric group
  MPoly alt(n);
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  do {
    int inversions = 0;
    for (size_t a = 0; a < w.size(); ++a)
      for (size_t b = a + 1; b < w.size(); ++b)
        if (w[a] > w[b]) ++inversions;
    std::vector<int> e(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) e[static_cast<size_t>(w[static_cast<size_t>(j)])] = mu[static_cast<size_t>(j)];
    alt.add_term(e, QField(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(w.begin(), w.end()));

  // divide out the Vandermonde factor by factor; exactness is guaranteed
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (alt.is_zero()) return alt;
      alt = mpoly_exact_divide_linear(alt, i, j);
    }
  return alt;
}

namespace {

void fill_tableau(const std::vector<int>& shape, int n, int row, int col,
                  std::vector<std::vector<int>>& t, std::vector<int>& content,
                  std::map<std::vector<int>, long>& acc) {
  if (row == static_cast<int>(shape.size())) {
    ++acc[content];
    return;
  }
  int next_row = row, next_col = col + 1;
  if (next_col >= shape[static_cast<size_t>(row)]) {
    ++next_row;
    next_col = 0;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[static_cast<size_t>(row)][static_cast<size_t>(col - 1)]);
  if (row > 0) lo = std::max(lo, t[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] + 1);
  for (int v = lo; v <= n; ++v) {
    t[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
    ++content[static_cast<size_t>(v - 1)];
    fill_tableau(shape, n, next_row, next_col, t, content, acc);
    --content[static_cast<size_t>(v - 1)];
  }
}

std::map<std::vector<int>, long> tableaux_contents(const Partition& lambda, int n,
                                                   const TableauxBounds& bounds) {
  if (lambda.weight() > bounds.max_weight)
    throw BoundExceeded("tableau enumeration bound: |lambda| = " + std::to_string(lambda.weight()) +
                        " > " + std::to_string(bounds.max_weight));
  if (n > bounds.max_vars)
    throw BoundExceeded("tableau enumeration bound: n = " + std::to_string(n) + " > " +
                        std::to_string(bounds.max_vars));
  std::map<std::vector<int>, long> acc;
  const std::vector<int>& shape = lambda.parts();
  if (shape.empty()) {
    acc[std::vector<int>(static_cast<size_t>(n), 0)] = 1;  // empty shape: the constant 1
    return acc;
  }
  std::vector<std::vector<int>> t;
  for (int r : shape) t.emplace_back(static_cast<size_t>(r), 0);
  std::vector<int> content(static_cast<size_t>(n), 0);
  fill_tableau(shape, n, 0, 0, t, content, acc);
  return acc;
}

}  // namespace

MPoly schur_tableaux_oracle(const Partition& lambda, int n, const TableauxBounds& bounds) {
  MPoly p(n);
  for (const auto& [content, count] : tableaux_contents(lambda, n, bounds))
    p.add_term(content, QField(Rational(count)));
  return p;
}

long tableaux_count(const Partition& lambda, int n, const TableauxBounds& bounds) {
  long total = 0;
  for (const auto& [content, count] : tableaux_contents(lambda, n, bounds)) total += count;
  return total;
}

namespace {

void monomials_of_degree(int n, int k, bool squarefree, int from, std::vector<int>& e, MPoly& out) {
  if (k == 0) {
    out.add_term(e, QField(1));
    return;
  }
  if (from >= n) return;
  int cap = squarefree ? 1 : k;
  // remaining variables must be able to absorb the degree
  for (int d = squarefree ? 1 : 0; d <= cap; ++d) {
    e[static_cast<size_t>(from)] = d;
    monomials_of_degree(n, k - d, squarefree, from + 1, e, out);
    e[static_cast<size_t>(from)] = 0;
    if (squarefree) break;  // d in {1} only; d = 0 handled by the recursion below
  }
  if (squarefree) monomials_of_degree(n, k, true, from + 1, e, out);
}

}  // namespace

MPoly complete_homogeneous(int k, int n) {
  if (k < 0) throw IndexOutOfRange("negative degree");
  MPoly p(n);
  std::vector<int> e(static_cast<size_t>(n), 0);
  monomials_of_degree(n, k, false, 0, e, p);
  return p;
}

MPoly elementary(int k, int n) {
  if (k < 0) throw IndexOutOfRange("negative degree");
  MPoly p(n);
  if (k > n) return p;
  std::vector<int> e(static_cast<size_t>(n), 0);
  monomials_of_degree(n, k, true, 0, e, p);
  return p;
}

bool is_symmetric(const MPoly& p) {
  for (int s = 1; s + 1 <= p.nvars(); ++s)
    if (p.with_swapped_vars(s, s + 1) != p) return false;
  return true;
}

std::vector<std::vector<int>> partitions_of(int d, int max_part) {
  std::vector<std::vector<int>> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  // descending first parts give graded-lex descending output order
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, std::max(0, max_part));
  return out;
}

std::map<std::vector<int>, QField, GradedLexDesc> express_in_graded_products(
    const MPoly& p, const std::vector<MPoly>& gens) {
  std::map<std::vector<int>, QField, GradedLexDesc> out;
  if (p.is_zero()) return out;
  const int gmax = static_cast<int>(gens.size());

  // split the target into graded components
  std::map<int, MPoly> comps;
  for (const auto& [e, c] : p.terms()) {
    int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0L));
    auto [it, inserted] = comps.emplace(d, MPoly(p.nvars()));
    it->second.add_term(e, c);
  }

  for (const auto& [d, comp] : comps) {
    if (d == 0) {
      out[std::vector<int>{}] = comp.terms().begin()->second;
      continue;
    }
    if (d < 0) throw SolveFailure("graded component of negative degree");
    auto mus = partitions_of(d, std::min(gmax, d));
    if (mus.empty()) throw SolveFailure("no candidate products for degree " + std::to_string(d));

    std::vector<MPoly> prods;
    prods.reserve(mus.size());
    for (const auto& mu : mus) {
      MPoly prod = MPoly::constant(p.nvars(), QField(1));
      for (int part : mu) prod = prod * gens[static_cast<size_t>(part - 1)];
      prods.push_back(std::move(prod));
    }

    // monomial rows: union over target and candidate products
    std::map<std::vector<int>, size_t, GradedLexDesc> row_of;
    auto index_rows = [&](const MPoly& q) {
      for (const auto& [e, c] : q.terms()) row_of.emplace(e, 0);
    };
    index_rows(comp);
    for (const auto& prod : prods) index_rows(prod);
    size_t idx = 0;
    for (auto& [e, r] : row_of) r = idx++;

    std::vector<std::vector<QField>> a(row_of.size(), std::vector<QField>(mus.size()));
    std::vector<QField> b(row_of.size());
    for (const auto& [e, c] : comp.terms()) b[row_of.at(e)] = c;
    for (size_t col = 0; col < prods.size(); ++col)
      for (const auto& [e, c] : prods[col].terms()) a[row_of.at(e)][col] = c;

    std::vector<QField> x = solve_exact(std::move(a), std::move(b));
    for (size_t col = 0; col < mus.size(); ++col)
      if (!x[col].is_zero()) out[mus[col]] = x[col];
  }
  return out;
}

std::map<std::vector<int>, QField, GradedLexDesc> decompose_h_basis(const MPoly& p) {
  if (p.has_negative_exponent()) throw NotSymmetric("h-basis decomposition needs a polynomial");
  if (!is_symmetric(p)) throw NotSymmetric("h-basis decomposition needs a symmetric polynomial");
  std::vector<MPoly> gens;
  for (int j = 1; j <= p.nvars(); ++j) gens.push_back(complete_homogeneous(j, p.nvars()));
  return express_in_graded_products(p, gens);
}

}  // namespace qcas
