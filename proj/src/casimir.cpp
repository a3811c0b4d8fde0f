#include "qcas/casimir.hpp"

#include <algorithm>
#include <sstream>

namespace qcas {

namespace {

QField q_minus_qinv_pow(long k) {
  QField d = QField::q_power(1) - QField::q_power(-1);
  return d.pow(k);
}

}  // namespace

Weight::Weight(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw IndexOutOfRange("weight needs at least one coordinate");
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i - 1] < coords_[i])
      throw Error("weight is not dominant: coordinates must be weakly decreasing");
}

long Weight::exp2(int i) const {
  if (i < 1 || i > n()) throw IndexOutOfRange("weight coordinate index out of range");
  return 2L * coords_[static_cast<size_t>(i - 1)] + n() - 2L * i + 1;
}

std::vector<long> Weight::exp2_vector() const {
  std::vector<long> e(static_cast<size_t>(n()));
  for (int i = 1; i <= n(); ++i) e[static_cast<size_t>(i - 1)] = exp2(i);
  return e;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << coords_[i];
  }
  os << ")";
  return os.str();
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

FactoredRational p_ni(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw IndexOutOfRange("p_ni index out of range");
  MPoly num = MPoly::constant(n, QField(1));
  FactoredRational r(std::move(num));
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    MPoly f = MPoly::variable(n, i) * QField::q_power(1);
    f -= MPoly::variable(n, j) * QField::q_power(-1);
    r *= f;
    r.push_den_factor(i, j);
  }
  return r;
}

MPoly g_direct(int n, int k) {
  if (n < 1 || k < 0) throw IndexOutOfRange("g_direct index out of range");
  FactoredRational acc{MPoly(n)};
  for (int i = 1; i <= n; ++i) {
    FactoredRational t = p_ni(n, i);
    t *= MPoly::variable(n, i).pow(k);
    acc = frac_add(acc, t);
  }
  if (!acc.is_polynomial())
    throw CancellationFailure("G(" + std::to_string(n) + "," + std::to_string(k) +
                              "): denominator did not cancel: " + acc.str());
  return acc.to_mpoly();
}

namespace {

MPoly compute_g(int n, int k, GCache& cache) {
  if (n == 1) return MPoly::variable(1, 1).pow(k);
  const QField qdiff = QField::q_power(1) - QField::q_power(-1);
  MPoly r = cache.get(n - 1, k)->embedded(n) * QField::q_power(1);
  for (int i = 0; i < k; ++i)
    r += cache.get(n - 1, i)->embedded(n).times_var_power(n, k - i) * qdiff;
  std::vector<int> top(static_cast<size_t>(n), 0);
  top[static_cast<size_t>(n - 1)] = k;
  r.add_term(top, QField::q_power(-(n - 1)));
  return r;
}

}  // namespace

std::shared_ptr<const MPoly> GCache::get(int n, int k) {
  if (n < 1 || k < 0) throw IndexOutOfRange("G index out of range");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cells_.find({n, k});
    if (it != cells_.end()) return it->second;
  }
  MPoly value = compute_g(n, k, *this);  // may race; results are identical
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cells_.emplace(std::pair<int, int>{n, k},
                                       std::make_shared<const MPoly>(std::move(value)));
  return it->second;
}

GCache& global_g_cache() {
  static GCache cache;
  return cache;
}

MPoly g_recursive(int n, int k, GCache& cache) { return *cache.get(n, k); }

MPoly g_recursive(int n, int k) { return g_recursive(n, k, global_g_cache()); }

namespace {

const MPoly& g_two_term_memo(int n, int k, std::map<std::pair<int, int>, MPoly>& memo) {
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  MPoly value(std::max(n, 1));
  if (n == 1) {
    value = MPoly::variable(1, 1).pow(k);
  } else if (k == 0) {
    // G_{n,0} = q^{n-1} + q^{n-3} + ... + q^{1-n}
    QLaurent c;
    for (int i = 1; i <= n; ++i) c.add_term(n - 2L * i + 1, Rational(1));
    value = MPoly::constant(n, QField(c));
  } else {
    value = g_two_term_memo(n, k - 1, memo).times_var_power(n, 1);
    value += g_two_term_memo(n - 1, k, memo).embedded(n) * QField::q_power(1);
    value -= g_two_term_memo(n - 1, k - 1, memo).embedded(n).times_var_power(n, 1) *
             QField::q_power(-1);
  }
  return memo.emplace(std::pair<int, int>{n, k}, std::move(value)).first->second;
}

}  // namespace

MPoly g_two_term(int n, int k) {
  if (n < 1 || k < 0) throw IndexOutOfRange("g_two_term index out of range");
  std::map<std::pair<int, int>, MPoly> memo;
  return g_two_term_memo(n, k, memo);
}

MPoly gamma_ki(int n, int k, int i) {
  if (n < 1 || i < 1 || i > n) throw IndexOutOfRange("gamma index out of range");
  if (i > k) return MPoly(n);  // zero by convention
  auto hook = hook_partition(HookIndex{k, i, n});
  return schur_bialternant(*hook, n);
}

MPoly g_character(int n, int k) {
  if (n < 1 || k < 1) throw IndexOutOfRange("g_character needs k >= 1");
  MPoly acc(n);
  for (int i = 1; i <= std::min(k, n); ++i) {
    QField c = QField::q_power(n - 2L * i + 1);
    if (i % 2 == 0) c = -c;
    acc += gamma_ki(n, k, i) * c;
  }
  return acc;
}

MPoly hc_image_binomial(int n, int k, GCache& cache) {
  if (n < 1 || k < 0) throw IndexOutOfRange("hc index out of range");
  MPoly sum(n);
  for (int j = 0; j <= k; ++j) {
    QLaurent c = QLaurent::term(Rational(binomial(k, j) * (j % 2 == 0 ? 1 : -1)),
                                static_cast<long>(j) * (1 - n));
    sum += *cache.get(n, j) * QField(c);
  }
  // scale by (q^{-1} - q)^{-k}
  QField scale = (QField::q_power(-1) - QField::q_power(1)).pow(-static_cast<long>(k));
  return sum * scale;
}

MPoly hc_image_binomial(int n, int k) { return hc_image_binomial(n, k, global_g_cache()); }

MPoly hc_image_product(int n, int k) {
  if (n < 1 || k < 0) throw IndexOutOfRange("hc index out of range");
  FactoredRational acc{MPoly(n)};
  for (int i = 1; i <= n; ++i) {
    MPoly base = MPoly::variable(n, i) * QField::q_power(1 - n);
    base -= MPoly::constant(n, QField(1));
    FactoredRational t = p_ni(n, i);
    t *= base.pow(k);
    acc = frac_add(acc, t);
  }
  if (!acc.is_polynomial())
    throw CancellationFailure("C0(" + std::to_string(n) + "," + std::to_string(k) +
                              "): denominator did not cancel: " + acc.str());
  return acc.to_mpoly() * q_minus_qinv_pow(-static_cast<long>(k));
}

namespace {

struct HcCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::shared_ptr<const MPoly>> cells;
};

HcCache& hc_cache() {
  static HcCache cache;
  return cache;
}

}  // namespace

MPoly hc_image(int n, int k) {
  auto& cache = hc_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.cells.find({n, k});
    if (it != cache.cells.end()) return *it->second;
  }
  MPoly binom_route = hc_image_binomial(n, k);
  MPoly product_route = hc_image_product(n, k);
  if (binom_route != product_route)
    throw CancellationFailure("C0(" + std::to_string(n) + "," + std::to_string(k) +
                              "): binomial and product routes disagree");
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.cells.emplace(
      std::pair<int, int>{n, k}, std::make_shared<const MPoly>(std::move(binom_route)));
  return *it->second;
}

QField eigenvalue_direct(const Weight& w, int k) {
  if (k < 0) throw IndexOutOfRange("negative Casimir degree");
  const int n = w.n();
  const std::vector<long> e = w.exp2_vector();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e[static_cast<size_t>(i)] == e[static_cast<size_t>(j)])
        throw DegenerateWeight("equal exponents at " + w.str());

  QField total;
  for (int i = 0; i < n; ++i) {
    QField term = (QField::q_power(e[static_cast<size_t>(i)] + 1 - n) - QField(1)).pow(k);
    if (term.is_zero()) continue;
    term *= QField::q_power(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      QField top = QField::q_power(e[static_cast<size_t>(i)] + 1) -
                   QField::q_power(e[static_cast<size_t>(j)] - 1);
      QField bot = QField::q_power(e[static_cast<size_t>(i)] + 1) -
                   QField::q_power(e[static_cast<size_t>(j)] + 1);
      term *= top / bot;
    }
    total += term;
  }
  return total * q_minus_qinv_pow(-static_cast<long>(k));
}

QField eigenvalue_via_hc(const Weight& w, int k) {
  if (k < 0) throw IndexOutOfRange("negative Casimir degree");
  const int n = w.n();
  const std::vector<long> e = w.exp2_vector();

  QField via_image = hc_image(n, k).substitute_q_powers(e);

  QField sum;
  for (int l = 0; l <= k; ++l) {
    QField gsub = g_recursive(n, l).substitute_q_powers(e);
    QField c = QField::q_power(static_cast<long>(l) * (1 - n)) * QField(Rational(binomial(k, l)));
    if ((k - l) % 2 != 0) c = -c;
    sum += c * gsub;
  }
  QField via_characters = sum * q_minus_qinv_pow(-static_cast<long>(k));

  if (via_image != via_characters)
    throw Error("eigenvalue substitution routes disagree at " + w.str() +
                ", k = " + std::to_string(k));
  return via_image;
}

MPoly CasimirExpression::reconstruct() const {
  MPoly acc(n);
  for (const auto& [mu, c] : terms) {
    MPoly prod = MPoly::constant(n, QField(1));
    for (int part : mu) prod = prod * g_recursive(n, part);
    acc += prod * c;
  }
  return acc;
}

std::string CasimirExpression::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    os << (c.is_laurent() && c.num().is_monomial() ? cs : "(" + cs + ")");
    // run-length encode the multiset as G[k]^m factors
    for (size_t a = 0; a < mu.size();) {
      size_t b = a;
      while (b < mu.size() && mu[b] == mu[a]) ++b;
      os << "*G[" << mu[a] << "]";
      if (b - a > 1) os << "^" << (b - a);
      a = b;
    }
  }
  return os.str();
}

CasimirExpression express_in_casimirs(const MPoly& p) {
  if (p.has_negative_exponent())
    throw NotSymmetric("Casimir expression needs a polynomial; use center_express for Laurent input");
  if (!is_symmetric(p)) throw NotSymmetric("Casimir expression needs a symmetric polynomial");
  const int n = p.nvars();
  std::vector<MPoly> gens;
  gens.reserve(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) gens.push_back(g_recursive(n, j));
  CasimirExpression ex;
  ex.n = n;
  ex.terms = express_in_graded_products(p, gens);
  return ex;
}

std::pair<int, CasimirExpression> center_express(const MPoly& p) {
  if (!is_symmetric(p)) throw NotSymmetric("center expression needs a symmetric element");
  int m = 0;
  for (const auto& [e, c] : p.terms())
    for (int x : e) m = std::max(m, -x);
  MPoly cleared = p.shifted(std::vector<int>(static_cast<size_t>(p.nvars()), m));
  return {m, express_in_casimirs(cleared)};
}

bool generating_function_check(int n, int trunc) {
  if (n < 2) throw IndexOutOfRange("generating function identity needs n >= 2");
  if (trunc < 0) throw IndexOutOfRange("negative truncation order");
  GCache& cache = global_g_cache();

  const QField qdiff = QField::q_power(1) - QField::q_power(-1);
  for (int k = 0; k <= trunc; ++k) {
    // coefficient of t^k on the right-hand side
    MPoly rhs(n);
    for (int i = 0; i <= k; ++i) {
      // geometric expansion of 1/(1 - t L_n): t^i L_n^i
      rhs += cache.get(n - 1, k - i)->embedded(n).times_var_power(n, i) * qdiff;
    }
    rhs += cache.get(n - 1, k)->embedded(n) * QField::q_power(-1);
    std::vector<int> tail(static_cast<size_t>(n), 0);
    tail[static_cast<size_t>(n - 1)] = k;
    rhs.add_term(tail, QField::q_power(-(n - 1)));
    if (rhs != *cache.get(n, k)) return false;
  }
  return true;
}

}  // namespace qcas
