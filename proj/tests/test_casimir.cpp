#include "doctest.h"
#include "qcas/casimir.hpp"

using namespace qcas;

namespace {

QField qf(long e) { return QField::q_power(e); }

MPoly L(int n, int i) { return MPoly::variable(n, i); }

QLaurent g0_laurent(int n) {
  QLaurent c;
  for (int i = 1; i <= n; ++i) c.add_term(n - 2L * i + 1, Rational(1));
  return c;
}

}  // namespace

TEST_CASE("p_ni shapes") {
  FactoredRational p11 = p_ni(1, 1);
  CHECK(p11.is_polynomial());
  CHECK(p11.to_mpoly() == MPoly::constant(1, QField(1)));

  FactoredRational p21 = p_ni(2, 1);
  CHECK(p21.sign() == 1);
  CHECK(p21.num() == L(2, 1) * qf(1) - L(2, 2) * qf(-1));
  CHECK(p21.den().at({1, 2}) == 1);

  CHECK_THROWS_AS(p_ni(2, 3), IndexOutOfRange);
  CHECK_THROWS_AS(p_ni(2, 0), IndexOutOfRange);
}

TEST_CASE("g closed forms") {
  CHECK(g_direct(2, 0) == MPoly::constant(2, qf(1) + qf(-1)));
  CHECK(g_direct(3, 1) == (L(3, 1) + L(3, 2) + L(3, 3)) * qf(2));
  // q h_2 - q^-1 e_2, frozen from the recursion and hook-character oracles
  MPoly expected22 = complete_homogeneous(2, 2) * qf(1) - elementary(2, 2) * qf(-1);
  CHECK(g_direct(2, 2) == expected22);
  CHECK(g_recursive(2, 2) == expected22);
  CHECK(g_character(2, 2) == expected22);
}

TEST_CASE("g recursion base cases") {
  CHECK(g_recursive(1, 5) == L(1, 1).pow(5));
  CHECK(g_recursive(2, 1) == (L(2, 1) + L(2, 2)) * qf(1));
  CHECK(g_direct(1, 0) == MPoly::constant(1, QField(1)));
  CHECK(g_two_term(1, 4) == L(1, 1).pow(4));
}

TEST_CASE("triple-path equality on a spot grid") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 4; ++k) {
      MPoly direct = g_direct(n, k);
      CHECK(direct == g_recursive(n, k));
      CHECK(direct == g_character(n, k));
      CHECK(direct == g_two_term(n, k));
      CHECK(is_symmetric(direct));
    }
  }
  CHECK(g_direct(3, 2) == g_recursive(3, 2));
  CHECK(g_direct(3, 4) == g_character(3, 4));
}

TEST_CASE("gamma hook pieces") {
  CHECK(gamma_ki(3, 4, 1) == complete_homogeneous(4, 3));
  CHECK(gamma_ki(3, 2, 3).is_zero());  // i > k
  CHECK(gamma_ki(4, 1, 1) == complete_homogeneous(1, 4));
  CHECK_THROWS_AS(gamma_ki(3, 2, 4), IndexOutOfRange);
  // Gamma_{3,2}(3 vars) = s_(2,1)
  CHECK(gamma_ki(3, 3, 2) == schur_bialternant(Partition({2, 1}), 3));
  CHECK(is_symmetric(gamma_ki(3, 3, 2)));
}

TEST_CASE("harish-chandra image small cases") {
  // k = 0 collapses to G_{n,0}
  CHECK(hc_image(3, 0) == MPoly::constant(3, QField(g0_laurent(3))));

  // n = 1, k = 1: (L1 - 1)/(q - q^-1)
  QField inv_qdiff = (qf(1) - qf(-1)).inverse();
  MPoly expect11 = (L(1, 1) - MPoly::constant(1, QField(1))) * inv_qdiff;
  CHECK(hc_image(1, 1) == expect11);

  // n = 2, k = 1: (q + q^-1 - L1 - L2)/(q^-1 - q)
  QField inv_neg = (qf(-1) - qf(1)).inverse();
  MPoly expect21 =
      (MPoly::constant(2, qf(1) + qf(-1)) - L(2, 1) - L(2, 2)) * inv_neg;
  CHECK(hc_image(2, 1) == expect21);

  // binomial and product routes agree independently
  CHECK(hc_image_binomial(3, 2) == hc_image_product(3, 2));
  CHECK(hc_image_binomial(4, 3) == hc_image_product(4, 3));
}

TEST_CASE("eigenvalues: spot values and route coherence") {
  Weight w10({1, 0});
  CHECK(eigenvalue_direct(w10, 1) == qf(2));
  CHECK(eigenvalue_via_hc(w10, 1) == qf(2));

  // trivial weight kills every k >= 1 eigenvalue
  Weight zero2({0, 0});
  for (int k = 1; k <= 3; ++k) CHECK(eigenvalue_direct(zero2, k).is_zero());

  // k = 0 collapses to the constant G_{n,0} regardless of the weight
  Weight w321({3, 2, 1});
  CHECK(eigenvalue_direct(w321, 0) == QField(g0_laurent(3)));

  for (int k = 0; k <= 3; ++k) {
    CHECK(eigenvalue_direct(w321, k) == eigenvalue_via_hc(w321, k));
    Weight neg({1, 0, -2});
    CHECK(eigenvalue_direct(neg, k) == eigenvalue_via_hc(neg, k));
  }
}

TEST_CASE("weight validation and exponents") {
  CHECK_THROWS_AS(Weight({0, 1}), Error);
  Weight w({1, 0});
  CHECK(w.exp2(1) == 3);
  CHECK(w.exp2(2) == -1);
  CHECK(Weight({2, 2, 2}).exp2_vector() == std::vector<long>{6, 4, 2});
}

TEST_CASE("classical limit of the first Casimir") {
  for (const auto& coords : std::vector<std::vector<int>>{
           {1, 0}, {2, 1}, {3, 0, -1}, {0, 0, 0}, {2, 2, 1, -3}}) {
    Weight w(coords);
    long expected = 0;
    for (int c : coords) expected += c;
    CHECK(eigenvalue_direct(w, 1).eval_at(Rational(1)) == Rational(expected));
  }
}

TEST_CASE("express_in_casimirs") {
  // G itself
  CasimirExpression self = express_in_casimirs(g_recursive(3, 2));
  REQUIRE(self.terms.size() == 1);
  CHECK(self.terms.at({2}) == QField(1));

  // h_1 in two variables is q^-1 G_{2,1}
  CasimirExpression h1 = express_in_casimirs(complete_homogeneous(1, 2));
  REQUIRE(h1.terms.size() == 1);
  CHECK(h1.terms.at({1}) == qf(-1));

  // h_2 = (q + q^-1)^-1 (G_{2,2} + q^-3 G_{2,1}^2)
  CasimirExpression h2 = express_in_casimirs(complete_homogeneous(2, 2));
  QField qpq = qf(1) + qf(-1);
  REQUIRE(h2.terms.size() == 2);
  CHECK(h2.terms.at({2}) == QField(1) / qpq);
  CHECK(h2.terms.at({1, 1}) == qf(-3) / qpq);
  CHECK(h2.reconstruct() == complete_homogeneous(2, 2));

  CHECK_THROWS_AS(express_in_casimirs(L(2, 1)), NotSymmetric);
}

TEST_CASE("center_express clears Laurent denominators minimally") {
  // L1...Ln is already polynomial: m = 0 and the e_n expression round-trips
  MPoly prod3 = elementary(3, 3);
  auto [m0, ex0] = center_express(prod3);
  CHECK(m0 == 0);
  CHECK(ex0.reconstruct() == prod3);

  // (L1...Ln)^-1 needs exactly one clearing and expresses the constant 1
  MPoly inv = MPoly::monomial(3, {-1, -1, -1}, QField(1));
  auto [m1, ex1] = center_express(inv);
  CHECK(m1 == 1);
  REQUIRE(ex1.terms.size() == 1);
  CHECK(ex1.terms.at(std::vector<int>{}) == QField(1));

  // a mixed Laurent symmetric element
  MPoly mixed = inv * QField(3) + complete_homogeneous(1, 3);
  auto [m2, ex2] = center_express(mixed);
  CHECK(m2 == 1);
  MPoly cleared = mixed.shifted({1, 1, 1});
  CHECK(ex2.reconstruct() == cleared);
}

TEST_CASE("generating function identity") {
  CHECK(generating_function_check(2, 4));
  CHECK(generating_function_check(3, 3));
  CHECK(generating_function_check(2, 0));
  CHECK_THROWS_AS(generating_function_check(1, 3), IndexOutOfRange);
}

TEST_CASE("binomial helper") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("g cache is shared and consistent across threads") {
  GCache cache;
  MPoly a = g_recursive(4, 3, cache);
  MPoly b = g_recursive(4, 3, cache);
  CHECK(a == b);
  CHECK(a == g_direct(4, 3));
}
