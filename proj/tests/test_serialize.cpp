#include "doctest.h"
#include "qcas/serialize.hpp"

using namespace qcas;

TEST_CASE("mpoly json matches the wire contract") {
  MPoly g = g_recursive(2, 1);  // q*(L1 + L2)
  qcas::Json j = to_json(g);
  CHECK(j["n"] == 2);
  REQUIRE(j["terms"].size() == 2);
  // graded-lex descending: L1 before L2
  CHECK(j["terms"][0]["L"] == qcas::Json::array({1, 0}));
  CHECK(j["terms"][1]["L"] == qcas::Json::array({0, 1}));
  CHECK(j["terms"][0]["coeff"]["num"] == qcas::Json::array({{1, "1"}}));
  CHECK(j["terms"][0]["coeff"]["den"] == qcas::Json::array({{0, "1"}}));
}

TEST_CASE("qfield json puts exponents ascending") {
  QField x = QField::q_power(2) + QField::q_power(-3);
  qcas::Json j = to_json(x);
  CHECK(j["num"][0][0] == -3);
  CHECK(j["num"][1][0] == 2);
  CHECK(qfield_from_json(j) == x);
}

TEST_CASE("json round trips are byte identical") {
  for (const MPoly& p : {g_recursive(3, 2), hc_image(2, 2), schur_bialternant(Partition({2, 2}), 3)}) {
    std::string bytes = dump_json(to_json(p));
    MPoly back = mpoly_from_json(qcas::Json::parse(bytes));
    CHECK(back == p);
    CHECK(dump_json(to_json(back)) == bytes);
  }
}

TEST_CASE("casimir expression json") {
  CasimirExpression ex = express_in_casimirs(complete_homogeneous(2, 2));
  qcas::Json j = to_json(ex);
  CHECK(j["n"] == 2);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["mu"] == qcas::Json::array({2}));
  CHECK(j["terms"][1]["mu"] == qcas::Json::array({1, 1}));
  CasimirExpression back = casimir_expression_from_json(j);
  CHECK(back.terms == ex.terms);
}

TEST_CASE("partition json") {
  Partition lambda({3, 1});
  CHECK(to_json(lambda) == qcas::Json::array({3, 1}));
  CHECK(partition_from_json(to_json(lambda)) == lambda);
}

TEST_CASE("text rendering") {
  CHECK(g_recursive(2, 1).str() == "q*(L1 + L2)");
  CHECK(g_recursive(2, 0).str() == "q + q^-1");
  CHECK(complete_homogeneous(2, 2).str() == "L1^2 + L1*L2 + L2^2");
  CHECK((QField::q_power(2)).str() == "q^2");
  MPoly g22 = g_recursive(2, 2);
  CHECK(g22.str() == "q*L1^2 + (q - q^-1)*L1*L2 + q*L2^2");
  CHECK(MPoly(2).str() == "0");
  CHECK(express_in_casimirs(complete_homogeneous(1, 2)).str() == "q^-1*G[1]");
}
