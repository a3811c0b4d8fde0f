#include "qcas/serialize.hpp"

namespace qcas {

namespace {

Json laurent_terms(const QLaurent& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, c.str()});
  return arr;
}

QLaurent laurent_from_terms(const Json& arr) {
  QLaurent p;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 2) throw Error("malformed Laurent term");
    p.add_term(t[0].get<long>(), Rational::parse(t[1].get<std::string>()));
  }
  return p;
}

}  // namespace

Json to_json(const QLaurent& p) { return laurent_terms(p); }

Json to_json(const QField& x) {
  return Json{{"num", laurent_terms(x.num())}, {"den", laurent_terms(x.den())}};
}

Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"L", e}, {"coeff", to_json(c)}});
  return Json{{"n", p.nvars()}, {"terms", terms}};
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const CasimirExpression& ex) {
  Json terms = Json::array();
  for (const auto& [mu, c] : ex.terms) terms.push_back({{"mu", mu}, {"coeff", to_json(c)}});
  return Json{{"n", ex.n}, {"terms", terms}};
}

QLaurent qlaurent_from_json(const Json& j) { return laurent_from_terms(j); }

QField qfield_from_json(const Json& j) {
  return QField(laurent_from_terms(j.at("num")), laurent_from_terms(j.at("den")));
}

MPoly mpoly_from_json(const Json& j) {
  MPoly p(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("L").get<std::vector<int>>(), qfield_from_json(t.at("coeff")));
  return p;
}

Partition partition_from_json(const Json& j) {
  return Partition(j.get<std::vector<int>>());
}

CasimirExpression casimir_expression_from_json(const Json& j) {
  CasimirExpression ex;
  ex.n = j.at("n").get<int>();
  for (const auto& t : j.at("terms"))
    ex.terms[t.at("mu").get<std::vector<int>>()] = qfield_from_json(t.at("coeff"));
  return ex;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcas
