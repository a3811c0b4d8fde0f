#pragma once

#include <string>

#include "json.hpp"
#include "qcas/casimir.hpp"

namespace qcas {

/// Insertion-ordered JSON so emitted objects carry fields in the documented
/// order and parse/dump is the byte identity.
using Json = nlohmann::ordered_json;

// JSON contracts. MPoly:
//   {"n": int, "terms": [{"L": [e1,...,en], "coeff": <QField>}, ...]}
// with terms in graded-lex descending order. QField:
//   {"num": [[qexp, "p/r"], ...], "den": [[qexp, "p/r"], ...]}
// with q-exponent lists ascending. CasimirExpression:
//   {"n": int, "terms": [{"mu": [j1, j2, ...], "coeff": <QField>}, ...]}
// with mu sorted descending and terms graded-lex ordered on mu.
// Partitions are plain integer arrays.

Json to_json(const QLaurent& p);
Json to_json(const QField& x);
Json to_json(const MPoly& p);
Json to_json(const Partition& lambda);
Json to_json(const CasimirExpression& ex);

QLaurent qlaurent_from_json(const Json& j);
QField qfield_from_json(const Json& j);
MPoly mpoly_from_json(const Json& j);
Partition partition_from_json(const Json& j);
CasimirExpression casimir_expression_from_json(const Json& j);

/// The one JSON rendering used for files and stdout; byte-stable.
std::string dump_json(const Json& j);

}  // namespace qcas
