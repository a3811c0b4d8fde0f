#pragma once

#include <vector>

#include "qcas/qfield.hpp"

namespace qcas {

/// Exact solution of the (possibly overdetermined) system A x = b over Q(q).
/// Requires full column rank and consistency; throws SolveFailure otherwise.
std::vector<QField> solve_exact(std::vector<std::vector<QField>> a, std::vector<QField> b);

}  // namespace qcas
