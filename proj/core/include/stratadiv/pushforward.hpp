#pragma once

#include "stratadiv/taut_expr.hpp"

namespace stratadiv {

/// Forgets the last marked point d. Per monomial of a reduce-normal input:
///   M * D_id    -> M
///   M * K_d^k   -> M * kappa_{k-1}
///   M (no point-d factor) -> 0
/// The result lives on (g, d-1). kappa factors multiply formally and are
/// not simplified. Monomials that still carry D_id*D_jd or D_id*K_d are
/// rejected with NotReducedError: reduce must run first, and failing loudly
/// catches pipeline-ordering bugs.
TautExpr pushforward_last(const TautExpr& a, int g);

} // namespace stratadiv
