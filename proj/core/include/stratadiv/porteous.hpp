#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stratadiv/taut_expr.hpp"

namespace stratadiv {

/// Result of the full degeneracy-locus computation for the divisor of
/// differentials of type (6;-2) in genus 3. The interior lambda
/// coefficient is raw - multiplicity * correction.
struct LambdaReport {
    Rational raw;         // lambda coefficient of the pushed-down c3 class
    Rational correction;  // lambda coefficient of the diagonal locus
    int multiplicity = 0; // prong number at the order-4 zero
    Rational interior;
    std::vector<std::pair<std::string, TautExpr>> trace; // stage name -> class
};

/// Intermediates of the diagonal branch.
struct DiagonalTrace {
    TautExpr c2;       // degree-2 difference class on (g=3, d=1)
    TautExpr pushed;   // after forgetting the point
    TautExpr interior; // after kappa substitution: 380 * lambda_1
};

/// The rank-6 bundle on the diagonal, pinned from its known class
/// 1 + 10 K_1 + 35 K_1^2 (degrees above 2 are not needed and not modeled).
TautExpr diagonal_chern_F();

DiagonalTrace diagonal_trace();

/// 380 * lambda_1: the diagonal contribution after interior substitution.
TautExpr diagonal_correction();

/// Runs the whole pipeline for mu = (6;-2), g = 3: chern_F, chern_E,
/// degree-3 difference class, reduce, two pushforwards, interior
/// substitution, minus 5 times the diagonal correction.
LambdaReport lambda_pipeline();

} // namespace stratadiv
