#pragma once

#include <functional>
#include <vector>

#include "stratadiv/taut_expr.hpp"

namespace stratadiv {

/// One applicable rewrite on a monomial. The three rules, oriented
/// left to right:
///   D_ij^2        -> -K_i * D_ij            (i < j)
///   K_j * D_ij    ->  K_i * D_ij            (i < j)
///   D_id * D_jd   ->  D_ij * D_id           (i < j < d)
struct Rewrite {
    enum class Rule { DeltaSquare, HigherPointClass, SharedTop };
    Rule rule;
    int i = 0;
    int j = 0;
    int d = 0; // SharedTop only
};

/// All rewrites applicable to m, in a fixed deterministic order.
std::vector<Rewrite> applicable_rewrites(const Monomial& m);

/// Applies one rewrite; returns the image monomial and the sign picked up
/// (-1 for DeltaSquare, +1 otherwise).
std::pair<Monomial, Rational> apply_rewrite(const Monomial& m, const Rewrite& r);

bool is_reduced(const Monomial& m);
bool is_reduced(const TautExpr& a);

/// Rewrites every monomial to normal form. The normal form is independent
/// of the order in which rules fire; `pick` selects among the applicable
/// rewrites at each step (index into the applicable_rewrites list) and
/// exists so tests can drive randomized orders against the default.
TautExpr reduce(const TautExpr& a);
TautExpr reduce(const TautExpr& a,
                const std::function<std::size_t(std::size_t)>& pick);

/// Restriction to the interior of the moduli space: kappa_0 -> 2g - 2,
/// kappa_1 -> 12 * lambda_1. The input must already be pushed all the way
/// down: any K or D generator is an error, as is kappa_j with j >= 2.
TautExpr substitute_interior(const TautExpr& a, int g);

} // namespace stratadiv
