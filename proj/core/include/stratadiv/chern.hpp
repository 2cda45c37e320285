#pragma once

#include <string>
#include <vector>

#include "stratadiv/taut_expr.hpp"

namespace stratadiv {

/// A zero/pole type (a_1,...,a_n; -b_1,...,-b_p) together with the genus.
/// sum(a) - sum(b) = 2g - 2 is enforced. Marked points are ordered
/// poles-first: w_1..w_p are points 1..p, z_1..z_n are points p+1..p+n.
/// This matches the index convention K_{p+i}, D_{k,p+i} used by chern_F.
class Signature {
public:
    Signature(int g, std::vector<int> zeros, std::vector<int> poles);

    /// Parses "a1,a2;-b1,-b2" (whitespace-insensitive); the genus is
    /// derived from sum(a) - sum(b) = 2g - 2.
    static Signature parse(const std::string& text);

    int genus() const { return g_; }
    const std::vector<int>& zeros() const { return zeros_; }
    const std::vector<int>& poles() const { return poles_; }
    int n() const { return static_cast<int>(zeros_.size()); }
    int p() const { return static_cast<int>(poles_.size()); }
    int m() const { return n() + p(); }

private:
    int g_;
    std::vector<int> zeros_;
    std::vector<int> poles_; // stored positive: pole of order -b is entry b
};

/// c(E_n) = (1 + lambda) * prod_{i=1}^{n-1} (1 - i K_1), truncated at
/// degree d_max. Lives on one marked point. n = 1 gives the Hodge bundle
/// class 1 + lambda_1 + ... + lambda_g.
TautExpr chern_E(int n, int g, int d_max);

/// The full (unreduced) product
///   prod_{i=1}^{n} prod_{j=1}^{a_i} (1 + j K_{p+i} + sum_k b_k D_{k,p+i})
/// on m = n + p marked points. Reduction is the caller's explicit step.
TautExpr chern_F(const Signature& mu);

/// Formal inverse through degree d_max of a class with constant term 1,
/// evaluated via the inversion polynomials P_n in x_k = graded_part(c, k).
TautExpr chern_invert(const TautExpr& c, int d_max);

/// graded_part(cF * chern_invert(cE, k), k): the degeneracy-locus class
/// in the expected-codimension case. Ambients are unified (common genus,
/// the larger point count) before multiplying.
TautExpr difference_class(const TautExpr& cF, const TautExpr& cE, int k);

} // namespace stratadiv
