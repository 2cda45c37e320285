#pragma once

#include <map>
#include <string>

#include "stratadiv/generator.hpp"
#include "stratadiv/rational.hpp"

namespace stratadiv {

/// The fibered power the expression lives on: genus g of the fiber and
/// number d of marked points (factors of the power).
struct Ambient {
    int g = 0;
    int d = 0;

    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Exact graded polynomial in the generators, with rational coefficients.
/// Immutable in spirit: every operation returns a new value. Zero is the
/// empty term map; the ambient is retained on zero.
///
/// lambda_i with i > g is identically zero (the Hodge bundle has rank g)
/// and such terms are dropped on insertion. Point and diagonal indices
/// beyond d are construction errors.
class TautExpr {
public:
    explicit TautExpr(Ambient a) : ambient_(a) {}

    static TautExpr zero(Ambient a) { return TautExpr(a); }

    static TautExpr constant(Ambient a, const Rational& c) {
        TautExpr e(a);
        e.add_term(Monomial::one(), c);
        return e;
    }

    static TautExpr one(Ambient a) { return constant(a, 1); }

    static TautExpr gen(Ambient a, const Generator& g) {
        TautExpr e(a);
        e.add_term(Monomial().with(g), 1);
        return e;
    }

    Ambient ambient() const { return ambient_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Accumulates c * m, validating m against the ambient. Drops the term
    /// if the coefficient cancels or if m contains a lambda beyond rank g.
    void add_term(const Monomial& m, const Rational& c);

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int max_degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }

    /// Terms of total degree exactly k.
    TautExpr graded_part(int k) const;

    /// Terms of total degree at most k.
    TautExpr truncated(int k) const;

    /// The same expression on a larger fibered power (d may only grow,
    /// g must match). Used when combining classes built on different
    /// numbers of marked points.
    TautExpr promoted(Ambient a) const;

    friend TautExpr operator+(const TautExpr& a, const TautExpr& b);
    friend TautExpr operator-(const TautExpr& a, const TautExpr& b);
    friend TautExpr operator-(const TautExpr& a);
    friend TautExpr operator*(const TautExpr& a, const TautExpr& b);
    friend TautExpr operator*(const Rational& c, const TautExpr& a);

    friend bool operator==(const TautExpr&, const TautExpr&) = default;

private:
    Ambient ambient_;
    std::map<Monomial, Rational> terms_;
};

inline TautExpr add(const TautExpr& a, const TautExpr& b) { return a + b; }
inline TautExpr mul(const TautExpr& a, const TautExpr& b) { return a * b; }
inline TautExpr graded_part(const TautExpr& a, int k) { return a.graded_part(k); }

} // namespace stratadiv
