#include "stratadiv/porteous.hpp"

#include "stratadiv/chern.hpp"
#include "stratadiv/errors.hpp"
#include "stratadiv/pushforward.hpp"
#include "stratadiv/rewrite.hpp"

namespace stratadiv {

TautExpr diagonal_chern_F() {
    const Ambient amb{3, 1};
    const TautExpr k1 = TautExpr::gen(amb, Generator::point(1));
    return TautExpr::one(amb) + Rational(10) * k1 + Rational(35) * (k1 * k1);
}

DiagonalTrace diagonal_trace() {
    // The bundle map here has the Hodge bundle as source; only its first
    // Chern class survives the later pushforward, so E enters truncated
    // to degree 1.
    const TautExpr cE = chern_E(1, 3, 1);
    TautExpr c2 = difference_class(diagonal_chern_F(), cE, 2);
    TautExpr pushed = pushforward_last(reduce(c2), 3);
    TautExpr interior = substitute_interior(pushed, 3);
    return {std::move(c2), std::move(pushed), std::move(interior)};
}

TautExpr diagonal_correction() { return diagonal_trace().interior; }

namespace {

Rational lambda1_coefficient(const TautExpr& e) {
    return e.coefficient(Monomial().with(Generator::lambda(1)));
}

} // namespace

LambdaReport lambda_pipeline() {
    const Signature mu(3, {6}, {2});
    LambdaReport rep;

    auto stage = [&rep](const std::string& name, const TautExpr& value) {
        rep.trace.emplace_back(name, value);
    };

    try {
        const TautExpr cF = chern_F(mu);
        stage("chern_F", cF);
        const TautExpr cE = chern_E(2, 3, 3);
        stage("chern_E", cE);
        const TautExpr c3 = difference_class(cF, cE, 3);
        stage("difference_class", c3);
        const TautExpr c3red = reduce(c3);
        stage("reduce", c3red);
        const TautExpr pi2 = pushforward_last(c3red, 3);
        stage("pushforward_2", pi2);
        const TautExpr pi1 = pushforward_last(pi2, 3);
        stage("pushforward_1", pi1);
        const TautExpr interior = substitute_interior(pi1, 3);
        stage("substitute_interior", interior);
        rep.raw = lambda1_coefficient(interior);

        DiagonalTrace diag = diagonal_trace();
        stage("diagonal_c2", diag.c2);
        stage("diagonal_pushforward", diag.pushed);
        stage("diagonal_interior", diag.interior);
        rep.correction = lambda1_coefficient(diag.interior);

        rep.multiplicity = 5; // prong number of the order-4 zero
        rep.interior = rep.raw - rep.multiplicity * rep.correction;
        stage("interior_class",
              rep.interior * TautExpr::gen({3, 0}, Generator::lambda(1)));
    } catch (const Error& e) {
        const std::string where =
            rep.trace.empty() ? std::string("start") : rep.trace.back().first;
        throw Error("lambda_pipeline failed after stage '" + where + "': " + e.what());
    }
    return rep;
}

} // namespace stratadiv
