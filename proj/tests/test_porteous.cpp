#include <doctest.h>

#include <random>

#include "stratadiv/porteous.hpp"
#include "stratadiv/pushforward.hpp"
#include "stratadiv/rewrite.hpp"
#include "stratadiv/taut_expr.hpp"

#include "test_util.hpp"

using namespace stratadiv;
using namespace stratadiv::testutil;

namespace {

const Ambient X2{3, 2};
const Ambient X1{3, 1};
const Ambient M{3, 0};

const TautExpr& stage(const LambdaReport& rep, const std::string& name) {
    for (const auto& [n, e] : rep.trace)
        if (n == name) return e;
    throw std::runtime_error("missing stage " + name);
}

Monomial mono(std::initializer_list<Generator> gens) {
    Monomial m;
    for (const auto& g : gens) m.times(g);
    return m;
}

} // namespace

TEST_CASE("headline numbers") {
    const LambdaReport rep = lambda_pipeline();
    CHECK(rep.raw == 19008);
    CHECK(rep.correction == 380);
    CHECK(rep.multiplicity == 5);
    CHECK(rep.interior == 17108);
    CHECK(rep.interior == rep.raw - rep.multiplicity * rep.correction);
    CHECK(Rational(19008) - Rational(5) * Rational(380) == 17108);
}

TEST_CASE("degree-3 difference class, spot checks against the expansion") {
    const LambdaReport rep = lambda_pipeline();
    const TautExpr& c3 = stage(rep, "difference_class");
    const auto K1 = Generator::point(1), K2 = Generator::point(2);
    const auto D12 = Generator::diagonal(1, 2);
    const auto L1 = Generator::lambda(1), L2 = Generator::lambda(2);
    const auto L3 = Generator::lambda(3);

    CHECK(c3.coefficient(mono({K2, K2, K2})) == 735);
    CHECK(c3.coefficient(mono({K2, K2, D12})) == 1400);
    CHECK(c3.coefficient(mono({K2, D12, D12})) == 840);
    CHECK(c3.coefficient(mono({D12, D12, D12})) == 160);
    CHECK(c3.coefficient(mono({K1, K2, D12})) == 210);
    CHECK(c3.coefficient(mono({K1, K2, K2})) == 175);
    CHECK(c3.coefficient(mono({K1, D12, D12})) == 60);
    CHECK(c3.coefficient(mono({K1, K1, K1})) == 1);
    CHECK(c3.coefficient(mono({L1, K2, K2})) == -175);
    CHECK(c3.coefficient(mono({L1, L1, L1})) == -1);
    CHECK(c3.coefficient(mono({L1, L2})) == 2);
    CHECK(c3.coefficient(mono({L3})) == -1);
}

TEST_CASE("simplified class: the diagonal coefficient") {
    const LambdaReport rep = lambda_pipeline();
    const TautExpr& r = stage(rep, "reduce");
    const auto K1 = Generator::point(1);
    const auto D12 = Generator::diagonal(1, 2);
    const auto L1 = Generator::lambda(1), L2 = Generator::lambda(2);

    CHECK(r.coefficient(mono({K1, K1, D12})) == 882);
    CHECK(r.coefficient(mono({L1, K1, D12})) == -162);
    CHECK(r.coefficient(mono({L1, L1, D12})) == 12);
    CHECK(r.coefficient(mono({L2, D12})) == -12);
    CHECK(r.coefficient(mono({Generator::point(2), Generator::point(2), D12})) == 0);
}

TEST_CASE("pushforward images") {
    const LambdaReport rep = lambda_pipeline();

    const TautExpr l1 = L(X1, 1), l2 = L(X1, 2), k1 = K(X1, 1);
    const TautExpr want2 = Rational(735) * kp(X1, 2) +
                           Rational(175) * (k1 - l1) * kp(X1, 1) +
                           Rational(21) * (k1 * k1 - l1 * k1 + l1 * l1 - l2) * kp(X1, 0) +
                           Rational(882) * k1 * k1 - Rational(162) * l1 * k1 +
                           Rational(12) * l1 * l1 - Rational(12) * l2;
    CHECK(stage(rep, "pushforward_2") == want2);

    const TautExpr want1 = Rational(882) * kp(M, 1) -
                           Rational(162) * kp(M, 0) * L(M, 1) +
                           Rational(175) * kp(M, 0) * kp(M, 1) -
                           Rational(21) * kp(M, 0) * kp(M, 0) * L(M, 1) +
                           Rational(21) * kp(M, 0) * kp(M, 1);
    CHECK(stage(rep, "pushforward_1") == want1);

    CHECK(stage(rep, "substitute_interior") == Rational(19008) * L(M, 1));
    CHECK(stage(rep, "interior_class") == Rational(17108) * L(M, 1));
}

TEST_CASE("diagonal branch") {
    const DiagonalTrace d = diagonal_trace();
    const TautExpr l1 = L(X1, 1), k1 = K(X1, 1);
    CHECK(d.c2 == l1 * l1 - Rational(10) * l1 * k1 + Rational(35) * k1 * k1);
    CHECK(d.pushed == Rational(35) * kp(M, 1) - Rational(10) * L(M, 1) * kp(M, 0));
    CHECK(d.interior == Rational(380) * L(M, 1));
    CHECK(diagonal_correction() == d.interior);
}

TEST_CASE("alternative reduction order gives the same 19008") {
    const LambdaReport rep = lambda_pipeline();
    const TautExpr& c3 = stage(rep, "difference_class");

    std::mt19937 rng(41);
    auto random_pick = [&rng](std::size_t n) -> std::size_t { return rng() % n; };
    for (int trial = 0; trial < 5; ++trial) {
        const TautExpr r = reduce(c3, random_pick);
        CHECK(r == stage(rep, "reduce"));
        const TautExpr down = pushforward_last(pushforward_last(r, 3), 3);
        CHECK(substitute_interior(down, 3) == Rational(19008) * L(M, 1));
    }
}
