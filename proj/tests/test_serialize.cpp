#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "stratadiv/chern.hpp"
#include "stratadiv/errors.hpp"
#include "stratadiv/serialize.hpp"

#include "test_util.hpp"

using namespace stratadiv;
using namespace stratadiv::testutil;

TEST_CASE("text form") {
    const Ambient X2{3, 2};
    const TautExpr k2 = K(X2, 2), d12 = D(X2, 1, 2);
    const TautExpr e = Rational(735) * k2 * k2 * k2 + Rational(1400) * k2 * k2 * d12 +
                       Rational(840) * k2 * d12 * d12 + Rational(160) * d12 * d12 * d12;
    CHECK(to_text(e) == "735*K2^3 + 1400*K2^2*D12 + 840*K2*D12^2 + 160*D12^3");
    CHECK(to_text(TautExpr::zero(X2)) == "0");
    CHECK(to_text(TautExpr::one(X2)) == "1");
    CHECK(to_text(-L(X2, 1)) == "-L1");
    CHECK(to_text(Rational(3, 2) * kp(X2, 1)) == "3/2*kappa1");
}

TEST_CASE("text round-trip on random expressions") {
    std::mt19937 rng(51);
    for (int i = 0; i < 60; ++i) {
        const Ambient amb{3, 1 + static_cast<int>(rng() % 3)};
        const TautExpr x = random_expr(rng, amb);
        CHECK(parse_expr(to_text(x), amb) == x);
    }
}

TEST_CASE("parser accepts rationals and rejects junk") {
    const Ambient X1{3, 1};
    CHECK(parse_expr("3/2*K1 - 1/2*L1", X1) ==
          Rational(3, 2) * K(X1, 1) - Rational(1, 2) * L(X1, 1));
    CHECK(parse_expr("K1^2*L1", X1) == K(X1, 1) * K(X1, 1) * L(X1, 1));
    CHECK(parse_expr("0", X1) == TautExpr::zero(X1));
    CHECK_THROWS_AS(parse_expr("Q7", X1), InputError);
    CHECK_THROWS_AS(parse_expr("K1 +", X1), InputError);
    CHECK_THROWS_AS(parse_expr("D12", X1), AmbientError); // point 2 not in ambient
}

TEST_CASE("json schema and round-trip") {
    const Ambient X2{3, 2};
    const TautExpr e = Rational(735) * K(X2, 2) * K(X2, 2) * K(X2, 2) + L(X2, 1);
    const nlohmann::json j = to_json(e);
    CHECK(j["ambient"]["g"] == 3);
    CHECK(j["ambient"]["d"] == 2);
    REQUIRE(j["terms"].is_array());
    CHECK(j["terms"].size() == 2);
    for (const auto& t : j["terms"]) {
        CHECK(t["coeff"].is_string());
        CHECK(t["mono"].is_object());
    }
    CHECK(expr_from_json(j) == e);

    std::mt19937 rng(52);
    for (int i = 0; i < 60; ++i) {
        const TautExpr x = random_expr(rng, {3, 3});
        CHECK(expr_from_json(to_json(x)) == x);
    }
}

TEST_CASE("serialization is deterministic") {
    const TautExpr c = chern_F(Signature(3, {6}, {2}));
    CHECK(to_text(c) == to_text(chern_F(Signature(3, {6}, {2}))));
    CHECK(to_json(c).dump() == to_json(chern_F(Signature(3, {6}, {2}))).dump());
}
