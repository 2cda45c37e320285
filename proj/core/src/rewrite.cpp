#include "stratadiv/rewrite.hpp"

#include <utility>

#include "stratadiv/errors.hpp"

namespace stratadiv {

std::vector<Rewrite> applicable_rewrites(const Monomial& m) {
    std::vector<Rewrite> out;
    const auto& fs = m.factors();
    for (const auto& [g, e] : fs) {
        if (g.kind() != GenKind::Delta) continue;
        const int i = g.index(), j = g.second_index();
        if (e >= 2)
            out.push_back({Rewrite::Rule::DeltaSquare, i, j, 0});
        if (m.exponent(Generator::point(j)) >= 1)
            out.push_back({Rewrite::Rule::HigherPointClass, i, j, 0});
        // Another diagonal sharing the upper endpoint j, with lower index > i.
        for (const auto& [h, eh] : fs) {
            if (h.kind() != GenKind::Delta) continue;
            if (h.second_index() == j && h.index() > i)
                out.push_back({Rewrite::Rule::SharedTop, i, h.index(), j});
        }
    }
    return out;
}

std::pair<Monomial, Rational> apply_rewrite(const Monomial& m, const Rewrite& r) {
    Monomial out = m;
    switch (r.rule) {
        case Rewrite::Rule::DeltaSquare:
            // D_ij^2 -> -K_i D_ij
            out.divide(Generator::diagonal(r.i, r.j));
            out.times(Generator::point(r.i));
            return {out, Rational(-1)};
        case Rewrite::Rule::HigherPointClass:
            // K_j D_ij -> K_i D_ij
            out.divide(Generator::point(r.j));
            out.times(Generator::point(r.i));
            return {out, Rational(1)};
        case Rewrite::Rule::SharedTop:
            // D_id D_jd -> D_ij D_id
            out.divide(Generator::diagonal(r.j, r.d));
            out.times(Generator::diagonal(r.i, r.j));
            return {out, Rational(1)};
    }
    throw InputError("unknown rewrite rule");
}

bool is_reduced(const Monomial& m) { return applicable_rewrites(m).empty(); }

bool is_reduced(const TautExpr& a) {
    for (const auto& [m, c] : a.terms())
        if (!is_reduced(m)) return false;
    return true;
}

TautExpr reduce(const TautExpr& a,
                const std::function<std::size_t(std::size_t)>& pick) {
    TautExpr out(a.ambient());
    // Each rule sends one monomial to one monomial, so reduction is a
    // per-term walk to fixpoint.
    std::vector<std::pair<Monomial, Rational>> work(a.terms().begin(), a.terms().end());
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        auto rs = applicable_rewrites(m);
        if (rs.empty()) {
            out.add_term(m, c);
            continue;
        }
        const auto& r = rs[pick(rs.size()) % rs.size()];
        auto [m2, sign] = apply_rewrite(m, r);
        work.emplace_back(std::move(m2), c * sign);
    }
    return out;
}

TautExpr reduce(const TautExpr& a) {
    return reduce(a, [](std::size_t) { return std::size_t{0}; });
}

TautExpr substitute_interior(const TautExpr& a, int g) {
    if (g < 0) throw InputError("negative genus");
    TautExpr out(a.ambient());
    const Rational kappa0(2 * g - 2);
    for (const auto& [m, c] : a.terms()) {
        Rational coeff = c;
        Monomial rest;
        for (const auto& [gen, e] : m.factors()) {
            switch (gen.kind()) {
                case GenKind::K:
                case GenKind::Delta:
                    throw NotPushedForwardError(
                        "substitute_interior: point class " + gen.name() +
                        " remains; push forward first");
                case GenKind::Lambda:
                    rest.times(gen, e);
                    break;
                case GenKind::Kappa:
                    if (gen.index() == 0) {
                        for (int t = 0; t < e; ++t) coeff *= kappa0;
                    } else if (gen.index() == 1) {
                        for (int t = 0; t < e; ++t) coeff *= 12;
                        rest.times(Generator::lambda(1), e);
                    } else {
                        throw InputError(
                            "substitute_interior: no interior value for " + gen.name());
                    }
                    break;
            }
        }
        out.add_term(rest, coeff);
    }
    return out;
}

} // namespace stratadiv
