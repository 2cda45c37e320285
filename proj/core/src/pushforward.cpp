#include "stratadiv/pushforward.hpp"

#include "stratadiv/errors.hpp"
#include "stratadiv/rewrite.hpp"

namespace stratadiv {

TautExpr pushforward_last(const TautExpr& a, int g) {
    const Ambient amb = a.ambient();
    if (amb.d < 1) throw AmbientError("pushforward_last: no marked point to forget");
    const int d = amb.d;
    TautExpr out({g, d - 1});

    for (const auto& [m, c] : a.terms()) {
        int k_d = 0;        // exponent of K_d
        int delta_count = 0; // number of distinct D_{.,d} factors
        int delta_exp = 0;
        Generator delta = Generator::point(1); // placeholder
        Monomial rest;
        for (const auto& [gen, e] : m.factors()) {
            if (gen.kind() == GenKind::K && gen.index() == d) {
                k_d = e;
            } else if (gen.kind() == GenKind::Delta && gen.second_index() == d) {
                ++delta_count;
                delta_exp = e;
                delta = gen;
            } else {
                rest.times(gen, e);
            }
        }
        if (delta_count > 1 || (delta_count == 1 && (delta_exp > 1 || k_d > 0)))
            throw NotReducedError("pushforward_last: input not in normal form");

        if (delta_count == 1) {
            out.add_term(rest, c); // M * D_id -> M
        } else if (k_d >= 1) {
            rest.times(Generator::kappa(k_d - 1));
            out.add_term(rest, c); // M * K_d^k -> M * kappa_{k-1}
        }
        // No point-d factor: fiber integral of a pulled-back class is 0.
    }
    return out;
}

} // namespace stratadiv
