#include "stratadiv/divisor_solver.hpp"

#include "stratadiv/errors.hpp"
#include "stratadiv/msd_enum.hpp"
#include "stratadiv/porteous.hpp"

namespace stratadiv {

std::vector<TestCurvePairing> shipped_pairings() {
    return {
        {"A", 1, 12, -1, "genus-2 curve with an elliptic pencil tail"},
        {"C", 0, 0, -2, "elliptic tail glued at a moving point of a genus-2 curve"},
    };
}

DivisorClass solve_class(const Rational& alpha,
                         const std::vector<TestCurvePairing>& pairings,
                         const std::vector<Rational>& intersections) {
    if (pairings.size() != 2 || intersections.size() != 2)
        throw SolverError("solve_class: need exactly two pairings and intersections");
    for (const auto& p : pairings)
        if (p.pair_lambda == 0 && p.pair_delta0 == 0 && p.pair_delta1 == 0)
            throw InputError("solve_class: pairing '" + p.name + "' is identically zero");

    // p.l * alpha + p.d0 * beta + p.d1 * gamma = I for each curve.
    const Rational a0 = pairings[0].pair_delta0, b0 = pairings[0].pair_delta1;
    const Rational a1 = pairings[1].pair_delta0, b1 = pairings[1].pair_delta1;
    const Rational r0 = intersections[0] - pairings[0].pair_lambda * alpha;
    const Rational r1 = intersections[1] - pairings[1].pair_lambda * alpha;
    const Rational det = a0 * b1 - a1 * b0;
    if (det == 0)
        throw SolverError("solve_class: singular system in (beta, gamma)");
    DivisorClass out;
    out.lambda = alpha;
    out.delta0 = (r0 * b1 - r1 * b0) / det;
    out.delta1 = (a0 * r1 - a1 * r0) / det;
    out.space = DivisorClass::Space::stack;
    return out;
}

DivisorClass coarse_class(const DivisorClass& c) {
    if (c.space == DivisorClass::Space::coarse)
        throw StateError("coarse_class: class is already on the coarse space");
    return {c.lambda, 2 * c.delta0, c.delta1, DivisorClass::Space::coarse};
}

DivisorClass hyperelliptic_component_class() {
    // 8 Weierstrass points; ordered (zero, pole) pairs of distinct ones.
    const Rational factor = 8 * 7;
    return {factor * 9, factor * -1, factor * -3, DivisorClass::Space::stack};
}

DivisorClass full_stack_class() {
    const Rational alpha = lambda_pipeline().interior;
    const Rational a_int = Rational(intersection_with_A().total);
    const Rational c_int = Rational(intersection_with_C().total);
    return solve_class(alpha, shipped_pairings(), {a_int, c_int});
}

NonHyperellipticReport nonhyperelliptic_sum() {
    const DivisorClass total = full_stack_class();
    const DivisorClass hyp = hyperelliptic_component_class();
    NonHyperellipticReport rep;
    rep.computed = {total.lambda - hyp.lambda, total.delta0 - hyp.delta0,
                    total.delta1 - hyp.delta1, DivisorClass::Space::stack};
    // Published value, which disagrees with the subtraction on delta1.
    rep.published = {16604, -1736, -3750, DivisorClass::Space::stack};
    rep.discrepancy = !(rep.computed == rep.published);
    return rep;
}

} // namespace stratadiv
