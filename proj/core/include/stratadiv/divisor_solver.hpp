#pragma once

#include <string>
#include <vector>

#include "stratadiv/rational.hpp"

namespace stratadiv {

/// Coefficient triple of alpha*lambda + beta*delta0 + gamma*delta1,
/// on the stack or on the coarse space.
struct DivisorClass {
    enum class Space { stack, coarse };

    Rational lambda;
    Rational delta0;
    Rational delta1;
    Space space = Space::stack;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Intersection numbers of (lambda, delta0, delta1) against one test curve.
struct TestCurvePairing {
    std::string name;
    Rational pair_lambda;
    Rational pair_delta0;
    Rational pair_delta1;
    std::string citation;
};

/// The two shipped test curves: A pairs as alpha + 12 beta - gamma, C as
/// -2 gamma.
std::vector<TestCurvePairing> shipped_pairings();

/// Given alpha, solves the square linear system in (beta, gamma) formed by
/// the pairings and their intersection numbers. Exact; SolverError when
/// the system is not 2x2 nonsingular.
DivisorClass solve_class(const Rational& alpha,
                         const std::vector<TestCurvePairing>& pairings,
                         const std::vector<Rational>& intersections);

/// Stack-to-coarse conversion: doubles the delta0 coefficient. Applying it
/// to an already-coarse class is a StateError.
DivisorClass coarse_class(const DivisorClass& c);

/// 56 * (9 lambda - delta0 - 3 delta1): eight Weierstrass points, zero and
/// pole distinct, times the hyperelliptic divisor class.
DivisorClass hyperelliptic_component_class();

struct NonHyperellipticReport {
    DivisorClass computed;    // total stack class minus the hyperelliptic part
    DivisorClass published; // the published value, kept verbatim
    bool discrepancy = false; // the two disagree on delta1; both reported
};

NonHyperellipticReport nonhyperelliptic_sum();

/// The shipped end-to-end result: alpha from the degeneracy-locus pipeline,
/// beta and gamma from the test curves A and C.
DivisorClass full_stack_class();

} // namespace stratadiv
