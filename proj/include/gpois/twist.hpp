#pragma once

// Graded twists: the semi-Poisson condition, the twisted bracket
// <a,b> = {a,b} + |a| a delta(b) - |b| b delta(a), the modular derivation
// of a twist, and unimodularization.

#include <utility>

#include "gpois/skew.hpp"

namespace gpois {

// d_pi restricted to a derivation: coefficient on d_{ij} is
// {x_i, delta(x_j)} - {x_j, delta(x_i)} - delta({x_i,x_j}).
// delta is a Poisson derivation exactly when this vanishes.
inline SkewKDeriv d_pi1(const PoissonStructure& s, const Derivation& delta) {
    return d_pi(s, skew_from_derivation(delta));
}

inline bool is_poisson_derivation(const PoissonStructure& s, const Derivation& delta) {
    return d_pi1(s, delta).is_zero();
}

// Degree-0 delta is valid twisting data iff E ^ d_pi(delta) vanishes;
// vacuous for n <= 2.
inline bool is_semi_poisson(const PoissonStructure& s, const Derivation& delta) {
    if (delta.degree() != 0)
        throw std::invalid_argument("semi-Poisson test needs a degree-0 derivation");
    if (!s.verify_graded())
        throw std::domain_error("semi-Poisson test needs a graded structure");
    return wedge(skew_from_derivation(euler(s.grading())), d_pi1(s, delta)).is_zero();
}

// New bracket P'_ij = P_ij + w_i x_i delta(x_j) - w_j x_j delta(x_i).
// Rejects twisting data that would not produce a Poisson bracket.
inline PoissonStructure graded_twist(const PoissonStructure& s, const Derivation& delta) {
    if (!(delta.grading() == s.grading()))
        throw std::invalid_argument("twisting derivation lives over a different grading");
    if (!is_semi_poisson(s, delta))
        throw std::domain_error("twist rejected: derivation is not semi-Poisson");
    int n = s.arity();
    PoissonStructure r(s.grading());
    for (int i = 1; i <= n; ++i) {
        Poly xi = Poly::variable(n, i).scaled(Rat(s.grading().weight(i)));
        for (int j = i + 1; j <= n; ++j) {
            Poly xj = Poly::variable(n, j).scaled(Rat(s.grading().weight(j)));
            r.set_bracket(i, j, s.upper(i, j) + xi * delta.image(j) - xj * delta.image(i));
        }
    }
    return r;
}

// Modular derivation of the twist without forming it:
// m + (sum_i w_i) delta - div(delta) E.
inline Derivation twist_modular_prediction(const PoissonStructure& s, const Derivation& delta) {
    s.grading().require_positive("twist_modular_prediction");
    if (delta.degree() != 0)
        throw std::invalid_argument("prediction needs a degree-0 derivation");
    if (!is_semi_poisson(s, delta))
        throw std::domain_error("prediction rejected: derivation is not semi-Poisson");
    Rat div_delta = divergence(delta).constant_value();
    Derivation m = modular(s);
    Derivation scaled_delta = delta.scaled(Rat(s.grading().total()));
    Derivation e = euler(s.grading()).scaled(div_delta);
    return m + scaled_delta - e;
}

struct Unimodularization {
    PoissonStructure structure;  // the unimodular twist
    Derivation delta;            // the twisting derivation -(1/l) m
};

// Twist by -(1/l) m, where l = sum_i w_i > 0. The result is unimodular and
// the original bracket decomposes as pi = pi_unim + (1/l) E ^ m.
inline Unimodularization unimodularize(const PoissonStructure& s) {
    s.grading().require_positive("unimodularize");
    Derivation m = modular(s);
    Derivation delta = m.scaled(make_rat(Int(-1), s.grading().total()));
    PoissonStructure twisted = graded_twist(s, delta);
    return {std::move(twisted), std::move(delta)};
}

}  // namespace gpois
