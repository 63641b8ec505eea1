#pragma once

// Shared helpers for the test suite: seeded random generators and a tiny
// independent power-series expander used as the oracle for Hilbert-series
// windows.

#include <random>
#include <vector>

#include "gpois/gpois.hpp"

namespace testsupport {

using namespace gpois;

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed5eedULL);
    return engine;
}

inline Rat random_rat(long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 2);
    return make_rat(num(rng()), den(rng()));
}

inline Rat random_nonzero_rat(long lo = -3, long hi = 3) {
    for (;;) {
        Rat q = random_rat(lo, hi);
        if (q != 0) return q;
    }
}

// Random polynomial supported on the degree-d slice (zero when the slice is
// empty).
inline Poly random_homogeneous(const WeightedGrading& g, const Int& d) {
    Poly p = Poly::zero(g.arity());
    for (const Exponents& e : monomial_basis(g, d))
        p += Poly::monomial(g.arity(), e, random_rat());
    return p;
}

// Random inhomogeneous polynomial with terms up to total degree 3.
inline Poly random_poly(int arity) {
    WeightedGrading g(std::vector<Int>(arity, 1));
    Poly p = Poly::zero(arity);
    for (int d = 0; d <= 3; ++d) {
        for (const Exponents& e : monomial_basis(g, d)) {
            std::uniform_int_distribution<int> keep(0, 2);
            if (keep(rng()) == 0) p += Poly::monomial(arity, e, random_rat());
        }
    }
    return p;
}

// Random rational-combination of a derivation basis, nonzero when possible.
inline Derivation random_combination(const std::vector<Derivation>& basis,
                                     const WeightedGrading& g, const Int& degree) {
    Derivation sum = Derivation::zero(g, degree);
    for (const Derivation& b : basis) sum = sum + b.scaled(random_rat());
    if (sum.is_zero() && !basis.empty()) sum = basis.front();
    return sum;
}

// Coefficients of numerator / (1 - t^period) from t^0 to t^N, where the
// numerator is given by its coefficient list starting at t^0.
inline std::vector<long> geometric_window(const std::vector<long>& numerator, int period,
                                          int upto) {
    std::vector<long> out(upto + 1, 0);
    for (int d = 0; d <= upto; ++d) {
        long acc = 0;
        for (int k = d; k >= 0; k -= period)
            if (k < static_cast<int>(numerator.size())) acc += numerator[k];
        out[d] = acc;
    }
    return out;
}

// (1+t)^3 / (1-t^3) from t^0 to t^N.
inline std::vector<long> cube_over_one_minus_t3(int upto) {
    return geometric_window({1, 3, 3, 1}, 3, upto);
}

// 1 / (1-t^3) from t^0 to t^N.
inline std::vector<long> one_over_one_minus_t3(int upto) {
    return geometric_window({1}, 3, upto);
}

}  // namespace testsupport
