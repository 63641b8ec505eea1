#pragma once

// Weighted Z-gradings of k[x1..xn] and degree-sliced monomial bases.

#include <vector>

#include "gpois/poly.hpp"

namespace gpois {

class WeightedGrading {
public:
    explicit WeightedGrading(std::vector<Int> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw std::invalid_argument("grading needs at least one weight");
    }

    int arity() const { return static_cast<int>(weights_.size()); }
    const std::vector<Int>& weights() const { return weights_; }
    const Int& weight(int i) const { return weights_.at(i - 1); }  // 1-based

    // Always recomputed from the weights.
    Int total() const {
        Int t = 0;
        for (const Int& w : weights_) t += w;
        return t;
    }

    bool all_positive() const {
        for (const Int& w : weights_)
            if (w <= 0) return false;
        return true;
    }

    void require_positive(const char* operation) const {
        if (!all_positive())
            throw std::domain_error(std::string(operation) + " requires positive weights");
    }

    Int degree_of(const Exponents& e) const {
        Int d = 0;
        for (int k = 0; k < arity(); ++k) d += e[k] * weights_[k];
        return d;
    }

    bool operator==(const WeightedGrading& other) const { return weights_ == other.weights_; }
    bool operator!=(const WeightedGrading& other) const { return !(*this == other); }

private:
    std::vector<Int> weights_;
};

struct DegreeVerdict {
    enum class Kind { zero, homogeneous, nonhomogeneous };
    Kind kind;
    Int degree;  // meaningful only when homogeneous

    bool is_zero() const { return kind == Kind::zero; }
    bool is_homogeneous() const { return kind == Kind::homogeneous; }
};

// The zero polynomial is homogeneous of every degree and gets its own verdict.
inline DegreeVerdict weighted_degree(const Poly& f, const WeightedGrading& g) {
    if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch");
    if (f.is_zero()) return {DegreeVerdict::Kind::zero, 0};
    bool first = true;
    Int d = 0;
    for (const auto& [e, c] : f.terms()) {
        Int de = g.degree_of(e);
        if (first) {
            d = de;
            first = false;
        } else if (de != d) {
            return {DegreeVerdict::Kind::nonhomogeneous, 0};
        }
    }
    return {DegreeVerdict::Kind::homogeneous, d};
}

// True when f is zero or homogeneous of the given degree.
inline bool is_homogeneous_of_degree(const Poly& f, const WeightedGrading& g, const Int& d) {
    DegreeVerdict v = weighted_degree(f, g);
    return v.is_zero() || (v.is_homogeneous() && v.degree == d);
}

namespace detail {

inline void enumerate_basis(const WeightedGrading& g, int var, const Int& remaining,
                            Exponents& current, std::vector<Exponents>& out) {
    int n = g.arity();
    if (var == n) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    if (var == n - 1) {
        // Last slot: exponent is forced if the weight divides the remainder.
        if (remaining % g.weights()[var] == 0) {
            current[var] = remaining / g.weights()[var];
            out.push_back(current);
            current[var] = 0;
        }
        return;
    }
    for (Int e = 0; e * g.weights()[var] <= remaining; ++e) {
        current[var] = e;
        Int rem = remaining - e * g.weights()[var];
        enumerate_basis(g, var + 1, rem, current, out);
    }
    current[var] = 0;
}

}  // namespace detail

// All exponent tuples of weighted degree exactly d, in descending grevlex
// order. Empty for d < 0. Requires positive weights.
inline std::vector<Exponents> monomial_basis(const WeightedGrading& g, const Int& d) {
    g.require_positive("monomial_basis");
    std::vector<Exponents> out;
    if (d < 0) return out;
    Exponents current(g.arity(), 0);
    detail::enumerate_basis(g, 0, d, current, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

// dim A_d for the weighted grading.
inline std::size_t dim_slice(const WeightedGrading& g, const Int& d) {
    return monomial_basis(g, d).size();
}

}  // namespace gpois
