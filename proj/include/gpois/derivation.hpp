#pragma once

// Degree-homogeneous derivations of k[x1..xn]: the Euler derivation,
// Hamiltonian derivations, divergence, and the modular derivation.

#include <utility>
#include <vector>

#include "gpois/poisson.hpp"

namespace gpois {

class Derivation {
public:
    // images[i-1] = delta(x_i), each zero or homogeneous of degree d + w_i.
    Derivation(WeightedGrading grading, std::vector<Poly> images, Int degree)
        : grading_(std::move(grading)), images_(std::move(images)), degree_(std::move(degree)) {
        if (static_cast<int>(images_.size()) != grading_.arity())
            throw std::invalid_argument("derivation needs one image per generator");
        for (int i = 1; i <= grading_.arity(); ++i) {
            if (images_[i - 1].arity() != grading_.arity())
                throw std::invalid_argument("derivation image arity mismatch");
            Int want = degree_ + grading_.weight(i);
            if (!is_homogeneous_of_degree(images_[i - 1], grading_, want))
                throw std::invalid_argument("derivation image " + std::to_string(i) +
                                            " is not homogeneous of degree " + to_string(want));
        }
    }

    static Derivation zero(const WeightedGrading& g, Int degree = 0) {
        return Derivation(g, std::vector<Poly>(g.arity(), Poly::zero(g.arity())),
                          std::move(degree));
    }

    int arity() const { return grading_.arity(); }
    const WeightedGrading& grading() const { return grading_; }
    const Int& degree() const { return degree_; }
    const std::vector<Poly>& images() const { return images_; }
    const Poly& image(int i) const { return images_.at(i - 1); }  // 1-based

    bool is_zero() const {
        for (const Poly& p : images_)
            if (!p.is_zero()) return false;
        return true;
    }

    // Leibniz extension: delta(f) = sum_i df/dx_i * delta(x_i).
    Poly apply(const Poly& f) const {
        if (f.arity() != arity()) throw std::invalid_argument("arity mismatch");
        Poly r = Poly::zero(arity());
        for (int i = 1; i <= arity(); ++i) {
            if (images_[i - 1].is_zero()) continue;
            r += f.partial(i) * images_[i - 1];
        }
        return r;
    }

    Derivation scaled(const Rat& c) const {
        std::vector<Poly> imgs;
        imgs.reserve(images_.size());
        for (const Poly& p : images_) imgs.push_back(p.scaled(c));
        return Derivation(grading_, std::move(imgs), degree_);
    }

    friend Derivation operator+(const Derivation& a, const Derivation& b) {
        a.check_compatible(b);
        if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero())
            throw std::invalid_argument("cannot add derivations of different degrees");
        std::vector<Poly> imgs;
        imgs.reserve(a.images_.size());
        for (std::size_t k = 0; k < a.images_.size(); ++k)
            imgs.push_back(a.images_[k] + b.images_[k]);
        return Derivation(a.grading_, std::move(imgs), a.is_zero() ? b.degree_ : a.degree_);
    }

    friend Derivation operator-(const Derivation& a, const Derivation& b) {
        return a + b.scaled(Rat(-1));
    }

    bool operator==(const Derivation& other) const {
        return grading_ == other.grading_ && images_ == other.images_;
    }
    bool operator!=(const Derivation& other) const { return !(*this == other); }

private:
    void check_compatible(const Derivation& other) const {
        if (grading_ != other.grading_)
            throw std::invalid_argument("derivations live over different gradings");
    }

    WeightedGrading grading_;
    std::vector<Poly> images_;
    Int degree_;
};

// [d1, d2](x_i) = d1(d2(x_i)) - d2(d1(x_i)); degree adds.
inline Derivation commutator(const Derivation& a, const Derivation& b) {
    if (a.grading() != b.grading())
        throw std::invalid_argument("derivations live over different gradings");
    std::vector<Poly> imgs;
    imgs.reserve(a.arity());
    for (int i = 1; i <= a.arity(); ++i)
        imgs.push_back(a.apply(b.image(i)) - b.apply(a.image(i)));
    return Derivation(a.grading(), std::move(imgs), a.degree() + b.degree());
}

// E(x_i) = w_i x_i; E(f) = (deg f) f on homogeneous f.
inline Derivation euler(const WeightedGrading& g) {
    std::vector<Poly> imgs;
    imgs.reserve(g.arity());
    for (int i = 1; i <= g.arity(); ++i)
        imgs.push_back(Poly::variable(g.arity(), i).scaled(Rat(g.weight(i))));
    return Derivation(g, std::move(imgs), 0);
}

// H_a = {a, -} for homogeneous a; the derivation degree equals |a|.
inline Derivation hamiltonian(const PoissonStructure& s, const Poly& a) {
    DegreeVerdict v = weighted_degree(a, s.grading());
    if (v.kind == DegreeVerdict::Kind::nonhomogeneous)
        throw std::invalid_argument("hamiltonian needs a homogeneous argument");
    Int degree = v.is_homogeneous() ? v.degree : Int(0);
    std::vector<Poly> imgs;
    imgs.reserve(s.arity());
    for (int i = 1; i <= s.arity(); ++i)
        imgs.push_back(s.bracket_eval(a, Poly::variable(s.arity(), i)));
    return Derivation(s.grading(), std::move(imgs), degree);
}

// div(delta) = sum_i d(delta(x_i))/dx_i. Constant for a degree-0
// derivation over positive weights.
inline Poly divergence(const Derivation& delta) {
    Poly r = Poly::zero(delta.arity());
    for (int i = 1; i <= delta.arity(); ++i) r += delta.image(i).partial(i);
    return r;
}

// Modular derivation from the closed form m(x_i) = -sum_k dP_ik/dx_k,
// which agrees with a |-> -div(H_a). Degree 0; requires a graded structure.
inline Derivation modular(const PoissonStructure& s) {
    if (!s.verify_graded())
        throw std::domain_error("modular derivation needs a graded structure");
    std::vector<Poly> imgs;
    imgs.reserve(s.arity());
    for (int i = 1; i <= s.arity(); ++i) {
        Poly m = Poly::zero(s.arity());
        for (int k = 1; k <= s.arity(); ++k) {
            if (k == i) continue;
            m -= s.bracket(i, k).partial(k);
        }
        imgs.push_back(std::move(m));
    }
    return Derivation(s.grading(), std::move(imgs), 0);
}

inline bool is_unimodular(const PoissonStructure& s) { return modular(s).is_zero(); }

}  // namespace gpois
