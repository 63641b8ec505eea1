#pragma once

// Poisson structures on k[x1..xn] given by their generator brackets.
//
// Only the upper triangle P_ij = {x_i, x_j}, i < j, is stored;
// antisymmetry is structural. The bracket of two arbitrary polynomials
// is the unique biderivation extension
//
//   {f,g} = sum_{i<j} (df/dx_i dg/dx_j - df/dx_j dg/dx_i) P_ij.

#include <utility>
#include <vector>

#include "gpois/grading.hpp"

namespace gpois {

class PoissonStructure {
public:
    explicit PoissonStructure(WeightedGrading grading)
        : grading_(std::move(grading)),
          upper_(static_cast<std::size_t>(grading_.arity()) * (grading_.arity() - 1) / 2,
                 Poly::zero(grading_.arity())) {}

    int arity() const { return grading_.arity(); }
    const WeightedGrading& grading() const { return grading_; }

    // 1-based, i < j.
    void set_bracket(int i, int j, Poly p) {
        if (p.arity() != arity()) throw std::invalid_argument("bracket arity mismatch");
        upper_.at(upper_index(i, j)) = std::move(p);
    }

    // {x_i, x_j} for any pair, with the sign implied by antisymmetry.
    Poly bracket(int i, int j) const {
        check_index(i);
        check_index(j);
        if (i == j) return Poly::zero(arity());
        if (i < j) return upper_[upper_index(i, j)];
        return -upper_[upper_index(j, i)];
    }

    const Poly& upper(int i, int j) const { return upper_[upper_index(i, j)]; }

    Poly bracket_eval(const Poly& f, const Poly& g) const {
        if (f.arity() != arity() || g.arity() != arity())
            throw std::invalid_argument("arity mismatch");
        int n = arity();
        std::vector<Poly> df, dg;
        df.reserve(n);
        dg.reserve(n);
        for (int i = 1; i <= n; ++i) {
            df.push_back(f.partial(i));
            dg.push_back(g.partial(i));
        }
        Poly result = Poly::zero(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const Poly& p = upper_[upper_index(i, j)];
                if (p.is_zero()) continue;
                result += (df[i - 1] * dg[j - 1] - df[j - 1] * dg[i - 1]) * p;
            }
        }
        return result;
    }

    // {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}, i < j < k.
    Poly jacobiator(int i, int j, int k) const {
        if (!(1 <= i && i < j && j < k && k <= arity()))
            throw std::out_of_range("jacobiator needs 1 <= i < j < k <= n");
        Poly xi = Poly::variable(arity(), i);
        Poly xj = Poly::variable(arity(), j);
        Poly xk = Poly::variable(arity(), k);
        return bracket_eval(xi, bracket(j, k)) + bracket_eval(xj, bracket(k, i)) +
               bracket_eval(xk, bracket(i, j));
    }

    // Jacobi identity on all generator triples; vacuous for n <= 2.
    bool verify_poisson() const {
        int n = arity();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    if (!jacobiator(i, j, k).is_zero()) return false;
        return true;
    }

    // Each P_ij is zero or homogeneous of degree w_i + w_j.
    bool verify_graded() const {
        int n = arity();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Int want = grading_.weight(i) + grading_.weight(j);
                if (!is_homogeneous_of_degree(upper_[upper_index(i, j)], grading_, want))
                    return false;
            }
        return true;
    }

    PoissonStructure scaled(const Rat& xi) const {
        if (xi == 0) throw std::invalid_argument("scale factor must be nonzero");
        PoissonStructure r(grading_);
        for (std::size_t t = 0; t < upper_.size(); ++t) r.upper_[t] = upper_[t].scaled(xi);
        return r;
    }

    bool operator==(const PoissonStructure& other) const {
        return grading_ == other.grading_ && upper_ == other.upper_;
    }
    bool operator!=(const PoissonStructure& other) const { return !(*this == other); }

private:
    void check_index(int i) const {
        if (i < 1 || i > arity()) throw std::out_of_range("generator index out of range");
    }

    std::size_t upper_index(int i, int j) const {
        check_index(i);
        check_index(j);
        if (i >= j) throw std::out_of_range("upper-triangle index needs i < j");
        // Row-major position of (i,j), i<j, in the strict upper triangle.
        std::size_t a = static_cast<std::size_t>(i - 1);
        std::size_t n = static_cast<std::size_t>(arity());
        return a * n - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
    }

    WeightedGrading grading_;
    std::vector<Poly> upper_;
};

// Jacobian structure on three variables: {x,y} = dW/dz, {x,z} = -dW/dy,
// {y,z} = dW/dx for a potential W homogeneous of degree w1+w2+w3. The
// result is always Poisson, graded, and unimodular, and W is central.
inline PoissonStructure from_potential(const Poly& omega, const WeightedGrading& g) {
    if (g.arity() != 3 || omega.arity() != 3)
        throw std::invalid_argument("potential structures need exactly three variables");
    if (!is_homogeneous_of_degree(omega, g, g.total()))
        throw std::invalid_argument(
            "potential must be homogeneous of degree w1+w2+w3 for the structure to be graded");
    PoissonStructure s(g);
    s.set_bracket(1, 2, omega.partial(3));
    s.set_bracket(1, 3, -omega.partial(2));
    s.set_bracket(2, 3, omega.partial(1));
    return s;
}

}  // namespace gpois
