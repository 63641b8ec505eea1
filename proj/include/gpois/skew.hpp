#pragma once

// Skew-symmetric k-derivations of k[x1..xn], their wedge product, and the
// Poisson coboundary d_pi.
//
// An element of level k is stored by its coefficients on the basis
// d_S = d_{i1} ^ ... ^ d_{ik} over strictly increasing index sets S
// (1-based). A nonzero coefficient on d_S is homogeneous of weighted
// degree d + sum_{i in S} w_i, where d is the internal degree.
//
// Sign conventions:
//   d(Q)[F_0..F_q] = sum_i (-1)^i {F_i, Q[.. F_i-hat ..]}
//                  + sum_{i<j} (-1)^{i+j} Q[{F_i,F_j}, .. F_i-hat .. F_j-hat ..]

#include <map>
#include <utility>
#include <vector>

#include "gpois/derivation.hpp"

namespace gpois {

using IndexSet = std::vector<int>;  // strictly increasing, 1-based

namespace detail {

inline void check_index_set(const IndexSet& s, int arity) {
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (s[t] < 1 || s[t] > arity) throw std::out_of_range("index set out of range");
        if (t > 0 && s[t] <= s[t - 1])
            throw std::invalid_argument("index set must be strictly increasing");
    }
}

// All size-k subsets of {1..n} in lexicographic order.
inline std::vector<IndexSet> index_subsets(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    IndexSet current;
    current.reserve(k);
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        int need = k - static_cast<int>(current.size());
        for (int i = next; i + need - 1 <= n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline int permutation_sign(const std::vector<int>& tuple) {
    int inversions = 0;
    for (std::size_t a = 0; a < tuple.size(); ++a)
        for (std::size_t b = a + 1; b < tuple.size(); ++b)
            if (tuple[a] > tuple[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

class SkewKDeriv {
public:
    using CoeffMap = std::map<IndexSet, Poly>;

    SkewKDeriv(WeightedGrading grading, int level, Int degree)
        : grading_(std::move(grading)), level_(level), degree_(std::move(degree)) {
        if (level_ < 0) throw std::invalid_argument("level must be non-negative");
    }

    SkewKDeriv(WeightedGrading grading, int level, Int degree, CoeffMap coeffs)
        : SkewKDeriv(std::move(grading), level, std::move(degree)) {
        for (auto& [s, p] : coeffs) set_coefficient(s, p);
    }

    int arity() const { return grading_.arity(); }
    const WeightedGrading& grading() const { return grading_; }
    int level() const { return level_; }
    const Int& degree() const { return degree_; }
    const CoeffMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void set_coefficient(const IndexSet& s, const Poly& p) {
        if (static_cast<int>(s.size()) != level_)
            throw std::invalid_argument("index set size differs from level");
        detail::check_index_set(s, arity());
        if (p.arity() != arity()) throw std::invalid_argument("coefficient arity mismatch");
        if (p.is_zero()) {
            coeffs_.erase(s);
            return;
        }
        Int want = degree_;
        for (int i : s) want += grading_.weight(i);
        if (!is_homogeneous_of_degree(p, grading_, want))
            throw std::invalid_argument("coefficient is not homogeneous of the declared degree");
        coeffs_.insert_or_assign(s, p);
    }

    // Coefficient on a sorted index set (zero when absent).
    Poly coefficient(const IndexSet& s) const {
        auto it = coeffs_.find(s);
        return it == coeffs_.end() ? Poly::zero(arity()) : it->second;
    }

    // Q[x_{j1},...,x_{jk}] for an arbitrary tuple: skew lookup with sign.
    Poly generator_value(std::vector<int> tuple) const {
        if (static_cast<int>(tuple.size()) != level_)
            throw std::invalid_argument("tuple size differs from level");
        for (std::size_t a = 0; a < tuple.size(); ++a)
            for (std::size_t b = a + 1; b < tuple.size(); ++b)
                if (tuple[a] == tuple[b]) return Poly::zero(arity());
        int sign = detail::permutation_sign(tuple);
        std::sort(tuple.begin(), tuple.end());
        Poly c = coefficient(tuple);
        return sign == 1 ? c : -c;
    }

    // Multi-Leibniz evaluation on k polynomial arguments.
    Poly eval(const std::vector<Poly>& args) const {
        if (static_cast<int>(args.size()) != level_)
            throw std::invalid_argument("wrong number of arguments");
        int n = arity();
        if (level_ == 0) return coefficient({});
        std::vector<std::vector<Poly>> partials;
        partials.reserve(args.size());
        for (const Poly& f : args) {
            if (f.arity() != n) throw std::invalid_argument("argument arity mismatch");
            std::vector<Poly> row;
            row.reserve(n);
            for (int i = 1; i <= n; ++i) row.push_back(f.partial(i));
            partials.push_back(std::move(row));
        }
        Poly result = Poly::zero(n);
        for (const auto& [s, c] : coeffs_) {
            std::vector<int> perm = s;
            do {
                int sign = detail::permutation_sign(perm);
                Poly factor = Poly::constant(n, Rat(sign));
                bool zero = false;
                for (std::size_t t = 0; t < perm.size(); ++t) {
                    const Poly& pf = partials[t][perm[t] - 1];
                    if (pf.is_zero()) {
                        zero = true;
                        break;
                    }
                    factor = factor * pf;
                }
                if (!zero) result += factor * c;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return result;
    }

    SkewKDeriv scaled(const Rat& c) const {
        SkewKDeriv r(grading_, level_, degree_);
        if (c == 0) return r;
        for (const auto& [s, p] : coeffs_) r.coeffs_.emplace(s, p.scaled(c));
        return r;
    }

    friend SkewKDeriv operator+(const SkewKDeriv& a, const SkewKDeriv& b) {
        if (a.grading_ != b.grading_ || a.level_ != b.level_)
            throw std::invalid_argument("cannot add incompatible skew derivations");
        SkewKDeriv r = a;
        for (const auto& [s, p] : b.coeffs_) {
            Poly sum = r.coefficient(s) + p;
            if (sum.is_zero())
                r.coeffs_.erase(s);
            else
                r.coeffs_.insert_or_assign(s, sum);
        }
        return r;
    }

    friend SkewKDeriv operator-(const SkewKDeriv& a, const SkewKDeriv& b) {
        return a + b.scaled(Rat(-1));
    }

    bool operator==(const SkewKDeriv& other) const {
        return grading_ == other.grading_ && level_ == other.level_ &&
               coeffs_ == other.coeffs_;
    }
    bool operator!=(const SkewKDeriv& other) const { return !(*this == other); }

private:
    WeightedGrading grading_;
    int level_;
    Int degree_;
    CoeffMap coeffs_;
};

inline SkewKDeriv skew_from_poly(const WeightedGrading& g, const Poly& f) {
    DegreeVerdict v = weighted_degree(f, g);
    if (v.kind == DegreeVerdict::Kind::nonhomogeneous)
        throw std::invalid_argument("level-0 element must be homogeneous");
    SkewKDeriv q(g, 0, v.is_homogeneous() ? v.degree : Int(0));
    q.set_coefficient({}, f);
    return q;
}

inline SkewKDeriv skew_from_derivation(const Derivation& d) {
    SkewKDeriv q(d.grading(), 1, d.degree());
    for (int i = 1; i <= d.arity(); ++i) q.set_coefficient({i}, d.image(i));
    return q;
}

inline Derivation derivation_from_skew(const SkewKDeriv& q) {
    if (q.level() != 1) throw std::invalid_argument("only level-1 elements are derivations");
    std::vector<Poly> imgs;
    imgs.reserve(q.arity());
    for (int i = 1; i <= q.arity(); ++i) imgs.push_back(q.coefficient({i}));
    return Derivation(q.grading(), std::move(imgs), q.degree());
}

// Wedge product via (p,q)-shuffles. Levels add; the result above level n
// is the zero element with an empty basis.
inline SkewKDeriv wedge(const SkewKDeriv& a, const SkewKDeriv& b) {
    if (a.grading() != b.grading())
        throw std::invalid_argument("wedge of elements over different gradings");
    int n = a.arity();
    int level = a.level() + b.level();
    SkewKDeriv r(a.grading(), level, a.degree() + b.degree());
    if (level > n) return r;
    for (const IndexSet& t : detail::index_subsets(n, level)) {
        Poly coeff = Poly::zero(n);
        for (const IndexSet& pick : detail::index_subsets(level, a.level())) {
            IndexSet s, u;
            s.reserve(a.level());
            u.reserve(b.level());
            std::vector<bool> used(t.size(), false);
            for (int pos : pick) {
                s.push_back(t[pos - 1]);
                used[pos - 1] = true;
            }
            for (std::size_t m = 0; m < t.size(); ++m)
                if (!used[m]) u.push_back(t[m]);
            Poly pa = a.coefficient(s);
            if (pa.is_zero()) continue;
            Poly pb = b.coefficient(u);
            if (pb.is_zero()) continue;
            int inversions = 0;
            for (int sv : s)
                for (int uv : u)
                    if (sv > uv) ++inversions;
            Poly prod = pa * pb;
            coeff += inversions % 2 == 0 ? prod : -prod;
        }
        if (!coeff.is_zero()) r.set_coefficient(t, coeff);
    }
    return r;
}

// E ^ delta as a level-2 element: coefficient w_i x_i delta(x_j) - w_j x_j delta(x_i)
// on d_{ij}.
inline SkewKDeriv wedge_with_euler(const Derivation& delta) {
    return wedge(skew_from_derivation(euler(delta.grading())), skew_from_derivation(delta));
}

// Poisson coboundary. Internal degree is preserved when the structure is
// graded; a non-graded structure makes the result fail its homogeneity
// check. Level-n input maps to the zero element one level up.
inline SkewKDeriv d_pi(const PoissonStructure& s, const SkewKDeriv& q) {
    if (!(q.grading() == s.grading()))
        throw std::invalid_argument("skew derivation lives over a different grading");
    int n = s.arity();
    int level = q.level();
    SkewKDeriv r(s.grading(), level + 1, q.degree());
    if (level >= n) return r;
    for (const IndexSet& j : detail::index_subsets(n, level + 1)) {
        Poly val = Poly::zero(n);
        for (int i = 0; i <= level; ++i) {
            IndexSet rest;
            rest.reserve(level);
            for (int t = 0; t <= level; ++t)
                if (t != i) rest.push_back(j[t]);
            Poly inner = q.coefficient(rest);
            if (inner.is_zero()) continue;
            Poly term = s.bracket_eval(Poly::variable(n, j[i]), inner);
            val += i % 2 == 0 ? term : -term;
        }
        for (int a = 0; a <= level; ++a) {
            for (int b = a + 1; b <= level; ++b) {
                Poly pab = s.bracket(j[a], j[b]);
                if (pab.is_zero()) continue;
                std::vector<Poly> args;
                args.reserve(level);
                args.push_back(pab);
                for (int t = 0; t <= level; ++t)
                    if (t != a && t != b) args.push_back(Poly::variable(n, j[t]));
                Poly term = q.eval(args);
                val += (a + b) % 2 == 0 ? term : -term;
            }
        }
        if (!val.is_zero()) r.set_coefficient(j, val);
    }
    return r;
}

}  // namespace gpois
