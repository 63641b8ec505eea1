#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// A Poly is immutable in spirit: every operation returns a new value and
// keeps the term map normalized (no zero coefficients are ever stored).
// Terms are kept in descending grevlex order so that display and basis
// enumeration are canonical.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpois/rational.hpp"

namespace gpois {

using Exponents = std::vector<Int>;

inline Int total_degree(const Exponents& e) {
    Int s = 0;
    for (const Int& x : e) s += x;
    return s;
}

// Descending graded reverse lexicographic order: larger total degree first,
// ties broken so that the monomial whose last differing exponent is smaller
// comes first.
struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        Int da = total_degree(a);
        Int db = total_degree(b);
        if (da != db) return da > db;
        for (std::size_t k = a.size(); k-- > 0;) {
            if (a[k] != b[k]) return a[k] < b[k];
        }
        return false;
    }
};

class Poly {
public:
    using TermMap = std::map<Exponents, Rat, GrevlexGreater>;

    explicit Poly(int arity) : arity_(check_arity(arity)) {}

    static Poly zero(int arity) { return Poly(arity); }

    static Poly constant(int arity, const Rat& c) {
        Poly p(arity);
        if (c != 0) p.terms_.emplace(Exponents(arity, 0), c);
        return p;
    }

    static Poly one(int arity) { return constant(arity, 1); }

    // 1-based variable index.
    static Poly variable(int arity, int index) {
        Poly p(arity);
        if (index < 1 || index > arity) throw std::out_of_range("variable index out of range");
        Exponents e(arity, 0);
        e[index - 1] = 1;
        p.terms_.emplace(std::move(e), Rat(1));
        return p;
    }

    static Poly monomial(int arity, Exponents exps, const Rat& c) {
        if (static_cast<int>(exps.size()) != arity)
            throw std::invalid_argument("exponent tuple length differs from arity");
        for (const Int& e : exps)
            if (e < 0) throw std::invalid_argument("negative exponent");
        Poly p(arity);
        if (c != 0) p.terms_.emplace(std::move(exps), c);
        return p;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    // Value of a constant polynomial; throws on anything else.
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    Poly operator-() const {
        Poly r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Poly& operator+=(const Poly& other) {
        check_same_arity(other);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    Poly& operator-=(const Poly& other) {
        check_same_arity(other);
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_arity(b);
        Poly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.arity_);
                for (int k = 0; k < a.arity_; ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    Poly scaled(const Rat& c) const {
        Poly r(arity_);
        if (c == 0) return r;
        for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
        return r;
    }

    friend Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }
    friend Poly operator*(const Poly& p, const Rat& c) { return p.scaled(c); }

    // Formal partial derivative with respect to variable i (1-based).
    Poly partial(int i) const {
        if (i < 1 || i > arity_) throw std::out_of_range("partial: variable index out of range");
        Poly r(arity_);
        for (const auto& [e, c] : terms_) {
            if (e[i - 1] == 0) continue;
            Exponents d = e;
            Rat coeff = c * Rat(e[i - 1]);
            d[i - 1] -= 1;
            r.add_term(d, coeff);
        }
        return r;
    }

    // Coefficient of a monomial (zero when absent).
    Rat coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool operator==(const Poly& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Canonical display, always with indexed variables: "x1^2*x2 - 1/3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = total_degree(e) != 0;
            if (!has_vars || a != 1) {
                out << gpois::to_string(a);
                if (has_vars) out << "*";
            }
            bool first_var = true;
            for (int k = 0; k < arity_; ++k) {
                if (e[k] == 0) continue;
                if (!first_var) out << "*";
                first_var = false;
                out << "x" << (k + 1);
                if (e[k] != 1) out << "^" << gpois::to_string(e[k]);
            }
        }
        return out.str();
    }

private:
    static int check_arity(int arity) {
        if (arity < 1) throw std::invalid_argument("arity must be positive");
        return arity;
    }

    void check_same_arity(const Poly& other) const {
        if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int arity_;
    TermMap terms_;
};

}  // namespace gpois
