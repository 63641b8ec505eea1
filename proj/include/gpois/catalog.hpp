#pragma once

// Built-in named structures with their documented invariants. Every entry
// passes verify_poisson and verify_graded at load time; parameterized
// entries validate their genericity conditions on lookup.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpois/parse.hpp"
#include "gpois/twist.hpp"

namespace gpois {

// Golden graded-dimension windows recorded for the irreducible-potential
// quadratic structures.
struct ExpectedWindows {
    std::vector<long> ph0_from0;   // PH^0 at d = 0..6
    std::vector<long> ph1_from0;   // PH^1 at d = 0..6
    std::vector<long> ph2_fromm2;  // PH^2 at d = -2..3
    std::vector<long> ph3_fromm3;  // PH^3 at d = -3..3
    std::vector<long> h0_from0;    // PH_0 homology at d = 0..6
};

struct CatalogEntry {
    std::string name;  // resolved name, e.g. "hesse(lambda=1)"
    PoissonStructure structure;
    std::optional<long> expected_rgt;
    std::optional<bool> expected_unimodular;
    std::optional<ExpectedWindows> expected_windows;
    std::map<std::string, Derivation> derivations;  // named companions, if any
    std::string description;
};

using CatalogParams = std::map<std::string, std::string>;

namespace detail {

inline Rat param_rat(const CatalogParams& params, const std::string& key, const Rat& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : parse_rat(it->second);
}

inline long param_long(const CatalogParams& params, const std::string& key, long fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    Rat q = parse_rat(it->second);
    if (q.get_den() != 1) throw std::invalid_argument("parameter " + key + " must be an integer");
    return static_cast<long>(q.get_num().get_si());
}

inline ExpectedWindows irreducible_potential_windows() {
    return {{1, 0, 0, 1, 0, 0, 1},
            {1, 0, 0, 1, 0, 0, 1},
            {3, 3, 2, 3, 3, 2},
            {1, 3, 3, 2, 3, 3, 2},
            {1, 3, 3, 2, 3, 3, 2}};
}

inline CatalogEntry potential_entry(const std::string& name, const std::string& omega_text,
                                    long expected_rgt, const std::string& description,
                                    bool with_windows = false) {
    WeightedGrading g({1, 1, 1});
    CatalogEntry e{name,
                   from_potential(poly_parse(omega_text, 3), g),
                   expected_rgt,
                   true,
                   std::nullopt,
                   {},
                   description};
    if (with_windows) e.expected_windows = irreducible_potential_windows();
    return e;
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::string>> catalog_names() {
    return {
        {"trivial3", "zero bracket on k[x,y,z], weights (1,1,1)"},
        {"cubic_x3", "potential x^3"},
        {"cubic_x2y", "potential x^2*y"},
        {"cubic_xyz", "potential x*y*z"},
        {"cubic_xy_x_plus_y", "potential x*y*(x+y)"},
        {"cubic_xyz_x3", "potential x*y*z + x^3"},
        {"cubic_xy2_x2z", "potential x*y^2 + x^2*z"},
        {"cubic_x3_y2z", "potential x^3 + y^2*z"},
        {"cubic_x3_x2z_y2z", "potential x^3 + x^2*z + y^2*z"},
        {"hesse", "Hesse pencil potential (x^3+y^3+z^3)/3 + lambda*x*y*z; needs lambda^3 != -1"},
        {"sextic_weighted",
         "potential x^6 + y^3 + z^2 + lambda*x*y*z under weights (1,2,3)"},
        {"rank1", "{x1,x2} = x1^n on k[x1,x2] with weights (1, n-1)"},
        {"ex2_6", "{x,y} = x^2 on k[x,y] with companion derivations phi, f, g"},
        {"log_canonical", "bracket {x_i,x_j} = p_ij x_i x_j, weights all 1"},
        {"weyl_twist",
         "twisted symplectic bracket on k[x_1..x_n, y_1..y_n], weights (1,..,1,-1,..,-1)"},
    };
}

namespace detail {

inline CatalogEntry catalog_build(const std::string& name, const CatalogParams& params) {
    using detail::param_long;
    using detail::param_rat;

    if (name == "trivial3") {
        WeightedGrading g({1, 1, 1});
        return {name, PoissonStructure(g), -8, true, std::nullopt, {},
                "zero bracket on three quadratic generators"};
    }
    if (name == "cubic_x3")
        return detail::potential_entry(name, "x^3", -5, "potential x^3");
    if (name == "cubic_x2y")
        return detail::potential_entry(name, "x^2*y", -3, "potential x^2*y");
    if (name == "cubic_xyz")
        return detail::potential_entry(name, "x*y*z", -2, "potential x*y*z");
    if (name == "cubic_xy_x_plus_y")
        return detail::potential_entry(name, "x^2*y + x*y^2", -2, "potential x*y*(x+y)");
    if (name == "cubic_xyz_x3")
        return detail::potential_entry(name, "x*y*z + x^3", -1, "potential x*y*z + x^3");
    if (name == "cubic_xy2_x2z")
        return detail::potential_entry(name, "x*y^2 + x^2*z", -1, "potential x*y^2 + x^2*z");
    if (name == "cubic_x3_y2z")
        return detail::potential_entry(name, "x^3 + y^2*z", 0, "potential x^3 + y^2*z", true);
    if (name == "cubic_x3_x2z_y2z")
        return detail::potential_entry(name, "x^3 + x^2*z + y^2*z", 0,
                                       "potential x^3 + x^2*z + y^2*z", true);

    if (name == "hesse") {
        Rat lambda = param_rat(params, "lambda", Rat(0));
        if (lambda * lambda * lambda == -1)
            throw std::invalid_argument("hesse needs lambda^3 != -1");
        Poly omega = poly_parse("1/3*x^3 + 1/3*y^3 + 1/3*z^3", 3) +
                     poly_parse("x*y*z", 3).scaled(lambda);
        WeightedGrading g({1, 1, 1});
        CatalogEntry e{"hesse(lambda=" + to_string(lambda) + ")",
                       from_potential(omega, g),
                       0,
                       true,
                       detail::irreducible_potential_windows(),
                       {},
                       "Hesse pencil potential"};
        return e;
    }

    if (name == "sextic_weighted") {
        Rat lambda = param_rat(params, "lambda", Rat(0));
        Poly omega =
            poly_parse("x^6 + y^3 + z^2", 3) + poly_parse("x*y*z", 3).scaled(lambda);
        WeightedGrading g({1, 2, 3});
        CatalogEntry e{"sextic_weighted(lambda=" + to_string(lambda) + ")",
                       from_potential(omega, g),
                       std::nullopt,
                       true,
                       std::nullopt,
                       {},
                       "weighted sextic potential"};
        // The rigidity expectation is recorded only for the two audited
        // parameter values.
        if (lambda == 0 || lambda == 1) e.expected_rgt = 0;
        return e;
    }

    if (name == "rank1") {
        long n = param_long(params, "n", 2);
        if (n < 0) throw std::invalid_argument("rank1 needs n >= 0");
        // Weights (1, n-1) make {x1,x2} = x1^n homogeneous of degree n.
        WeightedGrading g({Int(1), Int(n - 1)});
        PoissonStructure s(g);
        Exponents e(2, 0);
        e[0] = n;
        s.set_bracket(1, 2, Poly::monomial(2, std::move(e), 1));
        return {"rank1(n=" + std::to_string(n) + ")",
                std::move(s),
                std::nullopt,
                n >= 1 ? std::optional<bool>(false) : std::optional<bool>(true),
                std::nullopt,
                {},
                "single bracket {x1,x2} = x1^n"};
    }

    if (name == "ex2_6") {
        WeightedGrading g({1, 1});
        PoissonStructure s(g);
        s.set_bracket(1, 2, poly_parse("x^2", 2));
        std::map<std::string, Derivation> ders;
        ders.emplace("phi", Derivation(g, {poly_parse("x", 2).scaled(Rat(-1)),
                                           poly_parse("y - x", 2)},
                                       0));
        ders.emplace("f", Derivation(g, {Poly::zero(2), poly_parse("x", 2).scaled(Rat(-1))}, 0));
        ders.emplace("g", Derivation(g, {poly_parse("x", 2).scaled(Rat(-1)),
                                         poly_parse("y", 2)},
                                     0));
        return {"ex2_6", std::move(s), std::nullopt, false, std::nullopt, std::move(ders),
                "two-variable bracket x^2 with its twist chain derivations"};
    }

    if (name == "log_canonical") {
        long n = param_long(params, "n", 3);
        if (n < 2) throw std::invalid_argument("log_canonical needs n >= 2");
        WeightedGrading g(std::vector<Int>(n, 1));
        PoissonStructure s(g);
        std::string resolved = "log_canonical(n=" + std::to_string(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                std::string key = "p" + std::to_string(i) + std::to_string(j);
                Rat p = param_rat(params, key, Rat(1));
                Poly b = Poly::variable(n, i) * Poly::variable(n, j);
                s.set_bracket(i, j, b.scaled(p));
                resolved += "," + key + "=" + to_string(p);
            }
        }
        resolved += ")";
        return {std::move(resolved), std::move(s), std::nullopt, std::nullopt, std::nullopt, {},
                "log-canonical bracket"};
    }

    if (name == "weyl_twist") {
        long n = param_long(params, "n", 2);
        if (n < 1) throw std::invalid_argument("weyl_twist needs n >= 1");
        std::vector<Int> weights(2 * n, 1);
        for (long i = 0; i < n; ++i) weights[n + i] = -1;
        WeightedGrading g(std::move(weights));
        // Default M is the size-n nilpotent Jordan block.
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        for (long i = 0; i + 1 < n; ++i) m[i][i + 1] = 1;
        std::string resolved = "weyl_twist(n=" + std::to_string(n);
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= n; ++j) {
                std::string key = "m" + std::to_string(i) + std::to_string(j);
                auto it = params.find(key);
                if (it != params.end()) m[i - 1][j - 1] = parse_rat(it->second);
                if (m[i - 1][j - 1] != 0)
                    resolved += "," + key + "=" + to_string(m[i - 1][j - 1]);
            }
        resolved += ")";
        int arity = static_cast<int>(2 * n);
        // Untwisted symplectic bracket {x_i, y_i} = 1, twisted by the matrix
        // derivation x_i -> -sum_j m_ij x_j, y_i -> sum_j m_ji y_j. The mixed
        // brackets come out as delta_ij + x_i sum_s m_sj y_s - y_j sum_s m_is x_s,
        // and the twist supplies the matching x-x and y-y corrections.
        PoissonStructure weyl(g);
        for (long i = 1; i <= n; ++i)
            weyl.set_bracket(static_cast<int>(i), static_cast<int>(n + i), Poly::one(arity));
        std::vector<Poly> imgs(2 * n, Poly::zero(arity));
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= n; ++j) {
                if (m[i - 1][j - 1] != 0)
                    imgs[i - 1] -=
                        Poly::variable(arity, static_cast<int>(j)).scaled(m[i - 1][j - 1]);
                if (m[j - 1][i - 1] != 0)
                    imgs[n + i - 1] +=
                        Poly::variable(arity, static_cast<int>(n + j)).scaled(m[j - 1][i - 1]);
            }
        PoissonStructure s = graded_twist(weyl, Derivation(g, std::move(imgs), 0));
        return {std::move(resolved), std::move(s), std::nullopt, std::nullopt, std::nullopt, {},
                "graded twist of the symplectic bracket by a matrix derivation"};
    }

    throw std::invalid_argument("unknown catalog entry: " + name);
}

}  // namespace detail

inline CatalogEntry catalog_get(const std::string& name, const CatalogParams& params = {}) {
    CatalogEntry e = detail::catalog_build(name, params);
    if (!e.structure.verify_graded() || !e.structure.verify_poisson())
        throw std::logic_error("catalog entry failed load-time verification: " + e.name);
    return e;
}

// Documented rigidity values for the quadratic normal forms and the
// weighted sextic.
inline long expected_rgt(const std::string& name) {
    static const std::map<std::string, long> table = {
        {"trivial3", -8},        {"cubic_x3", -5},
        {"cubic_x2y", -3},       {"cubic_xyz", -2},
        {"cubic_xy_x_plus_y", -2}, {"cubic_xyz_x3", -1},
        {"cubic_xy2_x2z", -1},   {"cubic_x3_y2z", 0},
        {"cubic_x3_x2z_y2z", 0}, {"hesse", 0},
        {"sextic_weighted", 0},
    };
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("no rigidity expectation recorded for: " + name);
    return it->second;
}

}  // namespace gpois
