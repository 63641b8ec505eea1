// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. Exits nonzero when any criterion fails.

#include <functional>
#include <iostream>

#include "support.hpp"

using namespace gpois;
using testsupport::cube_over_one_minus_t3;
using testsupport::one_over_one_minus_t3;
using testsupport::random_combination;

namespace {

const std::vector<std::string> quadratic_entries = {
    "trivial3",       "cubic_x3",       "cubic_x2y",
    "cubic_xyz",      "cubic_xy_x_plus_y", "cubic_xyz_x3",
    "cubic_xy2_x2z",  "cubic_x3_y2z",   "cubic_x3_x2z_y2z"};

std::vector<std::pair<std::string, PoissonStructure>> unimodular_structures() {
    std::vector<std::pair<std::string, PoissonStructure>> out;
    for (const auto& name : quadratic_entries)
        out.emplace_back(name, catalog_get(name).structure);
    out.emplace_back("hesse(0)", catalog_get("hesse").structure);
    out.emplace_back("hesse(1)", catalog_get("hesse", {{"lambda", "1"}}).structure);
    out.emplace_back("sextic_weighted(0)", catalog_get("sextic_weighted").structure);
    out.emplace_back("sextic_weighted(1)",
                     catalog_get("sextic_weighted", {{"lambda", "1"}}).structure);
    return out;
}

std::vector<std::pair<std::string, PoissonStructure>> quadratic_structures() {
    std::vector<std::pair<std::string, PoissonStructure>> out;
    for (const auto& name : quadratic_entries)
        out.emplace_back(name, catalog_get(name).structure);
    out.emplace_back("hesse(0)", catalog_get("hesse").structure);
    out.emplace_back("hesse(1)", catalog_get("hesse", {{"lambda", "1"}}).structure);
    out.emplace_back("log_canonical", catalog_get("log_canonical").structure);
    return out;
}

std::vector<Rat> vectorize(const Derivation& d,
                           const std::vector<DerivationBasisLabel>& basis) {
    std::vector<Rat> v;
    v.reserve(basis.size());
    for (const auto& label : basis)
        v.push_back(d.image(label.slot).coefficient(label.mono));
    return v;
}

std::size_t rank_of(const std::vector<std::vector<Rat>>& vectors, std::size_t width) {
    LinearSystem sys(width);
    for (const auto& v : vectors) sys.add_row(v);
    return sys.kernel().rank;
}

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& title,
                   const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title;
        if (!ok && !note.empty()) std::cout << "  [" << note << "]";
        std::cout << std::endl;
        if (!ok) ++failures;
    }
};

}  // namespace

int main() {
    Harness h;

    h.criterion(1, "rigidity classification table for quadratic normal forms", [] {
        bool ok = true;
        for (const auto& name : quadratic_entries)
            ok = ok && rgt(catalog_get(name).structure) == expected_rgt(name);
        ok = ok && rgt(catalog_get("hesse", {{"lambda", "0"}}).structure) == 0;
        ok = ok && rgt(catalog_get("hesse", {{"lambda", "1"}}).structure) == 0;
        return ok;
    });

    h.criterion(2, "weighted sextic structure is rigid, unimodular, graded", [] {
        bool ok = true;
        for (const char* lambda : {"0", "1"}) {
            PoissonStructure s =
                catalog_get("sextic_weighted", {{"lambda", lambda}}).structure;
            ok = ok && s.grading().weights() == std::vector<Int>{1, 2, 3};
            ok = ok && s.verify_graded() && s.verify_poisson();
            ok = ok && is_unimodular(s);
            ok = ok && rgt(s) == 0;
        }
        return ok;
    });

    h.criterion(3, "modular derivation of the rank-one family", [] {
        bool ok = true;
        for (int n = 0; n <= 3; ++n) {
            PoissonStructure s =
                catalog_get("rank1", {{"n", std::to_string(n)}}).structure;
            Derivation m = modular(s);
            Poly expect = n == 0 ? Poly::zero(2)
                                 : Poly::monomial(2, {Int(n - 1), Int(0)}, Rat(n));
            ok = ok && m.image(1).is_zero() && m.image(2) == expect;
            ok = ok && divergence(m).is_zero();
        }
        return ok;
    });

    h.criterion(4, "modular derivation of a twist: m + l*delta - div(delta)E", [] {
        bool ok = true;
        for (const auto& [name, s] : unimodular_structures()) {
            DerivationSpace gpd = poisson_derivations(s, 0);
            for (int trial = 0; trial < 5; ++trial) {
                Derivation delta = random_combination(gpd.basis, s.grading(), 0);
                ok = ok && modular(graded_twist(s, delta)) ==
                               twist_modular_prediction(s, delta);
            }
        }
        return ok;
    });

    h.criterion(5, "unimodularization and the bracket decomposition", [] {
        PoissonStructure rank12 = catalog_get("rank1", {{"n", "2"}}).structure;
        Unimodularization u = unimodularize(rank12);
        bool ok = u.structure.upper(1, 2).is_zero();
        ok = ok && u.delta.image(1).is_zero() &&
             u.delta.image(2) == -Poly::variable(2, 1);

        for (const auto& name :
             {std::string("cubic_xyz"), std::string("trivial3"), std::string("cubic_x2y")}) {
            PoissonStructure s = catalog_get(name).structure;
            DerivationSpace gpd = poisson_derivations(s, 0);
            PoissonStructure twisted = s;
            for (int attempt = 0; attempt < 10; ++attempt) {
                Derivation delta = random_combination(gpd.basis, s.grading(), 0);
                twisted = graded_twist(s, delta);
                if (!is_unimodular(twisted)) break;
            }
            ok = ok && !is_unimodular(twisted);
            Unimodularization v = unimodularize(twisted);
            ok = ok && modular(v.structure).is_zero();
            SkewKDeriv correction =
                wedge_with_euler(modular(twisted))
                    .scaled(make_rat(Int(1), s.grading().total()));
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j)
                    ok = ok && twisted.upper(i, j) ==
                                   v.structure.upper(i, j) + correction.coefficient({i, j});
        }
        return ok;
    });

    h.criterion(6, "cohomology Hilbert windows for irreducible potentials", [] {
        std::vector<long> s3 = one_over_one_minus_t3(6);       // 1/(1-t^3)
        std::vector<long> cube = cube_over_one_minus_t3(9);    // (1+t)^3/(1-t^3)
        bool ok = s3 == std::vector<long>{1, 0, 0, 1, 0, 0, 1};
        for (const auto& name : {std::string("cubic_x3_y2z"),
                                 std::string("cubic_x3_x2z_y2z"), std::string("hesse")}) {
            CatalogEntry e = catalog_get(name);
            const PoissonStructure& s = e.structure;
            const ExpectedWindows& w = *e.expected_windows;
            for (long d = 0; d <= 6; ++d) {
                ok = ok && ph_dims(s, 0, d) == static_cast<std::size_t>(s3[d]);
                ok = ok && ph_dims(s, 1, d) == static_cast<std::size_t>(s3[d]);
                ok = ok && static_cast<long>(ph_dims(s, 0, d)) == w.ph0_from0[d];
                ok = ok && static_cast<long>(ph_dims(s, 1, d)) == w.ph1_from0[d];
            }
            // PH^2 at d = -2..3 from t^{-3}((1+t)^3/(1-t^3) - 1).
            for (long d = -2; d <= 3; ++d) {
                long expect = cube[d + 3] - (d + 3 == 0 ? 1 : 0);
                ok = ok && static_cast<long>(ph_dims(s, 2, d)) == expect;
                ok = ok && expect == w.ph2_fromm2[d + 2];
            }
            // PH^3 at d = -3..3 from t^{-3}(1+t)^3/(1-t^3).
            for (long d = -3; d <= 3; ++d) {
                ok = ok && static_cast<long>(ph_dims(s, 3, d)) == cube[d + 3];
                ok = ok && cube[d + 3] == w.ph3_fromm3[d + 3];
            }
        }
        return ok;
    });

    h.criterion(7, "zeroth homology windows for the singular potentials", [] {
        std::vector<long> cube = cube_over_one_minus_t3(6);
        bool ok = cube == std::vector<long>{1, 3, 3, 2, 3, 3, 2};
        for (const auto& name :
             {std::string("cubic_x3_y2z"), std::string("cubic_x3_x2z_y2z")}) {
            PoissonStructure s = catalog_get(name).structure;
            for (long d = 0; d <= 6; ++d)
                ok = ok && ph0_homology_dims(s, d) == static_cast<std::size_t>(cube[d]);
        }
        return ok;
    });

    h.criterion(8, "alternating sum of cohomology dimensions is -t^{-3}", [] {
        bool ok = true;
        for (const auto& [name, s] : quadratic_structures()) {
            for (long d = -3; d <= 5; ++d) {
                long sum = 0;
                for (int q = 0; q <= 3; ++q)
                    sum += (q % 2 == 0 ? 1 : -1) * static_cast<long>(ph_dims(s, q, d));
                ok = ok && sum == (d == -3 ? -1 : 0);
            }
        }
        return ok;
    });

    h.criterion(9, "duality window: PH^3_d matches PH_0 at degree d+3", [] {
        bool ok = true;
        for (const auto& [name, s] : quadratic_structures()) {
            if (!is_unimodular(s)) continue;
            for (long d = -3; d <= 3; ++d)
                ok = ok && ph_dims(s, 3, d) == ph0_homology_dims(s, d + 3);
        }
        return ok;
    });

    h.criterion(10, "semi-Poisson = Poisson for unimodular structures, twist invariance,"
                    " commutator closure", [] {
        bool ok = true;
        for (const auto& [name, s] : unimodular_structures()) {
            DerivationSpace gpd = poisson_derivations(s, 0);
            DerivationSpace gspd = semi_poisson_derivations(s, 0);
            ok = ok && gpd.dim == gspd.dim;
            for (int trial = 0; trial < 5; ++trial) {
                Derivation delta = random_combination(gpd.basis, s.grading(), 0);
                PoissonStructure t = graded_twist(s, delta);
                ok = ok && semi_poisson_dim(t, 0) == gspd.dim;
            }
            auto basis_labels = derivation_basis(s.grading(), 0);
            std::vector<std::vector<Rat>> span;
            for (const Derivation& b : gpd.basis) span.push_back(vectorize(b, basis_labels));
            std::size_t base_rank = rank_of(span, basis_labels.size());
            for (int trial = 0; trial < 3; ++trial) {
                Derivation a = random_combination(gpd.basis, s.grading(), 0);
                Derivation b = random_combination(gpd.basis, s.grading(), 0);
                Derivation c = commutator(a, b);
                ok = ok && is_poisson_derivation(s, c);
                auto extended = span;
                extended.push_back(vectorize(c, basis_labels));
                ok = ok && rank_of(extended, basis_labels.size()) == base_rank;
            }
        }
        return ok;
    });

    h.criterion(11, "two-variable twist chain replay", [] {
        CatalogEntry e = catalog_get("ex2_6");
        const PoissonStructure& s = e.structure;
        const Derivation& phi = e.derivations.at("phi");
        const Derivation& f = e.derivations.at("f");
        const Derivation& g = e.derivations.at("g");

        bool ok = d_pi1(s, phi).coefficient({1, 2}) == poly_parse("2*x^2", 2);
        ok = ok && !is_poisson_derivation(s, phi);
        ok = ok && is_semi_poisson(s, phi);

        PoissonStructure trivial = graded_twist(s, f);
        ok = ok && trivial.upper(1, 2).is_zero();

        PoissonStructure chained = graded_twist(trivial, g);
        ok = ok && (f + g) == phi;
        ok = ok && chained == graded_twist(s, phi);
        return ok;
    });

    h.criterion(12, "ozone/Hamiltonian and PH^1-minimality windows", [] {
        struct Case {
            std::string name;
            std::string omega;
        };
        const Case cases[] = {
            {"cubic_x3_y2z", "x^3 + y^2*z"},
            {"cubic_x3_x2z_y2z", "x^3 + x^2*z + y^2*z"},
            {"hesse", "1/3*x^3 + 1/3*y^3 + 1/3*z^3"},
        };
        bool ok = true;
        for (const Case& c : cases) {
            PoissonStructure s = catalog_get(c.name).structure;
            Poly omega = poly_parse(c.omega, 3);
            for (long d = 0; d <= 5; ++d) {
                ok = ok && ozone_dim(s, d, {omega}) == hamiltonian_dim(s, d);
                ok = ok && ph1_dim_via_solver(s, d) == center_dim(s, d);
                ok = ok && poisson_derivation_dim(s, d) == dim_slice(s.grading(), d);
            }
        }
        return ok;
    });

    h.criterion(13, "cohomology dimensions are invariant under bracket scaling", [] {
        PoissonStructure s = catalog_get("hesse").structure;
        PoissonStructure t = s.scaled(5);
        bool ok = true;
        for (int q = 0; q <= 3; ++q)
            for (long d = -3; d <= 3; ++d) ok = ok && ph_dims(t, q, d) == ph_dims(s, q, d);
        return ok;
    });

    h.criterion(14, "complex and solver routes to PH^0 and PH^1 agree", [] {
        bool ok = true;
        for (const auto& [name, s] : quadratic_structures()) {
            for (long d = 0; d <= 5; ++d) {
                ok = ok && ph_dims(s, 0, d) == center_dim(s, d);
                ok = ok && ph_dims(s, 1, d) == ph1_dim_via_solver(s, d);
            }
        }
        return ok;
    });

    if (h.failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << h.failures << " criteria failed" << std::endl;
    return 1;
}
