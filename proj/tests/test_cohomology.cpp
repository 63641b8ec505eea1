#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace gpois;
using testsupport::random_homogeneous;
using testsupport::rng;

namespace {

SkewKDeriv basis_element(const WeightedGrading& g, const IndexSet& subset,
                         const Exponents& mono) {
    Int degree = g.degree_of(mono);
    for (int i : subset) degree -= g.weight(i);
    SkewKDeriv q(g, static_cast<int>(subset.size()), degree);
    q.set_coefficient(subset, Poly::monomial(g.arity(), mono, 1));
    return q;
}

SkewKDeriv random_skew(const PoissonStructure& s, int level, const Int& degree) {
    SkewKDeriv q(s.grading(), level, degree);
    for (const auto& b : skew_basis(s.grading(), level, degree)) {
        Poly c = q.coefficient(b.subset);
        q.set_coefficient(b.subset,
                          c + Poly::monomial(s.arity(), b.mono, testsupport::random_rat()));
    }
    return q;
}

}  // namespace

TEST_CASE("skew evaluation") {
    WeightedGrading g({1, 1, 1});
    SkewKDeriv q(g, 2, -2);
    q.set_coefficient({1, 2}, Poly::one(3));

    CHECK(q.eval({Poly::variable(3, 1), Poly::variable(3, 2)}) == Poly::one(3));
    CHECK(q.eval({Poly::variable(3, 2), Poly::variable(3, 1)}) == -Poly::one(3));
    CHECK(q.eval({poly_parse("x^2", 3), Poly::variable(3, 2)}) == poly_parse("2*x", 3));
    CHECK(q.eval({Poly::variable(3, 3), Poly::variable(3, 2)}).is_zero());
    CHECK_THROWS_AS(q.eval({Poly::one(3)}), std::invalid_argument);

    SECTION("eval is a derivation in each slot") {
        for (int trial = 0; trial < 5; ++trial) {
            Poly a = random_homogeneous(g, 2), b = random_homogeneous(g, 1),
                 c = random_homogeneous(g, 1);
            CHECK(q.eval({a * b, c}) == a * q.eval({b, c}) + b * q.eval({a, c}));
        }
    }

    SECTION("levels 0 and 1 round trip with Poly and Derivation") {
        Poly f = random_homogeneous(g, 2);
        CHECK(skew_from_poly(g, f).coefficient({}) == f);
        Derivation e = euler(g);
        CHECK(derivation_from_skew(skew_from_derivation(e)) == e);
    }
}

TEST_CASE("wedge products") {
    WeightedGrading g({1, 1});
    Derivation e = euler(g);

    SECTION("E wedge E vanishes") {
        CHECK(wedge(skew_from_derivation(e), skew_from_derivation(e)).is_zero());
    }

    SECTION("level overflow gives the zero element") {
        Derivation f(g, {Poly::zero(2), poly_parse("-x", 2)}, 0);
        SkewKDeriv ew = wedge_with_euler(f);
        SkewKDeriv three = wedge(skew_from_derivation(e), ew);
        CHECK(three.level() == 3);
        CHECK(three.is_zero());
    }

    SECTION("wedge against a level-2 element matches the shuffle formula") {
        WeightedGrading g3({1, 1, 1});
        PoissonStructure s = catalog_get("cubic_xyz").structure;
        Derivation p = euler(g3);
        SkewKDeriv q(g3, 2, 0);
        q.set_coefficient({1, 2}, random_homogeneous(g3, 2));
        q.set_coefficient({1, 3}, random_homogeneous(g3, 2));
        q.set_coefficient({2, 3}, random_homogeneous(g3, 2));
        SkewKDeriv w = wedge(skew_from_derivation(p), q);
        // (P ^ Q)[F1,F2,F3] = P[F1]Q[F2,F3] - P[F2]Q[F1,F3] + P[F3]Q[F1,F2].
        Poly lhs = w.coefficient({1, 2, 3});
        Poly rhs = p.image(1) * q.coefficient({2, 3}) - p.image(2) * q.coefficient({1, 3}) +
                   p.image(3) * q.coefficient({1, 2});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the coboundary operator") {
    PoissonStructure s = catalog_get("cubic_x3_y2z").structure;
    const WeightedGrading& g = s.grading();

    SECTION("level 0: d(a)[F] = {F, a}, so central elements are cocycles") {
        Poly omega = poly_parse("x^3 + y^2*z", 3);
        CHECK(d_pi(s, skew_from_poly(g, omega)).is_zero());
        Poly a = Poly::variable(3, 1);
        SkewKDeriv da = d_pi(s, skew_from_poly(g, a));
        for (int i = 1; i <= 3; ++i)
            CHECK(da.coefficient({i}) ==
                  s.bracket_eval(Poly::variable(3, i), a));
    }

    SECTION("d(E) = 0 for graded structures") {
        for (const auto& name :
             {std::string("cubic_xyz"), std::string("hesse"), std::string("sextic_weighted")}) {
            PoissonStructure t = catalog_get(name).structure;
            CHECK(d_pi(t, skew_from_derivation(euler(t.grading()))).is_zero());
        }
    }

    SECTION("d composed with d vanishes on random elements") {
        for (const auto& name : {std::string("cubic_xyz_x3"), std::string("hesse"),
                                 std::string("cubic_x3_x2z_y2z")}) {
            PoissonStructure t = catalog_get(name).structure;
            for (int level = 0; level <= 2; ++level)
                for (Int d = -1; d <= 2; ++d) {
                    SkewKDeriv q = random_skew(t, level, d);
                    CHECK(d_pi(t, d_pi(t, q)).is_zero());
                }
        }
    }

    SECTION("d preserves internal degree") {
        for (Int d = -2; d <= 2; ++d) {
            SkewKDeriv q = random_skew(s, 1, d);
            SkewKDeriv dq = d_pi(s, q);
            CHECK(dq.degree() == d);
            // Re-setting every coefficient re-validates homogeneity.
            SkewKDeriv copy(g, dq.level(), dq.degree());
            for (const auto& [sub, p] : dq.coefficients())
                CHECK_NOTHROW(copy.set_coefficient(sub, p));
        }
    }

    SECTION("level-n input maps to the zero element") {
        SkewKDeriv top = random_skew(s, 3, 0);
        CHECK(d_pi(s, top).is_zero());
        CHECK(d_pi(s, top).level() == 4);
    }
}

TEST_CASE("graded cohomology dimensions") {
    SECTION("hesse PH^0 window equals the center") {
        PoissonStructure s = catalog_get("hesse").structure;
        std::vector<std::size_t> expect = {1, 0, 0, 1, 0, 0, 1};
        for (long d = 0; d <= 6; ++d) CHECK(ph_dims(s, 0, d) == expect[d]);
    }

    SECTION("hesse lowest-degree facts") {
        PoissonStructure s = catalog_get("hesse").structure;
        CHECK(ph_dims(s, 3, -3) == 1);
        CHECK(ph_dims(s, 2, -2) == 3);
        for (Int d = -3; d < 0; ++d) CHECK(ph_dims(s, 0, d) == 0);
        for (Int d = -3; d < -1; ++d) CHECK(ph_dims(s, 1, d) == 0);
    }

    SECTION("lowest-degree facts across quadratic catalog structures") {
        for (const auto& name : {std::string("trivial3"), std::string("cubic_x3"),
                                 std::string("cubic_xyz"), std::string("cubic_x3_y2z")}) {
            PoissonStructure s = catalog_get(name).structure;
            CHECK(ph_dims(s, 0, 0) == 1);
            CHECK(ph_dims(s, 3, -3) == 1);
            CHECK(ph_dims(s, 2, -2) == 3);  // all of these entries are unimodular
            for (Int d = -3; d < 0; ++d) CHECK(ph_dims(s, 0, d) == 0);
        }
    }

    SECTION("two independent routes to PH^0 and PH^1 agree") {
        for (const auto& name : {std::string("cubic_xyz"), std::string("cubic_x3_y2z"),
                                 std::string("sextic_weighted")}) {
            PoissonStructure s = catalog_get(name).structure;
            for (Int d = 0; d <= 4; ++d) {
                CHECK(ph_dims(s, 0, d) == center_dim(s, d));
                CHECK(ph_dims(s, 1, d) == ph1_dim_via_solver(s, d));
            }
        }
    }

    SECTION("scale invariance of every PH dimension") {
        PoissonStructure s = catalog_get("hesse").structure;
        for (const Rat& xi : {make_rat(2), make_rat(-3)}) {
            PoissonStructure t = s.scaled(xi);
            for (int q = 0; q <= 3; ++q)
                for (Int d = -3; d <= 3; ++d) CHECK(ph_dims(t, q, d) == ph_dims(s, q, d));
        }
    }
}

TEST_CASE("zeroth homology dimensions") {
    SECTION("trivial bracket: PH_0 slice is all of A_d") {
        PoissonStructure s = catalog_get("trivial3").structure;
        for (Int d = 0; d <= 5; ++d)
            CHECK(ph0_homology_dims(s, d) == dim_slice(s.grading(), d));
    }

    SECTION("irreducible singular potentials match (1+t)^3/(1-t^3)") {
        std::vector<long> expect = testsupport::cube_over_one_minus_t3(6);
        for (const auto& name :
             {std::string("cubic_x3_y2z"), std::string("cubic_x3_x2z_y2z")}) {
            PoissonStructure s = catalog_get(name).structure;
            for (long d = 0; d <= 6; ++d)
                CHECK(ph0_homology_dims(s, d) == static_cast<std::size_t>(expect[d]));
        }
    }
}

TEST_CASE("euler characteristic checks") {
    SECTION("quadratic three-variable structures satisfy the -t^{-3} identity") {
        PoissonStructure s = catalog_get("hesse").structure;
        long sum_at_m3 = 0;
        for (int q = 0; q <= 3; ++q)
            sum_at_m3 += (q % 2 == 0 ? 1 : -1) * static_cast<long>(ph_dims(s, q, -3));
        CHECK(sum_at_m3 == -1);
        for (Int d = -3; d <= 3; ++d) CHECK(euler_check(s, d));
    }

    SECTION("generalized identity holds for weighted structures too") {
        PoissonStructure s = catalog_get("sextic_weighted").structure;
        for (Int d = -6; d <= 4; ++d) CHECK(euler_check(s, d));
    }
}

TEST_CASE("duality window checks") {
    SECTION("unimodular quadratic entries satisfy the duality window") {
        PoissonStructure s = catalog_get("cubic_x3_y2z").structure;
        CHECK(ph_dims(s, 3, -3) == 1);
        CHECK(ph0_homology_dims(s, 0) == 1);
        CHECK(ph_dims(s, 3, -2) == 3);
        CHECK(ph0_homology_dims(s, 1) == 3);
        for (Int d = -3; d <= 3; ++d) CHECK(poincare_check(s, d));
    }

    SECTION("hesse at degree 0: both sides are 2") {
        PoissonStructure s = catalog_get("hesse").structure;
        CHECK(ph_dims(s, 3, 0) == 2);
        CHECK(ph0_homology_dims(s, 3) == 2);
        CHECK(poincare_check(s, 0));
    }

    SECTION("refuses weighted and non-unimodular structures") {
        CHECK_THROWS_AS(poincare_check(catalog_get("sextic_weighted").structure, 0),
                        std::domain_error);
        CHECK_THROWS_AS(poincare_check(catalog_get("log_canonical").structure, 0),
                        std::domain_error);
    }
}

TEST_CASE("cohomology window report") {
    PoissonStructure s = catalog_get("cubic_x3_y2z").structure;
    CohomologyWindow w = cohomology_window(s, 3);
    CHECK(w.dmin == -3);
    CHECK(w.ph.at(0).at(0) == 1);
    CHECK(w.ph.at(3).at(-3) == 1);
    CHECK(w.ph0.at(1) == 3);
    CHECK(w.euler.at(-3));
    REQUIRE(!w.poincare.empty());
    CHECK(w.poincare.at(0));
}
