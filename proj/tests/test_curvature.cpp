#include <catch_amalgamated.hpp>

#include "ascurv/generators.hpp"
#include "ascurv/theorem_checks.hpp"

using namespace ascurv;
using Catch::Approx;

namespace {

CheckConfig config(std::uint64_t samples, std::uint64_t seed = 0) {
    CheckConfig cfg;
    cfg.angles.samples = samples;
    cfg.angles.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("defects on the boundary of a tetrahedron") {
    const auto e = simplex_boundary(3);
    const auto strata = stratify(e.complex());
    const AngleConfig cfg = config(1000).angles;
    const CurvatureValue v = generalized_angle_defect(Simplex{0}, e, strata, cfg);
    CHECK(v.exact);
    CHECK(v.value == Approx(0.5).epsilon(1e-13));
    CHECK(generalized_angle_defect(Simplex{0, 1}, e, strata, cfg).value == 0.0);
    CHECK(generalized_angle_defect(Simplex{0, 1, 2}, e, strata, cfg).value == 0.0);
    // in dimension 2 the stratified vertex curvature is the angle defect
    CHECK(stratified_curvature_at_vertex(0, e, strata, cfg).value == Approx(0.5).epsilon(1e-13));
    CHECK(ascending_stratified_curvature(Simplex{0}, e, strata, cfg).value == Approx(0.5).epsilon(1e-13));
}

TEST_CASE("gauss-bonnet on surfaces is exact") {
    for (const auto& e : {simplex_boundary(3), cross_polytope(3)}) {
        const TheoremReport r = gauss_bonnet_check(e, config(1000));
        CHECK(r.pass);
        CHECK(r.std_error == 0.0);
        CHECK(r.lhs == Approx(2.0).epsilon(1e-12));
        CHECK(*r.rhs_exact == Rational(2));
    }
    const TheoremReport disk = gauss_bonnet_check(solid_simplex(2), config(1000));
    CHECK(disk.pass);
    CHECK(*disk.rhs_exact == Rational(1));
}

TEST_CASE("gauss-bonnet on a 3-sphere with sampled angles") {
    const TheoremReport r = gauss_bonnet_check(cross_polytope(4), config(40000, 3));
    CHECK(r.pass);
    CHECK(r.std_error > 0.0);
    CHECK(*r.rhs_exact == Rational(0));
    CHECK(r.entries.size() == cross_polytope(4).complex().size());
}

TEST_CASE("unit sequence breaks gauss-bonnet") {
    const TheoremReport r =
        gauss_bonnet_check(cross_polytope(4), config(40000, 3), {}, [](long) { return Rational(1); });
    CHECK_FALSE(r.pass);
}

TEST_CASE("ascending curvature vanishes structurally") {
    const auto e = cross_polytope(4);
    const CurvatureModel model(e, stratify(e.complex()), config(5000).angles);
    const auto& k = model.complex();
    for (SimplexId id = 0; id < k.size(); ++id) {
        const int p = k.dim_of(id);
        if (p % 2 == 1 || p >= 2) {
            const AngleExpression expr = model.forms().ascending(id);
            CHECK(expr.terms.empty());
            CHECK(expr.constant.is_zero());
        }
    }
}

TEST_CASE("vanishing on a 3-sphere") {
    const TheoremReport r = vanishing_check(cross_polytope(4), config(40000, 9));
    CHECK(r.pass);
    const auto hyp = vanishing_hypothesis_check(triple_book().complex());
    CHECK_FALSE(hyp.holds);
    CHECK_FALSE(hyp.two_pseudomanifold);
    CHECK_THROWS_AS(vanishing_hypothesis_check(simplex_boundary(3).complex()), std::invalid_argument);
}

TEST_CASE("shared angles count once in the error") {
    const auto e = simplex_boundary(4);
    const auto& k = e.complex();
    const AngleTable table(e, config(5000).angles);
    const AnglePair pair{k.id_of(Simplex{0}), k.id_of(Simplex{0, 1, 2, 3})};
    AngleExpression a;
    a.terms[pair] = 1.0;
    AngleExpression b = a;
    b += a;
    const double sigma = table.at(pair.first, pair.second).std_error;
    CHECK(b.terms.at(pair) == 2.0);
    CHECK(b.evaluate(table).std_error == Approx(2.0 * sigma));
    CHECK_FALSE(b.evaluate(table).exact);
    AngleExpression c = a.scaled(Rational(-1, 2));
    c.constant = Rational(3);
    const CurvatureValue cv = c.evaluate(table);
    CHECK(cv.value == Approx(3.0 - 0.5 * table.at(pair.first, pair.second).value));
}

TEST_CASE("models use the supplied sequence") {
    const auto e = simplex_boundary(3);
    const CurvatureModel model(e, stratify(e.complex()), config(1000).angles, [](long) { return Rational(7); });
    CHECK(model.forms().sequence(4) == Rational(7));
    CHECK(model.ascending_stratified_curvature(Simplex{1}).value == Approx(3.5).epsilon(1e-12));
}

TEST_CASE("stratified coefficient from a link f-vector") {
    CHECK(stratified_coefficient_from_link(FVector{{7, 20, 29, 22, 8}}) == Rational(-1, 60));
    CHECK(Rational(1) - Rational(7, 2) + Rational(20, 3) - Rational(29, 4) + Rational(22, 5) - Rational(8, 6) ==
          Rational(-1, 60));
    CHECK(stratified_coefficient_from_link(simplex_boundary(4).complex().f_vector()) == Rational(1, 3));
}

TEST_CASE("sommerville report over a complex") {
    const TheoremReport r = sommerville_report(solid_simplex(3), config(100000, 4));
    CHECK(r.pass);
    CHECK(r.entries.size() == 8);
    CHECK_THROWS_AS(sommerville_report(solid_simplex(2), config(1000)), std::invalid_argument);
}
