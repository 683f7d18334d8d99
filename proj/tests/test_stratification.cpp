#include <catch_amalgamated.hpp>

#include "ascurv/generators.hpp"
#include "ascurv/stratification.hpp"

using namespace ascurv;

namespace {

int r_of(const SimplicialComplex& k, const StratumAssignment& s, const Simplex& x) {
    return s[k.id_of(x)].r;
}

}  // namespace

TEST_CASE("manifolds are a single stratum") {
    for (const auto& k : {simplex_boundary(3).complex(), simplex_boundary(5).complex(), cross_polytope(4).complex()}) {
        const auto s = stratify(k);
        for (const auto& rec : s.records()) {
            CHECK(rec.r == 2);
            CHECK(rec.rank == Rational(1));
            CHECK(rec.tier == StratumTier::exact);
        }
        CHECK(stratified_euler_characteristic(k, s) == Rational(k.euler_characteristic()));
        CHECK(s.warnings().empty());
    }
}

TEST_CASE("solid simplex has a boundary stratum") {
    const auto k = solid_simplex(3).complex();
    const auto s = stratify(k);
    CHECK(r_of(k, s, Simplex{0, 1, 2, 3}) == 2);
    CHECK(r_of(k, s, Simplex{0, 1, 2}) == 1);
    CHECK(r_of(k, s, Simplex{0, 1}) == 1);
    CHECK(r_of(k, s, Simplex{0}) == 1);
    CHECK(stratified_euler_characteristic(k, s) == Rational(0));

    const auto tri = solid_simplex(2).complex();
    CHECK(stratified_euler_characteristic(tri, stratify(tri)) == Rational(1));
}

TEST_CASE("triple book") {
    const auto k = triple_book().complex();
    const auto s = stratify(k);
    CHECK(r_of(k, s, Simplex{0, 1, 2}) == 3);
    CHECK(s[k.id_of(Simplex{0, 1, 2})].rank == Rational(3, 2));
    CHECK(r_of(k, s, Simplex{0, 1, 3}) == 1);
    CHECK(r_of(k, s, Simplex{0, 3}) == 1);
    CHECK(r_of(k, s, Simplex{3}) == 1);
    CHECK(s[k.id_of(Simplex{3})].tier == StratumTier::heuristic);
    CHECK(stratified_euler_characteristic(k, s) == Rational(0));
}

TEST_CASE("book of r pages along an edge") {
    for (int pages = 1; pages <= 5; ++pages) {
        std::vector<Simplex> tris;
        for (int i = 0; i < pages; ++i) {
            tris.push_back(Simplex{0, 1, static_cast<VertexId>(2 + i)});
        }
        const auto k = SimplicialComplex::from_maximal(tris);
        const auto s = stratify(k);
        CHECK(r_of(k, s, Simplex{0, 1}) == pages);
        // the spine ends see two different coface counts once pages >= 3
        CHECK(r_of(k, s, Simplex{0}) == (pages <= 2 ? 1 : 2));
    }
}

TEST_CASE("overrides win and are validated") {
    const auto k = simplex_boundary(3).complex();
    const auto s = stratify(k, {{Simplex{0}, 4}});
    CHECK(r_of(k, s, Simplex{0}) == 4);
    CHECK(s[k.id_of(Simplex{0})].tier == StratumTier::override_);
    CHECK(stratified_euler_characteristic(k, s) == Rational(3));
    CHECK_THROWS_AS(stratify(k, {{Simplex{0, 9}, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(stratify(k, {{Simplex{0}, -1}}), std::invalid_argument);
}

TEST_CASE("suspensions of points") {
    CHECK(suspended_points_euler_characteristic(3, 0) == 3);
    CHECK(suspended_points_euler_characteristic(3, 1) == -1);
    CHECK(suspended_points_euler_characteristic(3, 2) == 3);
    CHECK(suspended_points_euler_characteristic(2, 3) == 0);

    const auto theta = SimplicialComplex::from_maximal(
        {Simplex{0, 2}, Simplex{2, 1}, Simplex{0, 3}, Simplex{3, 1}, Simplex{0, 4}, Simplex{4, 1}});
    CHECK(is_suspension_of_points(theta, 3));
    CHECK_FALSE(is_suspension_of_points(theta, 2));
    CHECK(is_suspension_of_points(simplex_boundary(2).complex(), 2));
    CHECK(is_suspension_of_points(SimplicialComplex::from_maximal({Simplex{0, 1}, Simplex{1, 2}}), 1));
    CHECK(is_suspension_of_points(SimplicialComplex::from_maximal({Simplex{0}, Simplex{1}}), 0));
    const auto two_circles = SimplicialComplex::from_maximal({Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 0},
                                                             Simplex{3, 4}, Simplex{4, 5}, Simplex{5, 3}});
    CHECK_FALSE(is_suspension_of_points(two_circles, 2));
}

TEST_CASE("stratification is deterministic") {
    const auto k = join(triple_book().complex(), simplex_boundary(1).complex()).complex;
    const auto a = stratify(k);
    const auto b = stratify(k);
    REQUIRE(a.size() == k.size());
    for (SimplexId id = 0; id < k.size(); ++id) {
        CHECK(a[id].r == b[id].r);
        CHECK(a[id].tier == b[id].tier);
    }
    CHECK(a.warnings() == b.warnings());
}
