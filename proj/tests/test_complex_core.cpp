#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ascurv/generators.hpp"
#include "ascurv/simplicial_complex.hpp"

using namespace ascurv;

namespace {

/// Link by enumerating every subset of the vertex set.
std::set<Simplex> brute_force_link(const Simplex& eta, const SimplicialComplex& k) {
    const auto verts = k.vertices();
    std::set<Simplex> out;
    const std::size_t n = verts.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<VertexId> w;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) {
                w.push_back(verts[i]);
            }
        }
        const Simplex ws(w);
        if (ws.is_disjoint_from(eta) && k.contains(simplex_union(ws, eta))) {
            out.insert(ws);
        }
    }
    return out;
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<VertexId>& perm) {
    std::vector<Simplex> maxs;
    for (const Simplex& s : k.maximal_simplices()) {
        std::vector<VertexId> vs;
        for (VertexId v : s) {
            vs.push_back(perm[v]);
        }
        maxs.emplace_back(vs);
    }
    return SimplicialComplex::from_maximal(maxs);
}

}  // namespace

TEST_CASE("simplex basics") {
    const Simplex s{3, 1, 2};
    CHECK(s.to_string() == "[1,2,3]");
    CHECK(s.dim() == 2);
    CHECK(s.faces().size() == 7);
    CHECK(s.has_face(Simplex{1, 3}));
    CHECK_FALSE(s.has_face(Simplex{0}));
    CHECK(s.without_index(0) == Simplex{2, 3});
    CHECK(s.complement_of(Simplex{2}) == std::vector<VertexId>{1, 3});
    CHECK(Simplex{5} < Simplex{0, 1});
    CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), std::invalid_argument);
    CHECK_THROWS_AS((Simplex{1, 1}), std::invalid_argument);
}

TEST_CASE("closure and f-vectors") {
    const auto k = SimplicialComplex::from_maximal({Simplex{0, 1, 2}, Simplex{1, 2}, Simplex{2, 3}});
    CHECK(k.f_vector().counts == std::vector<long>{4, 4, 1});
    CHECK(k.maximal_simplices().size() == 2);
    CHECK(k.euler_characteristic() == 1);
    CHECK(k.dimension() == 2);

    const auto empty = SimplicialComplex::from_maximal({});
    CHECK(empty.dimension() == -1);
    CHECK(empty.euler_characteristic() == 0);

    for (int n = 1; n <= 6; ++n) {
        const auto b = simplex_boundary(n).complex();
        CHECK(b.euler_characteristic() == (n % 2 == 1 ? 2 : 0));
        CHECK(b.f_vector()[0] == n + 1);
        if (n >= 2) {
            CHECK(is_two_pseudomanifold(b));
        }
    }
    CHECK(cross_polytope(4).complex().f_vector().counts == std::vector<long>{8, 24, 32, 16});
}

TEST_CASE("closing a closed complex changes nothing") {
    const auto k = cross_polytope(3).complex();
    const auto again = SimplicialComplex::from_maximal(k.simplices());
    CHECK(again == k);
    CHECK(again.maximal_simplices() == k.maximal_simplices());
}

TEST_CASE("ids are grouped by dimension") {
    const auto k = simplex_boundary(4).complex();
    SimplexId next = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (SimplexId id : k.ids_of_dim(d)) {
            CHECK(id == next++);
            CHECK(k.dim_of(id) == d);
            CHECK(k.id_of(k.simplex(id)) == id);
        }
    }
    CHECK(next == k.size());
    CHECK_THROWS_AS(k.id_of(Simplex{0, 9}), std::out_of_range);
}

TEST_CASE("link agrees with brute force enumeration") {
    for (const auto& k : {simplex_boundary(4).complex(), triple_book().complex(), cross_polytope(3).complex()}) {
        for (const Simplex& eta : k.simplices()) {
            const auto l = link(eta, k);
            const std::set<Simplex> got(l.simplices().begin(), l.simplices().end());
            CHECK(got == brute_force_link(eta, k));
        }
    }
    CHECK_THROWS(link(Simplex{0, 7}, simplex_boundary(3).complex()));
}

TEST_CASE("star") {
    const auto k = triple_book().complex();
    const auto s = star(Simplex{0, 1, 2}, k);
    CHECK(s.size() == 4);
    CHECK(std::all_of(s.begin(), s.end(), [](const Simplex& x) { return x.has_face(Simplex{0, 1, 2}); }));
    CHECK(k.star_ids(k.id_of(Simplex{3})).size() == 8);
}

TEST_CASE("join, cone and suspension euler characteristics") {
    const std::vector<SimplicialComplex> samples = {
        simplex_boundary(2).complex(), simplex_boundary(3).complex(), triple_book().complex(),
        SimplicialComplex::from_maximal({Simplex{0}, Simplex{1}, Simplex{2}}),
        SimplicialComplex::from_maximal({Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 0}, Simplex{3}}),
    };
    for (const auto& a : samples) {
        CHECK(cone(a).euler_characteristic() == 1);
        CHECK(suspension(a).euler_characteristic() == 2 - a.euler_characteristic());
        for (const auto& b : samples) {
            const auto j = join(a, b).complex;
            const long xa = a.euler_characteristic();
            const long xb = b.euler_characteristic();
            CHECK(j.euler_characteristic() == xa + xb - xa * xb);
            CHECK(j.dimension() == a.dimension() + b.dimension() + 1);
        }
    }
}

TEST_CASE("join renumbers colliding vertices") {
    const auto a = simplex_boundary(2).complex();
    const auto r = join(a, a);
    CHECK(r.complex.vertices().size() == 6);
    CHECK(r.right_renumbering.at(0) == 3);
    CHECK(is_two_pseudomanifold(r.complex));
    CHECK(r.complex.f_vector().counts == std::vector<long>{6, 15, 18, 9});
}

TEST_CASE("coface counts and pseudomanifold test") {
    const auto tb = triple_book().complex();
    CHECK(coface_count(Simplex{0, 1, 2}, tb) == 3);
    CHECK(coface_count(Simplex{0, 1, 3}, tb) == 1);
    CHECK_THROWS_AS(coface_count(Simplex{0, 1}, tb), std::invalid_argument);
    CHECK_FALSE(is_two_pseudomanifold(tb));
    CHECK_FALSE(is_two_pseudomanifold(solid_simplex(3).complex()));
}

TEST_CASE("link f-vector identity on pseudomanifolds") {
    for (const auto& k : {simplex_boundary(5).complex(), cross_polytope(4).complex(),
                          join(simplex_boundary(2).complex(), simplex_boundary(2).complex()).complex}) {
        for (int p = 0; p <= k.dimension() - 2; ++p) {
            CHECK(link_fvector_identity_check(k, p));
        }
    }
    CHECK_THROWS_AS(link_fvector_identity_check(triple_book().complex(), 0), std::invalid_argument);
}

TEST_CASE("relabeling keeps the combinatorics") {
    std::mt19937 rng(7);
    for (const auto& k : {cross_polytope(3).complex(), triple_book().complex()}) {
        const auto verts = k.vertices();
        std::vector<VertexId> perm(verts.back() + 1);
        std::iota(perm.begin(), perm.end(), VertexId{0});
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            const auto r = relabel(k, perm);
            CHECK(r.f_vector() == k.f_vector());
            CHECK(is_two_pseudomanifold(r) == is_two_pseudomanifold(k));
            for (const Simplex& s : k.simplices()) {
                std::vector<VertexId> vs;
                for (VertexId v : s) {
                    vs.push_back(perm[v]);
                }
                CHECK(link(Simplex(vs), r).f_vector() == link(s, k).f_vector());
            }
        }
    }
}
