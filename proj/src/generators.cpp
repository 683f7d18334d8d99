#include "ascurv/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace ascurv {

namespace {

std::vector<Point> standard_basis(int n) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        pts.push_back(Point::Unit(n, i));
    }
    return pts;
}

Point make_point(std::initializer_list<double> values) {
    Point p(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) {
        p[i++] = v;
    }
    return p;
}

}  // namespace

EmbeddedComplex simplex_boundary(int n) {
    if (n < 1) {
        throw std::invalid_argument("simplex_boundary needs n >= 1");
    }
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<VertexId> vs;
        for (int v = 0; v <= n; ++v) {
            if (v != skip) {
                vs.push_back(static_cast<VertexId>(v));
            }
        }
        facets.emplace_back(std::move(vs));
    }
    return EmbeddedComplex(SimplicialComplex::from_maximal(std::move(facets)), standard_basis(n + 1));
}

EmbeddedComplex solid_simplex(int n) {
    if (n < 0) {
        throw std::invalid_argument("solid_simplex needs n >= 0");
    }
    std::vector<VertexId> vs;
    for (int v = 0; v <= n; ++v) {
        vs.push_back(static_cast<VertexId>(v));
    }
    return EmbeddedComplex(SimplicialComplex::from_maximal({Simplex(std::move(vs))}), standard_basis(n + 1));
}

EmbeddedComplex cross_polytope(int n) {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("cross_polytope needs 1 <= n <= 20");
    }
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        pts.push_back(Point::Unit(n, i));
        pts.push_back(-Point::Unit(n, i));
    }
    std::vector<Simplex> facets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> vs;
        for (int i = 0; i < n; ++i) {
            vs.push_back(static_cast<VertexId>(2 * i + ((mask >> i) & 1u)));
        }
        facets.emplace_back(std::move(vs));
    }
    return EmbeddedComplex(SimplicialComplex::from_maximal(std::move(facets)), std::move(pts));
}

EmbeddedComplex triple_book() {
    const double h = std::sqrt(3.0) / 2.0;
    std::vector<Point> pts = {
        make_point({0.0, 0.0, 0.0, 0.0}),
        make_point({1.0, 0.0, 0.0, 0.0}),
        make_point({0.5, h, 0.0, 0.0}),
    };
    const double cx = 0.5;
    const double cy = h / 3.0;
    pts.push_back(make_point({cx, cy, 1.0, 0.0}));
    pts.push_back(make_point({cx, cy, -1.0, 0.0}));
    pts.push_back(make_point({cx, cy, 0.0, 1.0}));
    std::vector<Simplex> tets = {Simplex({0, 1, 2, 3}), Simplex({0, 1, 2, 4}), Simplex({0, 1, 2, 5})};
    return EmbeddedComplex(SimplicialComplex::from_maximal(std::move(tets)), std::move(pts));
}

std::vector<Point> example_seven_points() {
    const double h = std::sqrt(3.0) / 2.0;
    return {
        make_point({1.0, 0.0, 0.0, 0.0, 0.0}),  make_point({-0.5, h, 0.0, 0.0, 0.0}),
        make_point({-0.5, -h, 0.0, 0.0, 0.0}),  make_point({0.0, 0.0, 1.0, 0.0, 0.0}),
        make_point({0.0, 0.0, -1.0, 0.0, 0.0}), make_point({0.1, 0.1, 0.1, 1.0, 0.0}),
        make_point({0.1, 0.1, 0.1, 0.1, 1.0}),
    };
}

std::vector<Point> example_seven_points_perturbed() {
    std::vector<Point> pts = example_seven_points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (Eigen::Index j = 0; j < pts[i].size(); ++j) {
            pts[i][j] += 0.01 * std::sin(7.0 * static_cast<double>(i) + 3.0 * static_cast<double>(j) + 1.0);
        }
    }
    return pts;
}

}  // namespace ascurv
