#include "ascurv/embedded_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace ascurv {

namespace {

Eigen::MatrixXd edge_vectors(const Eigen::MatrixXd& columns) {
    const Eigen::Index k = columns.cols() - 1;
    Eigen::MatrixXd edges(columns.rows(), std::max<Eigen::Index>(k, 0));
    for (Eigen::Index j = 0; j < k; ++j) {
        edges.col(j) = columns.col(j + 1) - columns.col(0);
    }
    return edges;
}

Point centroid_of(const EmbeddedComplex& e) {
    Point c = Point::Zero(e.ambient_dim());
    const auto vs = e.complex().vertices();
    for (VertexId v : vs) {
        c += e.coordinate(v);
    }
    return vs.empty() ? c : Point(c / static_cast<double>(vs.size()));
}

}  // namespace

EmbeddedComplex::EmbeddedComplex(SimplicialComplex complex, std::vector<Point> coordinates)
    : complex_(std::move(complex)), coordinates_(std::move(coordinates)) {
    ambient_dim_ = coordinates_.empty() ? 0 : static_cast<int>(coordinates_.front().size());
    for (const Point& p : coordinates_) {
        if (p.size() != ambient_dim_) {
            throw std::invalid_argument("coordinate arrays have inconsistent lengths");
        }
    }
    for (VertexId v : complex_.vertices()) {
        if (v >= coordinates_.size()) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no coordinates");
        }
    }
    if (complex_.dimension() > ambient_dim_) {
        throw std::invalid_argument("complex dimension exceeds ambient dimension");
    }
    for (const Simplex& s : complex_.maximal_simplices()) {
        if (!affinely_independent(vertex_matrix(s))) {
            throw std::invalid_argument("degenerate simplex " + s.to_string());
        }
    }
}

Eigen::MatrixXd EmbeddedComplex::vertex_matrix(const Simplex& s) const {
    Eigen::MatrixXd m(ambient_dim_, static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        m.col(static_cast<Eigen::Index>(i)) = coordinate(s[i]);
    }
    return m;
}

Point EmbeddedComplex::barycenter(const Simplex& s) const { return vertex_matrix(s).rowwise().mean(); }

bool affinely_independent(const Eigen::MatrixXd& columns) {
    if (columns.cols() <= 1) {
        return true;
    }
    if (columns.cols() - 1 > columns.rows()) {
        return false;
    }
    const Eigen::MatrixXd edges = edge_vectors(columns);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
    const auto& sv = svd.singularValues();
    return sv(sv.size() - 1) > kGeometryTolerance * std::max(1.0, sv(0));
}

std::optional<Eigen::VectorXd> barycentric_coordinates(const EmbeddedComplex& e, const Simplex& s, const Point& x,
                                                       double tol) {
    const Eigen::MatrixXd vs = e.vertex_matrix(s);
    Eigen::VectorXd lambda(vs.cols());
    if (vs.cols() == 1) {
        if ((x - vs.col(0)).norm() > tol * std::max(1.0, vs.col(0).norm())) {
            return std::nullopt;
        }
        lambda(0) = 1.0;
        return lambda;
    }
    const Eigen::MatrixXd edges = edge_vectors(vs);
    const Eigen::VectorXd rhs = x - vs.col(0);
    const Eigen::VectorXd mu = edges.colPivHouseholderQr().solve(rhs);
    const double scale = std::max(1.0, edges.norm());
    if ((edges * mu - rhs).norm() > tol * scale) {
        return std::nullopt;
    }
    lambda(0) = 1.0 - mu.sum();
    lambda.tail(mu.size()) = mu;
    return lambda;
}

bool simplex_contains(const EmbeddedComplex& e, const Simplex& s, const Point& x, double tol) {
    const auto lambda = barycentric_coordinates(e, s, x, tol);
    return lambda && lambda->minCoeff() >= -tol;
}

bool complex_contains(const EmbeddedComplex& e, const Point& x, double tol) {
    const auto& maximal = e.complex().maximal_simplices();
    return std::any_of(maximal.begin(), maximal.end(), [&](const Simplex& s) { return simplex_contains(e, s, x, tol); });
}

EmbeddedComplex embedded_join(const EmbeddedComplex& left, const EmbeddedComplex& right) {
    JoinResult j = join(left.complex(), right.complex());
    const int d1 = left.ambient_dim();
    const int d2 = right.ambient_dim();
    const int d = d1 + d2 + 1;
    std::size_t count = left.coordinates().size();
    for (const auto& [from, to] : j.right_renumbering) {
        count = std::max<std::size_t>(count, std::size_t{to} + 1);
    }
    std::vector<Point> coords(count, Point::Zero(d));
    for (std::size_t v = 0; v < left.coordinates().size(); ++v) {
        coords[v].head(d1) = left.coordinates()[v];
    }
    for (const auto& [from, to] : j.right_renumbering) {
        coords[to].segment(d1, d2) = right.coordinate(from);
        coords[to](d - 1) = 1.0;
    }
    return EmbeddedComplex(std::move(j.complex), std::move(coords));
}

EmbeddedComplex embedded_cone(const EmbeddedComplex& base) {
    const SimplicialComplex c = cone(base.complex());
    const int d = base.ambient_dim() + 1;
    const auto vs = c.vertices();
    std::vector<Point> coords(std::max(base.coordinates().size(), std::size_t{vs.back()} + 1), Point::Zero(d));
    for (std::size_t v = 0; v < base.coordinates().size(); ++v) {
        coords[v].head(d - 1) = base.coordinates()[v];
    }
    coords[vs.back()].head(d - 1) = centroid_of(base);
    coords[vs.back()](d - 1) = 1.0;
    return EmbeddedComplex(c, std::move(coords));
}

EmbeddedComplex embedded_suspension(const EmbeddedComplex& base) {
    const SimplicialComplex c = suspension(base.complex());
    const int d = base.ambient_dim() + 1;
    const auto vs = c.vertices();
    const VertexId top = vs.back();
    std::vector<Point> coords(std::max(base.coordinates().size(), std::size_t{top} + 1), Point::Zero(d));
    for (std::size_t v = 0; v < base.coordinates().size(); ++v) {
        coords[v].head(d - 1) = base.coordinates()[v];
    }
    const Point c0 = centroid_of(base);
    coords[top - 1].head(d - 1) = c0;
    coords[top - 1](d - 1) = 1.0;
    coords[top].head(d - 1) = c0;
    coords[top](d - 1) = -1.0;
    return EmbeddedComplex(c, std::move(coords));
}

}  // namespace ascurv
