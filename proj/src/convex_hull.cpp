#include "ascurv/convex_hull.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ascurv {

namespace {

struct SupportingFace {
    std::vector<VertexId> on_hyperplane;
};

int affine_rank(const std::vector<Point>& points, const std::vector<VertexId>& subset) {
    if (subset.size() <= 1) {
        return subset.empty() ? -1 : 0;
    }
    Eigen::MatrixXd edges(points.front().size(), static_cast<Eigen::Index>(subset.size() - 1));
    for (std::size_t i = 1; i < subset.size(); ++i) {
        edges.col(static_cast<Eigen::Index>(i - 1)) = points[subset[i]] - points[subset[0]];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
    const auto& sv = svd.singularValues();
    const double cutoff = kGeometryTolerance * std::max(1.0, sv(0));
    return static_cast<int>((sv.array() > cutoff).count());
}

/// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) {
        return;
    }
    std::vector<VertexId> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = static_cast<VertexId>(i);
    }
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<SupportingFace> supporting_hyperplanes(const std::vector<Point>& points) {
    if (points.empty()) {
        throw std::invalid_argument("convex hull of an empty point set");
    }
    const auto d = static_cast<std::size_t>(points.front().size());
    for (const Point& p : points) {
        if (static_cast<std::size_t>(p.size()) != d) {
            throw std::invalid_argument("points have inconsistent dimensions");
        }
    }
    if (points.size() < d + 1) {
        throw std::invalid_argument("convex hull in R^d needs at least d+1 points");
    }
    std::vector<VertexId> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<VertexId>(i);
    }
    if (affine_rank(points, all) < static_cast<int>(d)) {
        throw std::invalid_argument("points are not full-dimensional");
    }

    double scale = 1.0;
    for (const Point& p : points) {
        scale = std::max(scale, p.cwiseAbs().maxCoeff());
    }

    std::set<std::vector<VertexId>> seen;
    std::vector<SupportingFace> out;
    for_each_subset(points.size(), d, [&](const std::vector<VertexId>& subset) {
        Eigen::VectorXd normal(static_cast<Eigen::Index>(d));
        if (d == 1) {
            normal(0) = 1.0;
        } else {
            Eigen::MatrixXd rows(static_cast<Eigen::Index>(d - 1), static_cast<Eigen::Index>(d));
            for (std::size_t i = 1; i < d; ++i) {
                rows.row(static_cast<Eigen::Index>(i - 1)) = (points[subset[i]] - points[subset[0]]).transpose();
            }
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
            const auto& sv = svd.singularValues();
            if (sv(sv.size() - 1) <= kGeometryTolerance * std::max(1.0, sv(0))) {
                return;  // the subset does not span a hyperplane
            }
            normal = svd.matrixV().col(static_cast<Eigen::Index>(d - 1));
        }
        std::vector<VertexId> on;
        bool positive = false;
        bool negative = false;
        for (std::size_t j = 0; j < points.size(); ++j) {
            const double dist = normal.dot(points[j] - points[subset[0]]);
            if (std::abs(dist) <= kGeometryTolerance * scale) {
                on.push_back(static_cast<VertexId>(j));
            } else if (dist > 0) {
                positive = true;
            } else {
                negative = true;
            }
        }
        if (positive && negative) {
            return;
        }
        if (seen.insert(on).second) {
            out.push_back({std::move(on)});
        }
    });
    return out;
}

}  // namespace

EmbeddedComplex convex_hull_boundary(const std::vector<Point>& points) {
    const auto faces = supporting_hyperplanes(points);
    const auto d = static_cast<std::size_t>(points.front().size());
    std::vector<Simplex> facets;
    for (const SupportingFace& f : faces) {
        if (f.on_hyperplane.size() != d) {
            throw std::domain_error("degenerate position: " + std::to_string(f.on_hyperplane.size()) +
                                    " points lie on one supporting hyperplane; perturb the input");
        }
        facets.emplace_back(f.on_hyperplane);
    }
    return EmbeddedComplex(SimplicialComplex::from_maximal(std::move(facets)), points);
}

FVector PolytopeBoundary::f_vector() const {
    FVector f;
    for (const auto& level : faces) {
        f.counts.push_back(static_cast<long>(level.size()));
    }
    return f;
}

bool PolytopeBoundary::simplicial() const {
    for (std::size_t k = 0; k < faces.size(); ++k) {
        for (const auto& face : faces[k]) {
            if (face.size() != k + 1) {
                return false;
            }
        }
    }
    return true;
}

PolytopeBoundary boundary_face_lattice(const std::vector<Point>& points) {
    PolytopeBoundary out;
    std::set<std::vector<VertexId>> lattice;
    for (const SupportingFace& f : supporting_hyperplanes(points)) {
        out.facets.push_back(f.on_hyperplane);
        lattice.insert(f.on_hyperplane);
    }
    // Every face of a polytope is an intersection of facets.
    std::vector<std::vector<VertexId>> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<std::vector<VertexId>> next;
        for (const auto& a : frontier) {
            for (const auto& b : out.facets) {
                std::vector<VertexId> meet;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
                if (!meet.empty() && lattice.insert(meet).second) {
                    next.push_back(std::move(meet));
                }
            }
        }
        frontier = std::move(next);
    }
    const auto d = static_cast<std::size_t>(points.front().size());
    out.faces.resize(d);
    for (const auto& face : lattice) {
        const int k = affine_rank(points, face);
        out.faces[static_cast<std::size_t>(k)].push_back(face);
    }
    return out;
}

}  // namespace ascurv
