#pragma once

#include <vector>

#include "ascurv/embedded_complex.hpp"

namespace ascurv {

/// Boundary complex of conv(points) for points in general position in R^d,
/// by brute force over all d-subsets (meant for a few dozen points at most).
/// Vertex ids are indices into `points`; points off the boundary keep their
/// coordinates but belong to no simplex.
///
/// Throws std::invalid_argument for fewer than d + 1 points or a set that is
/// not full-dimensional, and std::domain_error when a supporting hyperplane
/// passes within 1e-9 of more than d points (perturb the input).
EmbeddedComplex convex_hull_boundary(const std::vector<Point>& points);

/// Face lattice of the boundary of a convex polytope, which need not be
/// simplicial. Faces are vertex-index sets; faces[k] holds the k-faces.
struct PolytopeBoundary {
    std::vector<std::vector<std::vector<VertexId>>> faces;
    std::vector<std::vector<VertexId>> facets;

    FVector f_vector() const;
    bool simplicial() const;
};

PolytopeBoundary boundary_face_lattice(const std::vector<Point>& points);

}  // namespace ascurv
