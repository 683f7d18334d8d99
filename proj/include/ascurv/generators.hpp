#pragma once

#include <vector>

#include "ascurv/embedded_complex.hpp"

namespace ascurv {

/// Boundary of the n-simplex, vertices at the standard basis of R^{n+1}.
EmbeddedComplex simplex_boundary(int n);

/// The solid n-simplex, same embedding as simplex_boundary.
EmbeddedComplex solid_simplex(int n);

/// Boundary of the n-dimensional cross-polytope; vertex 2i is +e_i, 2i+1 is -e_i.
EmbeddedComplex cross_polytope(int n);

/// Three tetrahedra [0,1,2,k], k = 3, 4, 5, sharing the triangle [0,1,2], embedded in R^4.
EmbeddedComplex triple_book();

/// Seven points in R^5 whose convex hull has boundary f-vector (7, 20, 29, 22, 8):
/// an equilateral triangle suspended by two points, then coned twice.
std::vector<Point> example_seven_points();

/// Same configuration with small deterministic perturbations, in general position.
std::vector<Point> example_seven_points_perturbed();

}  // namespace ascurv
