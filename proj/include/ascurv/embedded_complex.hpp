#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ascurv/simplicial_complex.hpp"

namespace ascurv {

using Point = Eigen::VectorXd;

/// Relative tolerance for affine independence and membership tests.
inline constexpr double kGeometryTolerance = 1e-9;

/// A simplicial complex with a coordinate for every vertex id 0..V-1.
///
/// Coordinates may exist for ids that are not vertices of the complex (for
/// instance interior points handed to a hull); every vertex of the complex
/// must have one. Every simplex is affinely independent.
class EmbeddedComplex {
public:
    EmbeddedComplex() = default;
    /// Throws std::invalid_argument on missing coordinates, ragged dimensions
    /// or a degenerate maximal simplex.
    EmbeddedComplex(SimplicialComplex complex, std::vector<Point> coordinates);

    const SimplicialComplex& complex() const { return complex_; }
    int ambient_dim() const { return ambient_dim_; }
    int dimension() const { return complex_.dimension(); }
    const std::vector<Point>& coordinates() const { return coordinates_; }
    const Point& coordinate(VertexId v) const { return coordinates_.at(v); }

    /// d x (k+1) matrix whose columns are the vertices of `s`.
    Eigen::MatrixXd vertex_matrix(const Simplex& s) const;
    Point barycenter(const Simplex& s) const;

private:
    SimplicialComplex complex_;
    std::vector<Point> coordinates_;
    int ambient_dim_ = 0;
};

/// True iff the points are affinely independent (relative tolerance kGeometryTolerance).
bool affinely_independent(const Eigen::MatrixXd& columns);

/// Barycentric coordinates of x with respect to simplex s, or nullopt when x
/// is farther than `tol` (relative to the simplex scale) from its affine hull.
std::optional<Eigen::VectorXd> barycentric_coordinates(const EmbeddedComplex& e, const Simplex& s,
                                                       const Point& x, double tol = kGeometryTolerance);

/// True iff x lies in the closed simplex s (within tol).
bool simplex_contains(const EmbeddedComplex& e, const Simplex& s, const Point& x, double tol = kGeometryTolerance);

/// True iff x lies in |K|.
bool complex_contains(const EmbeddedComplex& e, const Point& x, double tol = kGeometryTolerance);

/// Embedded join: left at (x, 0, 0), right at (0, y, 1) in R^{d1 + d2 + 1}.
EmbeddedComplex embedded_join(const EmbeddedComplex& left, const EmbeddedComplex& right);
/// Cone with apex (centroid, 1) in R^{d+1}.
EmbeddedComplex embedded_cone(const EmbeddedComplex& base);
/// Suspension with apices (centroid, +1) and (centroid, -1) in R^{d+1}.
EmbeddedComplex embedded_suspension(const EmbeddedComplex& base);

}  // namespace ascurv
