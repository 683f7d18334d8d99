#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "ascurv/embedded_complex.hpp"

namespace ascurv {

enum class AngleMethod { exact, monte_carlo };

std::string to_string(AngleMethod m);

/// Normalized solid angle: the full sphere has measure 1 in every dimension.
struct AngleValue {
    double value = 0.0;
    double std_error = 0.0;  // zero iff method == exact
    AngleMethod method = AngleMethod::exact;
    std::uint64_t samples = 0;

    static AngleValue exact(double v) { return {v, 0.0, AngleMethod::exact, 0}; }
};

struct AngleConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    bool parallel = true;

    /// Throws std::invalid_argument when samples < 1000.
    void validate() const;
};

/// The cone of sigma along eta, written intrinsically: c = dim sigma - dim eta
/// generators (the vertices of sigma opposite eta, projected onto the
/// orthogonal complement of aff(eta) inside aff(sigma)) expressed in an
/// orthonormal basis of that c-dimensional complement. The matrix is upper
/// triangular. For c == 0 it is 0 x 0.
Eigen::MatrixXd tangent_cone_generators(const EmbeddedComplex& e, const Simplex& eta, const Simplex& sigma);

/// Closed-form planar angle between the two generators of a 2 x 2 cone, normalized by 2 pi.
double planar_cone_angle(const Eigen::MatrixXd& generators);

/// alpha(eta, sigma). Codimension 0 and 1 are exact (1 and 1/2), codimension 2
/// is the closed-form dihedral angle, higher codimension is a Monte Carlo
/// estimate whose random stream is keyed by (cfg.seed, id(eta), id(sigma)).
/// With cfg.parallel the sample blocks are spread over OpenMP threads; the
/// estimate is bit-identical either way.
///
/// Throws std::invalid_argument if eta is not a face of sigma or either is
/// missing from the complex; std::domain_error on a degenerate simplex.
AngleValue solid_angle(const Simplex& eta, const Simplex& sigma, const EmbeddedComplex& e, const AngleConfig& cfg);

/// Binomial estimate from a hit count. The standard error is floored at 1/N
/// so a Monte Carlo value never reports zero uncertainty.
AngleValue estimate_from_hits(std::uint64_t hits, std::uint64_t samples);

}  // namespace ascurv
