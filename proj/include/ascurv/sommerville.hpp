#pragma once

#include "ascurv/rational.hpp"
#include "ascurv/angle_table.hpp"

namespace ascurv {

/// Both sides of the alternating angle-sum identity for a simplex sigma of odd
/// dimension n >= 3 along an even-dimensional face tau (p <= n - 2), in its
/// two equivalent forms:
///
///   full form:    sum_{i=p+1}^{n} (-1)^{i-p+1} sum_{tau < eta^i < sigma} alpha(eta^i) = 2 alpha(tau)
///   reduced form: alpha(tau) - 1/2 sum_{i=p+1}^{n-2} (-1)^{i+1} sum alpha(eta^i) = 1/2 - (n-p)/4
struct SommervilleResidual {
    double full_lhs = 0.0;
    double full_rhs = 0.0;
    double full_residual = 0.0;
    double full_std_error = 0.0;

    double reduced_lhs = 0.0;
    Rational reduced_rhs;
    double reduced_residual = 0.0;
    double reduced_std_error = 0.0;
};

/// Throws std::invalid_argument on parity or range violations, or if tau is
/// not a face of sigma.
SommervilleResidual sommerville_check(const Simplex& sigma, const Simplex& tau, const EmbeddedComplex& e,
                                      const AngleConfig& cfg);

/// Same, reading the angles from a table of `complex` (sigma must be a top simplex of it).
SommervilleResidual sommerville_check(const Simplex& sigma, const Simplex& tau, const SimplicialComplex& complex,
                                      const AngleTable& table);

}  // namespace ascurv
