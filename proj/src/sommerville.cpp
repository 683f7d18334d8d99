#include "ascurv/sommerville.hpp"

#include <cmath>
#include <stdexcept>

namespace ascurv {

namespace {

template <typename AngleOf>
SommervilleResidual residual(const Simplex& sigma, const Simplex& tau, AngleOf angle_of) {
    const int n = sigma.dim();
    const int p = tau.dim();
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("sommerville_check: dim sigma must be odd and at least 3");
    }
    if (p % 2 != 0 || p > n - 2) {
        throw std::invalid_argument("sommerville_check: dim tau must be even and at most n-2");
    }
    if (!sigma.has_face(tau)) {
        throw std::invalid_argument("sommerville_check: tau is not a face of sigma");
    }

    const AngleValue at_tau = angle_of(tau);
    SommervilleResidual out;
    double full_var = 4.0 * at_tau.std_error * at_tau.std_error;
    double reduced_sum = 0.0;
    double reduced_var = 0.0;
    for (const Simplex& eta : sigma.faces()) {
        const int i = eta.dim();
        if (i <= p || !eta.has_face(tau)) {
            continue;
        }
        const AngleValue a = angle_of(eta);
        const double var = a.std_error * a.std_error;
        out.full_lhs += alternating_sign(i - p + 1) * a.value;
        full_var += var;
        if (i <= n - 2) {
            reduced_sum += alternating_sign(i + 1) * a.value;
            reduced_var += var;
        }
    }
    out.full_rhs = 2.0 * at_tau.value;
    out.full_residual = out.full_lhs - out.full_rhs;
    out.full_std_error = std::sqrt(full_var);

    out.reduced_lhs = at_tau.value - 0.5 * reduced_sum;
    out.reduced_rhs = Rational(1, 2) - Rational(n - p, 4);
    out.reduced_residual = out.reduced_lhs - out.reduced_rhs.to_double();
    out.reduced_std_error = std::sqrt(at_tau.std_error * at_tau.std_error + 0.25 * reduced_var);
    return out;
}

}  // namespace

SommervilleResidual sommerville_check(const Simplex& sigma, const Simplex& tau, const EmbeddedComplex& e,
                                      const AngleConfig& cfg) {
    return residual(sigma, tau, [&](const Simplex& eta) { return solid_angle(eta, sigma, e, cfg); });
}

SommervilleResidual sommerville_check(const Simplex& sigma, const Simplex& tau, const SimplicialComplex& complex,
                                      const AngleTable& table) {
    const SimplexId top = complex.id_of(sigma);
    return residual(sigma, tau, [&](const Simplex& eta) { return table.at(complex.id_of(eta), top); });
}

}  // namespace ascurv
