#include "ascurv/solid_angle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ascurv/cone_sampler.hpp"

namespace ascurv {

std::string to_string(AngleMethod m) { return m == AngleMethod::exact ? "exact" : "monte_carlo"; }

void AngleConfig::validate() const {
    if (samples < 1000) {
        throw std::invalid_argument("angle sampling needs at least 1000 samples");
    }
}

Eigen::MatrixXd tangent_cone_generators(const EmbeddedComplex& e, const Simplex& eta, const Simplex& sigma) {
    if (!sigma.has_face(eta)) {
        throw std::invalid_argument(eta.to_string() + " is not a face of " + sigma.to_string());
    }
    const int n = sigma.dim();
    const int p = eta.dim();
    const int c = n - p;
    if (n == 0) {
        return Eigen::MatrixXd(0, 0);
    }
    // Columns: edges of eta from its first vertex, then the opposite vertices.
    const Point& origin = e.coordinate(eta[0]);
    Eigen::MatrixXd edges(e.ambient_dim(), n);
    Eigen::Index col = 0;
    for (std::size_t i = 1; i < eta.size(); ++i) {
        edges.col(col++) = e.coordinate(eta[i]) - origin;
    }
    for (VertexId v : sigma.complement_of(eta)) {
        edges.col(col++) = e.coordinate(v) - origin;
    }
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(edges);
    const Eigen::MatrixXd r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
    const double scale = std::max(1.0, r.cwiseAbs().maxCoeff());
    for (int i = 0; i < n; ++i) {
        if (std::abs(r(i, i)) <= kGeometryTolerance * scale) {
            throw std::domain_error("degenerate simplex " + sigma.to_string());
        }
    }
    return r.block(p, p, c, c);
}

double planar_cone_angle(const Eigen::MatrixXd& g) {
    const double cross = g(0, 0) * g(1, 1) - g(1, 0) * g(0, 1);
    const double dot = g.col(0).dot(g.col(1));
    return std::atan2(std::abs(cross), dot) / (2.0 * std::numbers::pi);
}

AngleValue estimate_from_hits(std::uint64_t hits, std::uint64_t samples) {
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    const double variance = std::max(p * (1.0 - p), 1.0 / n) / n;
    return {p, std::sqrt(variance), AngleMethod::monte_carlo, samples};
}

namespace {

AngleValue angle_from_cone(const Eigen::MatrixXd& generators, const StreamKey& key, const AngleConfig& cfg,
                           bool parallel_blocks) {
    const auto c = generators.rows();
    if (c == 0) {
        return AngleValue::exact(1.0);
    }
    if (c == 1) {
        return AngleValue::exact(0.5);
    }
    if (c == 2) {
        return AngleValue::exact(planar_cone_angle(generators));
    }
    cfg.validate();
    const ConeSampler sampler(generators);
    const std::uint64_t hits = parallel_blocks ? count_cone_hits_parallel(sampler, key, cfg.samples)
                                               : count_cone_hits_serial(sampler, key, cfg.samples);
    return estimate_from_hits(hits, cfg.samples);
}

}  // namespace

AngleValue solid_angle(const Simplex& eta, const Simplex& sigma, const EmbeddedComplex& e, const AngleConfig& cfg) {
    const auto& k = e.complex();
    const auto eta_id = k.find(eta);
    const auto sigma_id = k.find(sigma);
    if (!eta_id || !sigma_id) {
        throw std::invalid_argument("solid_angle: simplex not in complex");
    }
    const StreamKey key{cfg.seed, *eta_id, *sigma_id};
    return angle_from_cone(tangent_cone_generators(e, eta, sigma), key, cfg, cfg.parallel);
}

}  // namespace ascurv
