#include "ascurv/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ascurv {

const Simplex& SubdivisionPair::carrier_of(const Simplex& tau) const {
    return coarse.complex().simplex(carrier.at(fine.complex().id_of(tau)));
}

SimplexId carrier_lookup(const Simplex& tau, const EmbeddedComplex& fine, const EmbeddedComplex& coarse) {
    const Point b = fine.barycenter(tau);
    const auto& k = coarse.complex();
    for (SimplexId id = 0; id < k.size(); ++id) {
        const auto lambda = barycentric_coordinates(coarse, k.simplex(id), b);
        if (lambda && lambda->minCoeff() > kGeometryTolerance) {
            return id;
        }
    }
    throw std::domain_error("no simplex of the coarse complex contains " + tau.to_string());
}

std::vector<SimplexId> compute_carriers(const EmbeddedComplex& fine, const EmbeddedComplex& coarse) {
    std::vector<SimplexId> out(fine.complex().size());
    for (SimplexId id = 0; id < out.size(); ++id) {
        out[id] = carrier_lookup(fine.complex().simplex(id), fine, coarse);
    }
    return out;
}

SubdivisionPair stellar_subdivide(const EmbeddedComplex& e, const Simplex& sigma, const std::optional<Point>& point) {
    if (!e.complex().contains(sigma)) {
        throw std::invalid_argument("stellar_subdivide: " + sigma.to_string() + " is not in the complex");
    }
    if (sigma.dim() < 1) {
        throw std::invalid_argument("stellar_subdivide: cannot subdivide a vertex");
    }
    const Point x = point.value_or(e.barycenter(sigma));
    const auto lambda = barycentric_coordinates(e, sigma, x);
    if (!lambda || lambda->minCoeff() <= kGeometryTolerance) {
        throw std::invalid_argument("stellar_subdivide: point is not in the relative interior of " +
                                    sigma.to_string());
    }

    const auto new_vertex = static_cast<VertexId>(e.coordinates().size());
    std::vector<Simplex> maximal;
    for (const Simplex& gamma : e.complex().maximal_simplices()) {
        if (!gamma.has_face(sigma)) {
            maximal.push_back(gamma);
            continue;
        }
        for (VertexId s : sigma) {
            std::vector<VertexId> vs;
            for (VertexId v : gamma) {
                if (v != s) {
                    vs.push_back(v);
                }
            }
            vs.push_back(new_vertex);
            maximal.emplace_back(std::move(vs));
        }
    }
    std::vector<Point> coords = e.coordinates();
    coords.push_back(x);

    SubdivisionPair out{e, EmbeddedComplex(SimplicialComplex::from_maximal(std::move(maximal)), std::move(coords)), {}};
    out.carrier = compute_carriers(out.fine, out.coarse);
    return out;
}

SubdivisionPair barycentric_subdivide(const EmbeddedComplex& e) {
    const auto& k = e.complex();
    std::vector<Point> coords(k.size());
    for (SimplexId id = 0; id < k.size(); ++id) {
        coords[id] = e.barycenter(k.simplex(id));
    }
    std::vector<Simplex> maximal;
    for (const Simplex& gamma : k.maximal_simplices()) {
        std::vector<VertexId> order(gamma.begin(), gamma.end());
        do {
            std::vector<VertexId> chain;
            std::vector<VertexId> prefix;
            for (VertexId v : order) {
                prefix.push_back(v);
                chain.push_back(static_cast<VertexId>(k.id_of(Simplex(prefix))));
            }
            maximal.emplace_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    SubdivisionPair out{e, EmbeddedComplex(SimplicialComplex::from_maximal(std::move(maximal)), std::move(coords)), {}};
    out.carrier = compute_carriers(out.fine, out.coarse);
    return out;
}

}  // namespace ascurv
