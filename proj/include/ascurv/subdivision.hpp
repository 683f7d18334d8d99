#pragma once

#include <optional>
#include <vector>

#include "ascurv/embedded_complex.hpp"

namespace ascurv {

/// A subdivision L of K with |L| = |K|, plus the carrier map: for each
/// simplex of L, the unique K-simplex whose relative interior contains it.
struct SubdivisionPair {
    EmbeddedComplex coarse;            // K
    EmbeddedComplex fine;              // L
    std::vector<SimplexId> carrier;    // indexed by L's SimplexId, values are K's SimplexId

    const Simplex& carrier_of(const Simplex& tau) const;
};

/// Replaces every simplex containing sigma by the joins of a new vertex with
/// its faces not containing sigma. The new vertex defaults to the barycenter
/// of sigma and gets id = number of coordinates of e.
///
/// Throws std::invalid_argument if sigma is not in e, is a vertex, or the
/// point is not in the relative interior of sigma.
SubdivisionPair stellar_subdivide(const EmbeddedComplex& e, const Simplex& sigma,
                                  const std::optional<Point>& point = std::nullopt);

/// Flag-complex subdivision. The vertex for a K-simplex has that simplex's
/// SimplexId as its id and its barycenter as coordinates.
SubdivisionPair barycentric_subdivide(const EmbeddedComplex& e);

/// The K-simplex whose relative interior contains the barycenter of tau.
/// Throws std::domain_error when no simplex of K contains it.
SimplexId carrier_lookup(const Simplex& tau, const EmbeddedComplex& fine, const EmbeddedComplex& coarse);

/// carrier_lookup for every simplex of `fine`.
std::vector<SimplexId> compute_carriers(const EmbeddedComplex& fine, const EmbeddedComplex& coarse);

}  // namespace ascurv
