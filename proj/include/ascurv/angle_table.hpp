#pragma once

#include <utility>
#include <vector>

#include "ascurv/solid_angle.hpp"

namespace ascurv {

/// (face id, top simplex id) inside one complex.
using AnglePair = std::pair<SimplexId, SimplexId>;

/// Every pair (eta, sigma) with sigma an n-simplex and eta a face of sigma.
std::vector<AnglePair> all_angle_pairs(const SimplicialComplex& complex);

/// alpha(eta, sigma) computed once per pair and shared read-only afterwards.
///
/// Each pair draws from its own random substream, so the table is identical
/// whether it is filled serially or in parallel, and identical to what
/// `solid_angle` returns for the same pair and seed.
class AngleTable {
public:
    enum class Fill { serial, parallel };

    AngleTable() = default;
    /// All pairs of the complex; parallel when cfg.parallel.
    AngleTable(const EmbeddedComplex& e, const AngleConfig& cfg);
    AngleTable(const EmbeddedComplex& e, std::vector<AnglePair> pairs, const AngleConfig& cfg, Fill fill);

    /// Throws std::out_of_range for a pair that was not computed.
    const AngleValue& at(SimplexId face, SimplexId top) const;
    bool contains(SimplexId face, SimplexId top) const;
    std::size_t size() const { return pairs_.size(); }
    const std::vector<AnglePair>& pairs() const { return pairs_; }
    const std::vector<AngleValue>& values() const { return values_; }

private:
    std::vector<AnglePair> pairs_;  // sorted
    std::vector<AngleValue> values_;
};

}  // namespace ascurv
