#pragma once

#include <map>
#include <string>
#include <vector>

#include "ascurv/rational.hpp"
#include "ascurv/simplicial_complex.hpp"

namespace ascurv {

/// How a stratum index was decided.
///   exact     - forced by coface counts, or by recognizing a 1-dimensional link
///   heuristic - Euler characteristic of a higher-dimensional link matched
///   fallback  - no candidate matched; assigned the catch-all stratum r = 2
///   override  - supplied by the caller
enum class StratumTier { exact, heuristic, fallback, override_ };

std::string to_string(StratumTier t);

struct StratumRecord {
    int r = 2;
    Rational rank{1};  // r / 2
    StratumTier tier = StratumTier::exact;
};

/// Per-simplex stratum index r (the simplex lies in C_r, whose points have a
/// neighbourhood like the open cone on r points times R^{n-1}) and the
/// stratification rank r/2. Indexed by SimplexId of the complex it was built for.
class StratumAssignment {
public:
    StratumAssignment() = default;
    explicit StratumAssignment(std::vector<StratumRecord> records, std::vector<std::string> warnings = {})
        : records_(std::move(records)), warnings_(std::move(warnings)) {}

    std::size_t size() const { return records_.size(); }
    const StratumRecord& operator[](SimplexId id) const { return records_.at(id); }
    const std::vector<StratumRecord>& records() const { return records_; }
    /// One line per heuristic or fallback decision.
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::vector<StratumRecord> records_;
    std::vector<std::string> warnings_;
};

using StratumOverrides = std::map<Simplex, int>;

/// Tiered stratum classification.
///
/// Top simplices get r = 2 and (n-1)-simplices their coface count. A lower
/// simplex looks at the coface counts S of the (n-1)-simplices in its star:
/// if S has no value other than 2, or two distinct values other than 2, then
/// r = 2. Otherwise the single candidate r0 is confirmed by checking that the
/// link looks like the (n-1-p)-fold suspension of r0 points: an exact graph
/// test when the link is 1-dimensional, an Euler characteristic test above
/// that. Unconfirmed candidates fall back to r = 2 with a warning.
///
/// Throws std::invalid_argument when an override names a simplex not in K
/// or a negative r.
StratumAssignment stratify(const SimplicialComplex& complex, const StratumOverrides& overrides = {});

/// chi^s = sum over simplices of rank * (-1)^dim.
Rational stratified_euler_characteristic(const SimplicialComplex& complex, const StratumAssignment& assignment);

/// Euler characteristic of the k-fold suspension of r points.
long suspended_points_euler_characteristic(int points, int k);

/// True iff the 1-dimensional complex `graph` is homeomorphic to the
/// suspension of r points: a theta graph with r arcs between two branch
/// vertices (r >= 3), a circle (r = 2), an arc (r = 1), or two points (r = 0).
bool is_suspension_of_points(const SimplicialComplex& graph, int r);

}  // namespace ascurv
