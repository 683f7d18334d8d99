#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ascurv/curvature.hpp"
#include "ascurv/subdivision.hpp"

namespace ascurv {

struct CheckConfig {
    AngleConfig angles;
    double z = 4.0;                  // verdict threshold in standard errors
    double exact_tolerance = 1e-9;   // absolute tolerance for noise-free comparisons

    void validate() const;
};

/// One row of a report, usually one simplex.
struct ReportEntry {
    std::string label;
    std::string kind;
    double lhs = 0.0;
    std::optional<double> rhs;       // absent for breakdown-only rows
    double residual = 0.0;
    double std_error = 0.0;
    bool exact = false;
    std::optional<bool> pass;        // absent for breakdown-only rows
};

struct TheoremReport {
    std::string name;
    double lhs = 0.0;
    double lhs_std_error = 0.0;
    std::optional<Rational> rhs_exact;
    double rhs = 0.0;
    double residual = 0.0;
    double std_error = 0.0;
    double z = 4.0;
    bool pass = false;
    std::vector<ReportEntry> entries;
    std::vector<std::string> notes;
};

/// |residual| <= z * std_error, or <= exact_tolerance when std_error == 0.
bool within_threshold(double residual, double std_error, const CheckConfig& cfg);

/// sum_tau (-1)^p K^a(tau) against chi^s(K). `sequence` replaces a_n (for
/// negative controls).
TheoremReport gauss_bonnet_check(const EmbeddedComplex& e, const CheckConfig& cfg,
                                 const StratumOverrides& overrides = {},
                                 SequenceFn sequence = CurvatureForms::angle_defect_term_fn());

/// Same, on an already built model.
TheoremReport gauss_bonnet_check(const CurvatureModel& model, const CheckConfig& cfg);

struct HypothesisResult {
    bool holds = false;
    std::vector<std::string> violations;  // simplices whose link has chi != 2
    bool two_pseudomanifold = false;      // checked on its own, not inferred
};

/// chi(link eta^i) == 2 for every even i with 0 <= i <= n-1.
/// Throws std::invalid_argument unless n is odd and at least 3.
HypothesisResult vanishing_hypothesis_check(const SimplicialComplex& complex);

/// K^a(tau) within z sigma of 0 for every simplex, exactly 0 for odd p and
/// p >= n-1. A failed hypothesis fails the report (entries are still filled).
TheoremReport vanishing_check(const EmbeddedComplex& e, const CheckConfig& cfg);
TheoremReport vanishing_check(const CurvatureModel& model, const CheckConfig& cfg);

/// For every tau^s of L with carrier zeta^p in K: a_p K^a(tau) vs a_s K^a(zeta),
/// and K^a(tau) vs K^a(zeta) when s == p. Also runs the carrier alternating-sum
/// identity over every (tau, alpha) with carrier(tau) a proper face of alpha.
TheoremReport subdivision_relation_check(const SubdivisionPair& pair, const CheckConfig& cfg);

/// Exact sum over eta^i in L with carrier(eta) == alpha^r, eta > tau^s,
/// s < i <= r, of (-1)^{i-s}, compared with (-1)^{r-s}.
/// Throws std::invalid_argument unless carrier(tau) is a proper face of alpha.
bool carrier_alternating_sum_check(const SubdivisionPair& pair, const Simplex& tau, const Simplex& alpha);
/// The sum itself.
long carrier_alternating_sum(const SubdivisionPair& pair, const Simplex& tau, const Simplex& alpha);

/// Runs the alternating angle-sum identity on every top simplex of an odd
/// dimensional complex and every even face of dimension <= n-2.
TheoremReport sommerville_report(const EmbeddedComplex& e, const CheckConfig& cfg);

}  // namespace ascurv
