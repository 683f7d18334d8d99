#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ascurv/angle_table.hpp"
#include "ascurv/rational.hpp"
#include "ascurv/stratification.hpp"

namespace ascurv {

struct CurvatureValue {
    double value = 0.0;
    double std_error = 0.0;
    bool exact = true;  // every contributing angle came from an exact path
};

/// Coefficient sequence for the ascending curvature; normally a_n.
using SequenceFn = std::function<Rational(long)>;

/// constant + sum_k coeff_k * alpha(pair_k). Repeated angles are merged into
/// one coefficient before Monte Carlo error is propagated.
class AngleExpression {
public:
    Rational constant;
    std::map<AnglePair, double> terms;

    AngleExpression& operator+=(const AngleExpression& other);
    /// Multiplies the constant exactly and the angle coefficients in double.
    AngleExpression scaled(const Rational& factor) const;

    std::vector<AnglePair> pairs() const;
    CurvatureValue evaluate(const AngleTable& table) const;
};

/// Curvatures of one complex as symbolic expressions in its solid angles.
class CurvatureForms {
public:
    /// Throws std::invalid_argument when the assignment does not cover the complex.
    CurvatureForms(const SimplicialComplex& complex, const StratumAssignment& strata,
                   SequenceFn sequence = angle_defect_term_fn());

    /// kappa(eta) = rank(eta) - sum_{sigma^n > eta} alpha(eta, sigma).
    AngleExpression defect(SimplexId eta) const;
    /// kappa'(v) = sum_{i=0}^{n-2} (-1)^i / (i+1) sum_{eta^i containing v} kappa(eta^i).
    AngleExpression stratified_at_vertex(VertexId v) const;
    /// K^a(tau^p) = a_p kappa(tau) + a_p/2 sum_{i=p+1}^{n-2} (-1)^{i-p} sum_{eta^i > tau} kappa(eta^i).
    /// Zero for p in {n-1, n}; zero whenever a_p is.
    AngleExpression ascending(SimplexId tau) const;
    /// sum_tau (-1)^p K^a(tau).
    AngleExpression gauss_bonnet_total() const;

    const SimplicialComplex& complex() const { return complex_; }
    Rational sequence(long n) const { return sequence_(n); }

    static SequenceFn angle_defect_term_fn();

private:
    const SimplicialComplex& complex_;
    const StratumAssignment& strata_;
    SequenceFn sequence_;
};

/// Owns a complex, its strata and a fully filled angle table.
class CurvatureModel {
public:
    CurvatureModel(EmbeddedComplex e, StratumAssignment strata, const AngleConfig& cfg,
                   SequenceFn sequence = CurvatureForms::angle_defect_term_fn());

    const EmbeddedComplex& embedded() const { return e_; }
    const SimplicialComplex& complex() const { return e_.complex(); }
    const StratumAssignment& strata() const { return strata_; }
    const AngleTable& angles() const { return angles_; }
    const CurvatureForms& forms() const { return forms_; }

    CurvatureValue evaluate(const AngleExpression& expr) const { return expr.evaluate(angles_); }
    CurvatureValue generalized_angle_defect(const Simplex& eta) const;
    CurvatureValue stratified_curvature_at_vertex(VertexId v) const;
    CurvatureValue ascending_stratified_curvature(const Simplex& tau) const;

private:
    EmbeddedComplex e_;
    StratumAssignment strata_;
    AngleTable angles_;
    CurvatureForms forms_;
};

// One-shot versions that compute only the angles they need.

CurvatureValue generalized_angle_defect(const Simplex& eta, const EmbeddedComplex& e,
                                        const StratumAssignment& strata, const AngleConfig& cfg);
CurvatureValue stratified_curvature_at_vertex(VertexId v, const EmbeddedComplex& e, const StratumAssignment& strata,
                                              const AngleConfig& cfg);
CurvatureValue ascending_stratified_curvature(const Simplex& tau, const EmbeddedComplex& e,
                                              const StratumAssignment& strata, const AngleConfig& cfg);

/// sum_{i=0}^{n-2} (-1)^i / (i+1) f_{i-1}(L) with f_{-1} = 1: the coefficient
/// that multiplies a constant defect spread over the closed star of a cone
/// point whose link L has the given f-vector.
Rational stratified_coefficient_from_link(const FVector& link_f);

}  // namespace ascurv
