#include "ascurv/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "ascurv/angle_defect_sequence.hpp"

namespace ascurv {

AngleExpression& AngleExpression::operator+=(const AngleExpression& other) {
    constant += other.constant;
    for (const auto& [pair, coeff] : other.terms) {
        terms[pair] += coeff;
    }
    return *this;
}

AngleExpression AngleExpression::scaled(const Rational& factor) const {
    AngleExpression out;
    if (factor.is_zero()) {
        return out;
    }
    const double f = factor.to_double();
    out.constant = constant * factor;
    for (const auto& [pair, coeff] : terms) {
        out.terms.emplace(pair, coeff * f);
    }
    return out;
}

std::vector<AnglePair> AngleExpression::pairs() const {
    std::vector<AnglePair> out;
    for (const auto& [pair, coeff] : terms) {
        if (coeff != 0.0) {
            out.push_back(pair);
        }
    }
    return out;
}

CurvatureValue AngleExpression::evaluate(const AngleTable& table) const {
    CurvatureValue out;
    out.value = constant.to_double();
    double variance = 0.0;
    for (const auto& [pair, coeff] : terms) {
        if (coeff == 0.0) {
            continue;
        }
        const AngleValue& a = table.at(pair.first, pair.second);
        out.value += coeff * a.value;
        variance += coeff * coeff * a.std_error * a.std_error;
        out.exact = out.exact && a.method == AngleMethod::exact;
    }
    out.std_error = std::sqrt(variance);
    return out;
}

SequenceFn CurvatureForms::angle_defect_term_fn() {
    return [](long n) { return angle_defect_term(n); };
}

CurvatureForms::CurvatureForms(const SimplicialComplex& complex, const StratumAssignment& strata, SequenceFn sequence)
    : complex_(complex), strata_(strata), sequence_(std::move(sequence)) {
    if (strata_.size() != complex_.size()) {
        throw std::invalid_argument("missing stratum assignment for some simplices");
    }
}

AngleExpression CurvatureForms::defect(SimplexId eta) const {
    AngleExpression out;
    out.constant = strata_[eta].rank;
    for (SimplexId top : complex_.top_cofaces(eta)) {
        out.terms[{eta, top}] -= 1.0;
    }
    return out;
}

AngleExpression CurvatureForms::stratified_at_vertex(VertexId v) const {
    const SimplexId vid = complex_.id_of(Simplex{v});
    const int n = complex_.dimension();
    AngleExpression out;
    for (SimplexId eta : complex_.star_ids(vid)) {
        const int i = complex_.dim_of(eta);
        if (i <= n - 2) {
            out += defect(eta).scaled(Rational(alternating_sign(i), i + 1));
        }
    }
    return out;
}

AngleExpression CurvatureForms::ascending(SimplexId tau) const {
    const int n = complex_.dimension();
    const int p = complex_.dim_of(tau);
    if (p >= n - 1) {
        return {};
    }
    const Rational a_p = sequence_(p);
    if (a_p.is_zero()) {
        return {};
    }
    AngleExpression inner = defect(tau);
    for (SimplexId eta : complex_.star_ids(tau)) {
        const int i = complex_.dim_of(eta);
        if (i > p && i <= n - 2) {
            inner += defect(eta).scaled(Rational(alternating_sign(i - p), 2));
        }
    }
    return inner.scaled(a_p);
}

AngleExpression CurvatureForms::gauss_bonnet_total() const {
    AngleExpression out;
    for (SimplexId tau = 0; tau < complex_.size(); ++tau) {
        out += ascending(tau).scaled(Rational(alternating_sign(complex_.dim_of(tau))));
    }
    return out;
}

CurvatureModel::CurvatureModel(EmbeddedComplex e, StratumAssignment strata, const AngleConfig& cfg,
                               SequenceFn sequence)
    : e_(std::move(e)),
      strata_(std::move(strata)),
      angles_(e_, cfg),
      forms_(e_.complex(), strata_, std::move(sequence)) {}

CurvatureValue CurvatureModel::generalized_angle_defect(const Simplex& eta) const {
    return evaluate(forms_.defect(complex().id_of(eta)));
}

CurvatureValue CurvatureModel::stratified_curvature_at_vertex(VertexId v) const {
    return evaluate(forms_.stratified_at_vertex(v));
}

CurvatureValue CurvatureModel::ascending_stratified_curvature(const Simplex& tau) const {
    return evaluate(forms_.ascending(complex().id_of(tau)));
}

namespace {

CurvatureValue evaluate_fresh(const AngleExpression& expr, const EmbeddedComplex& e, const AngleConfig& cfg) {
    const AngleTable table(e, expr.pairs(), cfg, cfg.parallel ? AngleTable::Fill::parallel : AngleTable::Fill::serial);
    return expr.evaluate(table);
}

}  // namespace

CurvatureValue generalized_angle_defect(const Simplex& eta, const EmbeddedComplex& e,
                                        const StratumAssignment& strata, const AngleConfig& cfg) {
    const CurvatureForms forms(e.complex(), strata);
    return evaluate_fresh(forms.defect(e.complex().id_of(eta)), e, cfg);
}

CurvatureValue stratified_curvature_at_vertex(VertexId v, const EmbeddedComplex& e, const StratumAssignment& strata,
                                              const AngleConfig& cfg) {
    const CurvatureForms forms(e.complex(), strata);
    return evaluate_fresh(forms.stratified_at_vertex(v), e, cfg);
}

CurvatureValue ascending_stratified_curvature(const Simplex& tau, const EmbeddedComplex& e,
                                              const StratumAssignment& strata, const AngleConfig& cfg) {
    const CurvatureForms forms(e.complex(), strata);
    return evaluate_fresh(forms.ascending(e.complex().id_of(tau)), e, cfg);
}

Rational stratified_coefficient_from_link(const FVector& link_f) {
    Rational out(1);  // i = 0: the cone point itself
    for (std::size_t k = 0; k < link_f.counts.size(); ++k) {
        const long i = static_cast<long>(k) + 1;
        out += Rational(alternating_sign(i), i + 1) * Rational(link_f.counts[k]);
    }
    return out;
}

}  // namespace ascurv
