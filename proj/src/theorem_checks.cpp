#include "ascurv/theorem_checks.hpp"

#include <cmath>
#include <stdexcept>

#include "ascurv/angle_defect_sequence.hpp"
#include "ascurv/sommerville.hpp"

namespace ascurv {

void CheckConfig::validate() const {
    angles.validate();
    if (!(z > 0.0)) {
        throw std::invalid_argument("z threshold must be positive");
    }
}

bool within_threshold(double residual, double std_error, const CheckConfig& cfg) {
    if (std_error == 0.0) {
        return std::abs(residual) <= cfg.exact_tolerance;
    }
    return std::abs(residual) <= cfg.z * std_error;
}

namespace {

/// Puts the worst entry (largest residual in standard errors) on the report's top line.
void summarize_worst(TheoremReport& report) {
    double worst = -1.0;
    for (const ReportEntry& e : report.entries) {
        if (!e.rhs) {
            continue;
        }
        const double score = e.std_error > 0 ? std::abs(e.residual) / e.std_error
                                             : (e.residual == 0.0 ? 0.0 : std::abs(e.residual) * 1e12);
        if (score > worst) {
            worst = score;
            report.lhs = e.lhs;
            report.lhs_std_error = e.std_error;
            report.rhs = *e.rhs;
            report.residual = e.residual;
            report.std_error = e.std_error;
        }
    }
}

bool all_entries_pass(const TheoremReport& report) {
    for (const ReportEntry& e : report.entries) {
        if (e.pass && !*e.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace

TheoremReport gauss_bonnet_check(const CurvatureModel& model, const CheckConfig& cfg) {
    cfg.validate();
    const auto& k = model.complex();
    if (k.dimension() < 2) {
        throw std::invalid_argument("gauss_bonnet_check requires dimension n >= 2");
    }
    TheoremReport report;
    report.name = "gauss-bonnet";
    report.z = cfg.z;

    const CurvatureValue total = model.evaluate(model.forms().gauss_bonnet_total());
    const Rational chi_s = stratified_euler_characteristic(k, model.strata());
    report.lhs = total.value;
    report.lhs_std_error = total.std_error;
    report.rhs_exact = chi_s;
    report.rhs = chi_s.to_double();
    report.residual = report.lhs - report.rhs;
    report.std_error = total.std_error;
    report.pass = within_threshold(report.residual, report.std_error, cfg);

    for (SimplexId tau = 0; tau < k.size(); ++tau) {
        const CurvatureValue v = model.evaluate(model.forms().ascending(tau));
        ReportEntry row;
        row.label = k.simplex(tau).to_string();
        row.kind = "ascending";
        row.lhs = v.value;
        row.residual = v.value;
        row.std_error = v.std_error;
        row.exact = v.exact;
        report.entries.push_back(std::move(row));
    }
    for (const std::string& w : model.strata().warnings()) {
        report.notes.push_back("stratification: " + w);
    }
    return report;
}

TheoremReport gauss_bonnet_check(const EmbeddedComplex& e, const CheckConfig& cfg, const StratumOverrides& overrides,
                                 SequenceFn sequence) {
    const CurvatureModel model(e, stratify(e.complex(), overrides), cfg.angles, std::move(sequence));
    return gauss_bonnet_check(model, cfg);
}

HypothesisResult vanishing_hypothesis_check(const SimplicialComplex& complex) {
    const int n = complex.dimension();
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("vanishing hypothesis needs odd n >= 3");
    }
    HypothesisResult out;
    for (int i = 0; i <= n - 1; i += 2) {
        for (SimplexId id : complex.ids_of_dim(i)) {
            const long chi = link(complex.simplex(id), complex).euler_characteristic();
            if (chi != 2) {
                out.violations.push_back(complex.simplex(id).to_string() + " (chi(link) = " + std::to_string(chi) +
                                         ")");
            }
        }
    }
    out.holds = out.violations.empty();
    out.two_pseudomanifold = is_two_pseudomanifold(complex);
    return out;
}

TheoremReport vanishing_check(const CurvatureModel& model, const CheckConfig& cfg) {
    cfg.validate();
    const auto& k = model.complex();
    const int n = k.dimension();
    const HypothesisResult hyp = vanishing_hypothesis_check(k);

    TheoremReport report;
    report.name = "vanishing";
    report.z = cfg.z;
    report.rhs_exact = Rational(0);
    if (!hyp.holds) {
        report.notes.push_back("hypothesis fails: chi(link) != 2 at " + std::to_string(hyp.violations.size()) +
                               " even-dimensional simplices");
        for (const std::string& v : hyp.violations) {
            report.notes.push_back("violation: " + v);
        }
    }
    if (!hyp.two_pseudomanifold) {
        report.notes.push_back("complex is not a two-pseudomanifold");
    }

    for (SimplexId tau = 0; tau < k.size(); ++tau) {
        const int p = k.dim_of(tau);
        const CurvatureValue v = model.evaluate(model.forms().ascending(tau));
        ReportEntry row;
        row.label = k.simplex(tau).to_string();
        row.lhs = v.value;
        row.rhs = 0.0;
        row.residual = v.value;
        row.std_error = v.std_error;
        row.exact = v.exact;
        if (p % 2 == 1 || p >= n - 1) {
            row.kind = "exact-zero";
            row.pass = (v.value == 0.0 && v.std_error == 0.0);
        } else {
            row.kind = "ascending";
            row.pass = within_threshold(v.value, v.std_error, cfg);
        }
        report.entries.push_back(std::move(row));
    }
    summarize_worst(report);
    report.pass = hyp.holds && hyp.two_pseudomanifold && all_entries_pass(report);
    return report;
}

TheoremReport vanishing_check(const EmbeddedComplex& e, const CheckConfig& cfg) {
    const CurvatureModel model(e, stratify(e.complex()), cfg.angles);
    return vanishing_check(model, cfg);
}

long carrier_alternating_sum(const SubdivisionPair& pair, const Simplex& tau, const Simplex& alpha) {
    const auto& l = pair.fine.complex();
    const auto& k = pair.coarse.complex();
    const auto tau_id = l.find(tau);
    const auto alpha_id = k.find(alpha);
    if (!tau_id || !alpha_id) {
        throw std::invalid_argument("carrier_alternating_sum: simplex not in its complex");
    }
    const Simplex& zeta = k.simplex(pair.carrier[*tau_id]);
    if (!alpha.has_face(zeta) || alpha == zeta) {
        throw std::invalid_argument("carrier_alternating_sum: carrier of " + tau.to_string() +
                                    " must be a proper face of " + alpha.to_string());
    }
    const int s = tau.dim();
    const int r = alpha.dim();
    long sum = 0;
    for (SimplexId eta : l.star_ids(*tau_id)) {
        const int i = l.dim_of(eta);
        if (i > s && i <= r && pair.carrier[eta] == *alpha_id) {
            sum += alternating_sign(i - s);
        }
    }
    return sum;
}

bool carrier_alternating_sum_check(const SubdivisionPair& pair, const Simplex& tau, const Simplex& alpha) {
    return carrier_alternating_sum(pair, tau, alpha) == alternating_sign(alpha.dim() - tau.dim());
}

TheoremReport subdivision_relation_check(const SubdivisionPair& pair, const CheckConfig& cfg) {
    cfg.validate();
    const auto& l = pair.fine.complex();
    const auto& k = pair.coarse.complex();
    const int n = k.dimension();
    if (n < 2 || l.dimension() != n) {
        throw std::invalid_argument("subdivision check needs n >= 2 and equal dimensions");
    }
    const CurvatureModel fine(pair.fine, stratify(l), cfg.angles);
    const CurvatureModel coarse(pair.coarse, stratify(k), cfg.angles);

    TheoremReport report;
    report.name = "subdivision";
    report.z = cfg.z;
    report.rhs_exact = Rational(0);

    for (SimplexId tau = 0; tau < l.size(); ++tau) {
        const SimplexId zeta = pair.carrier.at(tau);
        const int s = l.dim_of(tau);
        const int p = k.dim_of(zeta);
        const Rational a_s = angle_defect_term(s);
        const Rational a_p = angle_defect_term(p);
        const CurvatureValue kt = fine.evaluate(fine.forms().ascending(tau));
        const CurvatureValue kz = coarse.evaluate(coarse.forms().ascending(zeta));
        const bool tau_zero = s % 2 == 1 || s >= n - 1;
        const bool zeta_zero = p % 2 == 1 || p >= n - 1;
        const bool analytic_zero = (tau_zero || a_p.is_zero()) && (zeta_zero || a_s.is_zero());
        const std::string label = l.simplex(tau).to_string() + " in " + k.simplex(zeta).to_string();

        auto add_row = [&](const std::string& kind, double lhs, double rhs, double sd, bool exact, bool zero_row) {
            ReportEntry row;
            row.label = label;
            row.kind = kind;
            row.lhs = lhs;
            row.rhs = rhs;
            row.residual = lhs - rhs;
            row.std_error = sd;
            row.exact = exact;
            row.pass = zero_row ? (lhs == 0.0 && rhs == 0.0) : within_threshold(lhs - rhs, sd, cfg);
            report.entries.push_back(std::move(row));
        };

        const double ap = a_p.to_double();
        const double as = a_s.to_double();
        const double lhs = a_p.is_zero() ? 0.0 : ap * kt.value;
        const double rhs = a_s.is_zero() ? 0.0 : as * kz.value;
        add_row("weighted", lhs, rhs, std::hypot(ap * kt.std_error, as * kz.std_error), kt.exact && kz.exact,
                analytic_zero);
        if (s == p) {
            add_row("equal", kt.value, kz.value, std::hypot(kt.std_error, kz.std_error), kt.exact && kz.exact,
                    tau_zero && zeta_zero);
        }
    }

    std::size_t identity_cases = 0;
    for (SimplexId tau = 0; tau < l.size(); ++tau) {
        const Simplex& zeta = k.simplex(pair.carrier[tau]);
        for (SimplexId alpha : k.star_ids(pair.carrier[tau])) {
            if (k.simplex(alpha) == zeta) {
                continue;
            }
            ++identity_cases;
            const long sum = carrier_alternating_sum(pair, l.simplex(tau), k.simplex(alpha));
            const long expected = alternating_sign(k.dim_of(alpha) - l.dim_of(tau));
            if (sum != expected) {
                ReportEntry row;
                row.label = l.simplex(tau).to_string() + " in " + k.simplex(alpha).to_string();
                row.kind = "carrier-sum";
                row.lhs = static_cast<double>(sum);
                row.rhs = static_cast<double>(expected);
                row.residual = row.lhs - *row.rhs;
                row.exact = true;
                row.pass = false;
                report.entries.push_back(std::move(row));
            }
        }
    }
    report.notes.push_back("carrier alternating-sum identity checked on " + std::to_string(identity_cases) +
                           " (tau, alpha) pairs");
    summarize_worst(report);
    report.pass = all_entries_pass(report);
    return report;
}

TheoremReport sommerville_report(const EmbeddedComplex& e, const CheckConfig& cfg) {
    cfg.validate();
    const auto& k = e.complex();
    const int n = k.dimension();
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("sommerville check needs odd dimension n >= 3");
    }
    TheoremReport report;
    report.name = "sommerville";
    report.z = cfg.z;
    report.rhs_exact = Rational(0);
    const AngleTable table(e, cfg.angles);
    for (SimplexId top : k.ids_of_dim(n)) {
        const Simplex& sigma = k.simplex(top);
        for (const Simplex& tau : sigma.faces()) {
            if (tau.dim() % 2 != 0 || tau.dim() > n - 2) {
                continue;
            }
            const SommervilleResidual r = sommerville_check(sigma, tau, k, table);
            const std::string label = tau.to_string() + " in " + sigma.to_string();
            ReportEntry full{label, "full", r.full_lhs, r.full_rhs, r.full_residual, r.full_std_error,
                             r.full_std_error == 0.0, within_threshold(r.full_residual, r.full_std_error, cfg)};
            ReportEntry reduced{label,
                                "reduced",
                                r.reduced_lhs,
                                r.reduced_rhs.to_double(),
                                r.reduced_residual,
                                r.reduced_std_error,
                                r.reduced_std_error == 0.0,
                                within_threshold(r.reduced_residual, r.reduced_std_error, cfg)};
            report.entries.push_back(std::move(full));
            report.entries.push_back(std::move(reduced));
        }
    }
    summarize_worst(report);
    report.pass = all_entries_pass(report);
    return report;
}

}  // namespace ascurv
