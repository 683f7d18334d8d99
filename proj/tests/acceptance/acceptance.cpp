#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "ascurv/angle_defect_sequence.hpp"
#include "ascurv/complex_io.hpp"
#include "ascurv/convex_hull.hpp"
#include "ascurv/generators.hpp"
#include "ascurv/report.hpp"
#include "ascurv/sommerville.hpp"

using namespace ascurv;

namespace {

constexpr std::uint64_t kSamples = 1'000'000;
constexpr std::uint64_t kSeed = 20240611;
constexpr double kZ = 4.0;
constexpr double kExactTolerance = 1e-12;
constexpr double kSommervilleSigmaBound = 1e-3;
constexpr std::uint64_t kDeterminismSamples = 50'000;

struct Outcome {
    bool pass = false;
    std::string detail;
};

CheckConfig check_config(std::uint64_t samples = kSamples) {
    CheckConfig cfg;
    cfg.angles.samples = samples;
    cfg.angles.seed = kSeed;
    cfg.z = kZ;
    cfg.exact_tolerance = kExactTolerance;
    return cfg;
}

std::string fmt(double x, int precision = 4) {
    return format_double(x, precision);
}

std::string z_score(const TheoremReport& r) {
    if (r.std_error == 0.0) {
        return "exact";
    }
    return fmt(std::abs(r.residual) / r.std_error, 2) + " sigma";
}

Outcome sequence_values() {
    const std::vector<Rational> expected = {1, 0, Rational(-1, 2), 0, 1, 0, Rational(-17, 4), 0, 31, 0,
                                            Rational(-691, 2), 0, 5461, 0, Rational(-929569, 8), 0, 3202291, 0};
    bool ok = true;
    for (std::size_t n = 0; n < expected.size(); ++n) {
        ok = ok && angle_defect_term(static_cast<long>(n)) == expected[n];
    }
    const bool recursion = verify_ads_recursion(50);
    return {ok && recursion, std::string("a_0..a_17 ") + (ok ? "match" : "MISMATCH") + ", recursion n<=50 " +
                                 (recursion ? "holds" : "FAILS")};
}

Outcome bernoulli_identities() {
    int failures = 0;
    failures += bernoulli_binomial_sum_identity(0) ? 0 : 1;
    for (long n = 2; n <= 50; ++n) {
        failures += bernoulli_binomial_sum_identity(n) ? 0 : 1;
    }
    for (long n = 0; n <= 50; ++n) {
        failures += bernoulli_half_identity(n) ? 0 : 1;
        failures += bernoulli_doubling_identity(n) ? 0 : 1;
    }
    return {failures == 0, "150 exact identity instances, " + std::to_string(failures) + " failures"};
}

Outcome sommerville() {
    std::mt19937_64 rng(kSeed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> jitter(-0.15, 0.15);
    const AngleConfig angles = check_config().angles;
    int cases = 0;
    int failures = 0;
    double worst_z = 0.0;
    double max_sigma = 0.0;
    auto record = [&](const SommervilleResidual& r) {
        for (const auto& [res, sd] : {std::pair{r.full_residual, r.full_std_error},
                                      std::pair{r.reduced_residual, r.reduced_std_error}}) {
            ++cases;
            const double z = sd > 0 ? std::abs(res) / sd : (res == 0.0 ? 0.0 : INFINITY);
            worst_z = std::max(worst_z, z);
            max_sigma = std::max(max_sigma, sd);
            failures += z <= kZ ? 0 : 1;
        }
    };

    for (int t = 0; t < 20; ++t) {
        std::vector<Point> pts;
        for (int i = 0; i < 4; ++i) {
            pts.push_back(Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng)));
        }
        const EmbeddedComplex e(SimplicialComplex::from_maximal({Simplex{0, 1, 2, 3}}), pts);
        const AngleTable table(e, angles);
        for (VertexId v = 0; v < 4; ++v) {
            record(sommerville_check(Simplex{0, 1, 2, 3}, Simplex{v}, e.complex(), table));
        }
    }
    const Simplex five{0, 1, 2, 3, 4, 5};
    for (int t = 0; t < 5; ++t) {
        std::vector<Point> pts;
        for (int i = 0; i < 6; ++i) {
            Point p = Point::Unit(6, i);
            for (int j = 0; j < 6; ++j) {
                p[j] += jitter(rng);
            }
            pts.push_back(p);
        }
        const EmbeddedComplex e(SimplicialComplex::from_maximal({five}), pts);
        const AngleTable table(e, angles);
        for (const Simplex& tau : five.faces()) {
            if (tau.dim() == 0 || tau.dim() == 2) {
                record(sommerville_check(five, tau, e.complex(), table));
            }
        }
    }
    const bool sigma_ok = max_sigma <= kSommervilleSigmaBound;
    return {failures == 0 && sigma_ok, std::to_string(cases) + " residuals, " + std::to_string(failures) +
                                           " beyond 4 sigma, worst " + fmt(worst_z, 3) + " sigma, max sigma " +
                                           fmt(max_sigma, 3) + (sigma_ok ? "" : " (above bound)")};
}

struct Models {
    EmbeddedComplex sphere3 = simplex_boundary(4);
    EmbeddedComplex joined = embedded_join(simplex_boundary(2), simplex_boundary(2));
    CurvatureModel sphere3_model{sphere3, stratify(sphere3.complex()), check_config().angles};
    CurvatureModel joined_model{joined, stratify(joined.complex()), check_config().angles};
};

Outcome gauss_bonnet(const Models& m) {
    const CheckConfig cfg = check_config();
    const TheoremReport s2 = gauss_bonnet_check(simplex_boundary(3), cfg);
    const bool s2_ok = s2.pass && s2.std_error == 0.0 && s2.rhs_exact == Rational(2) &&
                       std::abs(s2.lhs - 2.0) <= kExactTolerance;
    const TheoremReport s3 = gauss_bonnet_check(m.sphere3_model, cfg);
    const TheoremReport jn = gauss_bonnet_check(m.joined_model, cfg);
    const auto book = triple_book();
    const Rational book_chi = stratified_euler_characteristic(book.complex(), stratify(book.complex()));
    const TheoremReport tb = gauss_bonnet_check(book, cfg);
    const bool ok = s2_ok && s3.pass && s3.rhs_exact == Rational(0) && jn.pass && jn.rhs_exact == Rational(0) &&
                    tb.pass && book_chi == Rational(0);
    return {ok, "dS3 lhs " + fmt(s2.lhs, 15) + " (" + z_score(s2) + "); dS4 " + fmt(s3.lhs) + " (" + z_score(s3) +
                    "); join " + fmt(jn.lhs) + " (" + z_score(jn) + "); triple-book chi^s " + book_chi.to_string() +
                    ", lhs " + fmt(tb.lhs) + " (" + z_score(tb) + ")"};
}

Outcome vanishing(const Models& m) {
    const CheckConfig cfg = check_config();
    const TheoremReport s3 = vanishing_check(m.sphere3_model, cfg);
    const TheoremReport jn = vanishing_check(m.joined_model, cfg);
    const HypothesisResult book = vanishing_hypothesis_check(triple_book().complex());
    return {s3.pass && jn.pass && !book.holds,
            "dS4 " + std::to_string(s3.entries.size()) + " simplices " + (s3.pass ? "ok" : "FAIL") + " (worst " +
                z_score(s3) + "); join " + std::to_string(jn.entries.size()) + " simplices " +
                (jn.pass ? "ok" : "FAIL") + " (worst " + z_score(jn) + "); triple-book hypothesis " +
                (book.holds ? "HOLDS" : "fails") + " at " + std::to_string(book.violations.size()) + " simplices"};
}

Outcome contrast(const Models& m) {
    const auto& model = m.sphere3_model;
    bool ok = true;
    double min_defect_margin = INFINITY;
    double worst_z = 0.0;
    for (VertexId v : model.complex().vertices()) {
        const CurvatureValue kappa = model.generalized_angle_defect(Simplex{v});
        const CurvatureValue ka = model.ascending_stratified_curvature(Simplex{v});
        const double margin = kappa.value - kZ * kappa.std_error;
        min_defect_margin = std::min(min_defect_margin, margin);
        const double z = std::abs(ka.value) / ka.std_error;
        worst_z = std::max(worst_z, z);
        ok = ok && margin > 0.0 && z <= kZ;
    }
    const CurvatureValue k0 = model.generalized_angle_defect(Simplex{0});
    return {ok, "kappa(v0) = " + fmt(k0.value) + " +- " + fmt(k0.std_error, 2) + ", min kappa - 4 sigma " +
                    fmt(min_defect_margin) + ", worst |K^a(v)| " + fmt(worst_z, 3) + " sigma"};
}

Outcome subdivision() {
    const CheckConfig cfg = check_config();
    const auto s2 = simplex_boundary(3);
    const std::vector<std::pair<std::string, SubdivisionPair>> pairs = {
        {"stellar facet", stellar_subdivide(s2, Simplex{0, 1, 2})},
        {"stellar edge", stellar_subdivide(s2, Simplex{0, 1})},
        {"barycentric", barycentric_subdivide(s2)},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [name, pair] : pairs) {
        const TheoremReport r = subdivision_relation_check(pair, cfg);
        std::size_t rows = 0;
        for (const ReportEntry& e : r.entries) {
            rows += e.pass ? 1 : 0;
        }
        ok = ok && r.pass;
        detail += (detail.empty() ? "" : "; ") + name + " " + (r.pass ? "ok" : "FAIL") + " (" +
                  std::to_string(rows) + " rows, " + r.notes.front() + ")";
    }
    return {ok, detail};
}

Outcome seven_points() {
    const std::string path = std::string(ASCURV_DATA_DIR) + "/seven_points.json";
    const std::vector<Point> pts = parse_points(read_text(path), path);
    const PolytopeBoundary lattice = boundary_face_lattice(pts);
    const FVector f = lattice.f_vector();
    const bool f_ok = f.counts == std::vector<long>{7, 20, 29, 22, 8};
    const Rational sum = Rational(1) - Rational(7, 2) + Rational(20, 3) - Rational(29, 4) + Rational(22, 5) -
                         Rational(8, 6);
    const bool identity_ok = sum == Rational(-1, 60) && stratified_coefficient_from_link(f) == Rational(-1, 60);
    std::string counts;
    for (long c : f.counts) {
        counts += (counts.empty() ? "" : ",") + std::to_string(c);
    }
    return {f_ok && identity_ok, "boundary face lattice f = (" + counts + "), " +
                                     (lattice.simplicial() ? "simplicial" : "not simplicial") +
                                     "; alternating sum = " + sum.to_string()};
}

Outcome chi_invariance() {
    const std::vector<std::pair<std::string, EmbeddedComplex>> cases = {
        {"dS3", simplex_boundary(3)},
        {"dS4", simplex_boundary(4)},
        {"solid simplex", solid_simplex(3)},
        {"triple-book", triple_book()},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [name, e] : cases) {
        const Rational before = stratified_euler_characteristic(e.complex(), stratify(e.complex()));
        const auto sd = barycentric_subdivide(e);
        const Rational after = stratified_euler_characteristic(sd.fine.complex(), stratify(sd.fine.complex()));
        ok = ok && before == after;
        detail += (detail.empty() ? "" : "; ") + name + " " + before.to_string() + " -> " + after.to_string();
    }
    return {ok, detail};
}

Outcome unit_sequence(const Models& m) {
    const CheckConfig cfg = check_config();
    const CurvatureModel model(m.sphere3, stratify(m.sphere3.complex()), cfg.angles,
                               [](long) { return Rational(1); });
    const TheoremReport r = gauss_bonnet_check(model, cfg);
    const bool exceeds = std::abs(r.residual) > kZ * r.std_error;
    return {!r.pass && exceeds, "a_n = 1 on dS4: lhs " + fmt(r.lhs) + " vs chi^s 0, " + z_score(r) +
                                    (r.pass ? " (check still passes)" : ", check fails as required")};
}

Outcome determinism() {
    const CheckConfig cfg = check_config(kDeterminismSamples);
    const ReportContext ctx{cfg.angles.samples, cfg.angles.seed};
    const auto sphere = simplex_boundary(4);
    const auto pair = stellar_subdivide(simplex_boundary(5), Simplex{0, 1, 2});
    const std::vector<std::pair<std::string, std::function<TheoremReport()>>> checks = {
        {"gauss-bonnet", [&] { return gauss_bonnet_check(sphere, cfg); }},
        {"vanishing", [&] { return vanishing_check(sphere, cfg); }},
        {"sommerville", [&] { return sommerville_report(solid_simplex(5), cfg); }},
        {"subdivision", [&] { return subdivision_relation_check(pair, cfg); }},
    };
    const int saved = omp_get_max_threads();
    bool ok = true;
    for (const auto& [name, run] : checks) {
        std::string reference;
        for (int threads : {1, 2, 4, 7}) {
            omp_set_num_threads(threads);
            const std::string out = render_report(run(), ctx, OutputFormat::json);
            if (reference.empty()) {
                reference = out;
            } else if (out != reference) {
                ok = false;
            }
        }
    }
    omp_set_num_threads(saved);
    return {ok, "4 checks x threads {1,2,4,7}: JSON reports " + std::string(ok ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int failed = 0;
    auto run = [&](int id, const char* name, const std::function<Outcome()>& fn) {
        const auto start = clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& err) {
            o = {false, std::string("exception: ") + err.what()};
        }
        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        std::printf("[%s] %2d %-22s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    };

    run(1, "sequence", sequence_values);
    run(2, "bernoulli identities", bernoulli_identities);
    run(3, "angle-sum identity", sommerville);
    const auto start = clock::now();
    const Models models;
    std::printf("     (shared dS4 and join angle tables built in %.1f s)\n",
                std::chrono::duration<double>(clock::now() - start).count());
    run(4, "gauss-bonnet", [&] { return gauss_bonnet(models); });
    run(5, "vanishing", [&] { return vanishing(models); });
    run(6, "defect contrast", [&] { return contrast(models); });
    run(7, "subdivision", subdivision);
    run(8, "seven points", seven_points);
    run(9, "chi^s invariance", chi_invariance);
    run(10, "unit sequence control", [&] { return unit_sequence(models); });
    run(11, "determinism", determinism);
    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
