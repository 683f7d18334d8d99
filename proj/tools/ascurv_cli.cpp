#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "ascurv/angle_defect_sequence.hpp"
#include "ascurv/complex_io.hpp"
#include "ascurv/convex_hull.hpp"
#include "ascurv/generators.hpp"
#include "ascurv/report.hpp"

using namespace ascurv;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: ASC_CURV_THREADS, else all
    double z = 4.0;
    std::string format = "table";

    CheckConfig check() const {
        CheckConfig c;
        c.angles.samples = samples;
        c.angles.seed = seed;
        c.z = z;
        c.validate();
        return c;
    }
    ReportContext context() const { return {samples, seed}; }
    OutputFormat output() const { return parse_output_format(format); }
};

void apply_threads(int requested) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("ASC_CURV_THREADS")) {
            try {
                n = std::stoi(env);
            } catch (const std::exception&) {
                throw InputError(std::string("ASC_CURV_THREADS is not an integer: ") + env);
            }
        }
    }
    if (n > 0) {
        omp_set_num_threads(n);
    }
}

Simplex parse_simplex_arg(const std::string& text) {
    std::string s = text;
    if (s.empty() || s.front() != '[') {
        s = "[" + s + "]";
    }
    try {
        return simplex_from_json(json::parse(s));
    } catch (const std::exception& err) {
        throw InputError("bad simplex '" + text + "': " + err.what());
    }
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError(path + ": cannot write");
    }
    out << text;
}

ComplexFile load_with_overrides(const std::string& path, const std::string& overrides_path) {
    ComplexFile f = read_complex_file(path);
    if (!overrides_path.empty()) {
        for (const auto& [s, r] : parse_overrides(read_text(overrides_path), overrides_path)) {
            f.overrides[s] = r;
        }
    }
    return f;
}

int emit_report(const TheoremReport& report, const RunConfig& rc) {
    std::cout << render_report(report, rc.context(), rc.output());
    return report.pass ? kExitPass : kExitFail;
}

std::string join_counts(const FVector& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(f.counts[i]);
    }
    return out + ")";
}

int cmd_generate(const std::string& kind, const std::vector<std::string>& args) {
    auto need = [&](std::size_t k) {
        if (args.size() != k) {
            throw InputError("generate " + kind + " takes " + std::to_string(k) + " argument(s)");
        }
    };
    auto int_arg = [&](std::size_t i) {
        try {
            return std::stoi(args.at(i));
        } catch (const std::exception&) {
            throw InputError("expected an integer, got '" + args.at(i) + "'");
        }
    };
    if (kind == "simplex-boundary") {
        need(1);
        std::cout << emit_complex(simplex_boundary(int_arg(0)));
    } else if (kind == "simplex") {
        need(1);
        std::cout << emit_complex(solid_simplex(int_arg(0)));
    } else if (kind == "cross-polytope") {
        need(1);
        std::cout << emit_complex(cross_polytope(int_arg(0)));
    } else if (kind == "triple-book") {
        need(0);
        std::cout << emit_complex(triple_book());
    } else if (kind == "cone") {
        need(1);
        std::cout << emit_complex(embedded_cone(read_complex_file(args[0]).complex));
    } else if (kind == "suspension") {
        need(1);
        std::cout << emit_complex(embedded_suspension(read_complex_file(args[0]).complex));
    } else if (kind == "join") {
        need(2);
        std::cout << emit_complex(
            embedded_join(read_complex_file(args[0]).complex, read_complex_file(args[1]).complex));
    } else if (kind == "seven-points") {
        need(0);
        std::cout << json{{"points", points_to_json(example_seven_points())}}.dump(2) << "\n";
    } else if (kind == "seven-points-perturbed") {
        need(0);
        std::cout << json{{"points", points_to_json(example_seven_points_perturbed())}}.dump(2) << "\n";
    } else {
        throw InputError("unknown generator '" + kind + "'");
    }
    return kExitPass;
}

int cmd_info(const std::string& path, const RunConfig& rc) {
    const ComplexFile f = read_complex_file(path);
    const auto& k = f.complex.complex();
    const FVector fv = k.f_vector();
    const StratumAssignment strata = stratify(k, f.overrides);
    const Rational chi_s = stratified_euler_characteristic(k, strata);
    const bool pm = k.dimension() >= 1 && is_two_pseudomanifold(k);
    if (rc.output() == OutputFormat::json) {
        json j{{"dimension", k.dimension()},
               {"ambient_dim", f.complex.ambient_dim()},
               {"f_vector", fv.counts},
               {"euler_characteristic", fv.euler_characteristic()},
               {"stratified_euler_characteristic", chi_s.to_fraction_string()},
               {"two_pseudomanifold", pm}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension        " << k.dimension() << " (in R^" << f.complex.ambient_dim() << ")\n"
                  << "f-vector         " << join_counts(fv) << "\n"
                  << "euler            " << fv.euler_characteristic() << "\n"
                  << "stratified euler " << chi_s.to_string() << "\n"
                  << "pseudomanifold   " << (pm ? "yes" : "no") << "\n";
    }
    return kExitPass;
}

int cmd_strata(const std::string& path, const std::string& overrides, const RunConfig& rc) {
    const ComplexFile f = load_with_overrides(path, overrides);
    const auto& k = f.complex.complex();
    const StratumAssignment strata = stratify(k, f.overrides);
    if (rc.output() == OutputFormat::json) {
        json rows = json::array();
        for (SimplexId id = 0; id < k.size(); ++id) {
            rows.push_back({{"simplex", simplex_to_json(k.simplex(id))},
                            {"r", strata[id].r},
                            {"rank", strata[id].rank.to_fraction_string()},
                            {"tier", to_string(strata[id].tier)}});
        }
        json j{{"strata", rows},
               {"stratified_euler_characteristic", stratified_euler_characteristic(k, strata).to_fraction_string()},
               {"warnings", strata.warnings()}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (SimplexId id = 0; id < k.size(); ++id) {
            std::printf("%-24s r=%-3d rank=%-5s %s\n", k.simplex(id).to_string().c_str(), strata[id].r,
                        strata[id].rank.to_string().c_str(), to_string(strata[id].tier).c_str());
        }
        std::cout << "stratified euler " << stratified_euler_characteristic(k, strata).to_string() << "\n";
        for (const std::string& w : strata.warnings()) {
            std::cout << "warning: " << w << "\n";
        }
    }
    return kExitPass;
}

int cmd_angles(const std::string& path, const RunConfig& rc) {
    const ComplexFile f = read_complex_file(path);
    const CheckConfig cfg = rc.check();
    const AngleTable table(f.complex, cfg.angles);
    const auto& k = f.complex.complex();
    if (rc.output() == OutputFormat::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& [eta, sigma] = table.pairs()[i];
            const AngleValue& v = table.values()[i];
            rows.push_back({{"face", simplex_to_json(k.simplex(eta))},
                            {"simplex", simplex_to_json(k.simplex(sigma))},
                            {"value", v.value},
                            {"std_error", v.std_error},
                            {"method", to_string(v.method)}});
        }
        std::cout << json{{"samples", rc.samples}, {"seed", rc.seed}, {"angles", rows}}.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& [eta, sigma] = table.pairs()[i];
            const AngleValue& v = table.values()[i];
            std::printf("%-20s %-20s %14s %10s %s\n", k.simplex(eta).to_string().c_str(),
                        k.simplex(sigma).to_string().c_str(), format_double(v.value).c_str(),
                        format_double(v.std_error, 3).c_str(), to_string(v.method).c_str());
        }
    }
    return kExitPass;
}

int cmd_curvature(const std::string& path, const std::string& overrides, const std::string& kind,
                  const RunConfig& rc) {
    const ComplexFile f = load_with_overrides(path, overrides);
    const CheckConfig cfg = rc.check();
    const CurvatureModel model(f.complex, stratify(f.complex.complex(), f.overrides), cfg.angles);
    const auto& k = model.complex();
    json rows = json::array();
    auto add = [&](const std::string& label, const CurvatureValue& v) {
        rows.push_back({{"simplex", label}, {"value", v.value}, {"std_error", v.std_error}, {"exact", v.exact}});
    };
    if (kind == "defect") {
        for (SimplexId id = 0; id < k.size(); ++id) {
            add(k.simplex(id).to_string(), model.evaluate(model.forms().defect(id)));
        }
    } else if (kind == "ascending") {
        for (SimplexId id = 0; id < k.size(); ++id) {
            add(k.simplex(id).to_string(), model.evaluate(model.forms().ascending(id)));
        }
    } else if (kind == "vertex") {
        for (VertexId v : k.vertices()) {
            add(Simplex({v}).to_string(), model.evaluate(model.forms().stratified_at_vertex(v)));
        }
    } else {
        throw InputError("unknown curvature kind '" + kind + "' (defect, vertex, ascending)");
    }
    if (rc.output() == OutputFormat::json) {
        std::cout << json{{"kind", kind}, {"samples", rc.samples}, {"seed", rc.seed}, {"values", rows}}.dump(2)
                  << "\n";
    } else {
        for (const json& r : rows) {
            std::printf("%-24s %16s +- %-10s%s\n", r["simplex"].get<std::string>().c_str(),
                        format_double(r["value"].get<double>()).c_str(),
                        format_double(r["std_error"].get<double>(), 3).c_str(), r["exact"].get<bool>() ? " exact" : "");
        }
    }
    return kExitPass;
}

int cmd_verify(const std::string& check, const std::vector<std::string>& files, const std::string& overrides,
               const std::string& carriers, bool unit_sequence, const RunConfig& rc) {
    auto need = [&](std::size_t k) {
        if (files.size() != k) {
            throw InputError("verify " + check + " takes " + std::to_string(k) + " file(s)");
        }
    };
    const CheckConfig cfg = rc.check();
    if (check == "gauss-bonnet") {
        need(1);
        const ComplexFile f = load_with_overrides(files[0], overrides);
        SequenceFn seq = CurvatureForms::angle_defect_term_fn();
        if (unit_sequence) {
            seq = [](long) { return Rational(1); };
        }
        return emit_report(gauss_bonnet_check(f.complex, cfg, f.overrides, seq), rc);
    }
    if (check == "vanishing") {
        need(1);
        return emit_report(vanishing_check(read_complex_file(files[0]).complex, cfg), rc);
    }
    if (check == "sommerville") {
        need(1);
        return emit_report(sommerville_report(read_complex_file(files[0]).complex, cfg), rc);
    }
    if (check == "subdivision") {
        need(2);
        SubdivisionPair pair{read_complex_file(files[0]).complex, read_complex_file(files[1]).complex, {}};
        pair.carrier = carriers.empty() ? compute_carriers(pair.fine, pair.coarse)
                                        : parse_carriers(read_text(carriers), pair.fine, pair.coarse, carriers);
        return emit_report(subdivision_relation_check(pair, cfg), rc);
    }
    throw InputError("unknown check '" + check + "' (gauss-bonnet, vanishing, sommerville, subdivision)");
}

int cmd_subdivide(const std::string& path, const std::string& stellar, bool barycentric,
                  const std::vector<double>& point, const std::string& out, const std::string& carriers_out) {
    const ComplexFile f = read_complex_file(path);
    if (barycentric == !stellar.empty()) {
        throw InputError("subdivide needs exactly one of --stellar or --barycentric");
    }
    SubdivisionPair pair;
    if (barycentric) {
        pair = barycentric_subdivide(f.complex);
    } else {
        std::optional<Point> p;
        if (!point.empty()) {
            p = Eigen::Map<const Eigen::VectorXd>(point.data(), static_cast<Eigen::Index>(point.size()));
        }
        pair = stellar_subdivide(f.complex, parse_simplex_arg(stellar), p);
    }
    write_output(emit_complex(pair.fine), out);
    if (!carriers_out.empty()) {
        write_output(carriers_to_json(pair).dump(2) + "\n", carriers_out);
    }
    return kExitPass;
}

int cmd_hull(const std::string& path, bool lattice, const RunConfig& rc) {
    const std::vector<Point> pts = parse_points(read_text(path), path == "-" ? "<stdin>" : path);
    if (!lattice) {
        std::cout << emit_complex(convex_hull_boundary(pts));
        return kExitPass;
    }
    const PolytopeBoundary b = boundary_face_lattice(pts);
    if (rc.output() == OutputFormat::json) {
        json faces = json::array();
        for (const auto& level : b.faces) {
            faces.push_back(level);
        }
        std::cout << json{{"f_vector", b.f_vector().counts}, {"simplicial", b.simplicial()}, {"faces", faces}}.dump(2)
                  << "\n";
    } else {
        std::cout << "f-vector   " << join_counts(b.f_vector()) << "\n"
                  << "simplicial " << (b.simplicial() ? "yes" : "no") << "\n";
    }
    return kExitPass;
}

int cmd_sequence(long up_to, bool check, const RunConfig& rc) {
    if (up_to < 0) {
        throw InputError("--up-to must be non-negative");
    }
    json values = json::array();
    for (long n = 0; n <= up_to; ++n) {
        values.push_back(angle_defect_term(n).to_fraction_string());
    }
    const bool ok = !check || verify_ads_recursion(up_to);
    if (rc.output() == OutputFormat::json) {
        json j{{"values", values}};
        if (check) {
            j["recursion_holds"] = ok;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (long n = 0; n <= up_to; ++n) {
            std::cout << "a_" << n << " = " << angle_defect_term(n).to_string() << "\n";
        }
        if (check) {
            std::cout << "recursion " << (ok ? "holds" : "FAILS") << " for n <= " << up_to << "\n";
        }
    }
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stratified curvature toolkit for simplicial complexes"};
    app.require_subcommand(1);
    RunConfig rc;
    auto add_run_options = [&](CLI::App* sub, bool sampling) {
        if (sampling) {
            sub->add_option("--samples", rc.samples, "Monte Carlo samples per angle")
                ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{1} << 40));
            sub->add_option("--seed", rc.seed, "random seed");
            sub->add_option("--z", rc.z, "verdict threshold in standard errors")->check(CLI::PositiveNumber);
        }
        sub->add_option("--threads", rc.threads, "OpenMP threads (default: ASC_CURV_THREADS, else all)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", rc.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    };

    std::string gen_kind;
    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("generate", "emit a complex: simplex-boundary N | simplex N | cross-polytope N | "
                                               "triple-book | cone F | suspension F | join F G | seven-points[-perturbed]");
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("args", gen_args);

    std::string file;
    std::string overrides;
    auto* info = app.add_subcommand("info", "f-vector, Euler characteristics, pseudomanifold status");
    info->add_option("file", file)->required();
    add_run_options(info, false);

    auto* strata = app.add_subcommand("strata", "stratum index and rank of every simplex");
    strata->add_option("file", file)->required();
    strata->add_option("--overrides", overrides, "file of {simplex, r} overrides");
    add_run_options(strata, false);

    auto* angles = app.add_subcommand("angles", "normalized solid angle of every (face, top simplex) pair");
    angles->add_option("file", file)->required();
    add_run_options(angles, true);

    std::string curv_kind = "ascending";
    auto* curv = app.add_subcommand("curvature", "per-simplex curvature");
    curv->add_option("file", file)->required();
    curv->add_option("--kind", curv_kind, "defect, vertex or ascending")
        ->check(CLI::IsMember({"defect", "vertex", "ascending"}));
    curv->add_option("--overrides", overrides, "file of {simplex, r} overrides");
    add_run_options(curv, true);

    std::string check;
    std::vector<std::string> files;
    std::string carriers;
    bool unit_sequence = false;
    auto* verify = app.add_subcommand("verify", "gauss-bonnet F | vanishing F | sommerville F | subdivision K L");
    verify->add_option("check", check)->required();
    verify->add_option("files", files)->required();
    verify->add_option("--overrides", overrides, "file of {simplex, r} overrides");
    verify->add_option("--carriers", carriers, "carrier file for subdivision (default: computed)");
    verify->add_flag("--unit-sequence", unit_sequence, "replace a_n by 1 (negative control)");
    add_run_options(verify, true);

    std::string stellar;
    bool barycentric = false;
    std::vector<double> point;
    std::string out;
    std::string carriers_out;
    auto* sub = app.add_subcommand("subdivide", "stellar or barycentric subdivision");
    sub->add_option("file", file)->required();
    sub->add_option("--stellar", stellar, "simplex to subdivide, e.g. 0,1,2");
    sub->add_flag("--barycentric", barycentric);
    sub->add_option("--point", point, "new vertex position (default: barycenter)");
    sub->add_option("-o,--output", out, "subdivided complex (default: stdout)");
    sub->add_option("--carriers-out", carriers_out, "write the carrier map here");

    bool lattice = false;
    auto* hull = app.add_subcommand("hull", "boundary complex of a convex hull");
    hull->add_option("points", file)->required();
    hull->add_flag("--lattice", lattice, "face lattice f-vector; allows non-simplicial polytopes");
    add_run_options(hull, false);

    long up_to = 17;
    bool seq_check = false;
    auto* seq = app.add_subcommand("sequence", "angle defect sequence a_0..a_N");
    seq->add_option("--up-to", up_to, "last index");
    seq->add_flag("--check", seq_check, "verify the defining recursion");
    add_run_options(seq, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        apply_threads(rc.threads);
        if (gen->parsed()) {
            return cmd_generate(gen_kind, gen_args);
        }
        if (info->parsed()) {
            return cmd_info(file, rc);
        }
        if (strata->parsed()) {
            return cmd_strata(file, overrides, rc);
        }
        if (angles->parsed()) {
            return cmd_angles(file, rc);
        }
        if (curv->parsed()) {
            return cmd_curvature(file, overrides, curv_kind, rc);
        }
        if (verify->parsed()) {
            return cmd_verify(check, files, overrides, carriers, unit_sequence, rc);
        }
        if (sub->parsed()) {
            return cmd_subdivide(file, stellar, barycentric, point, out, carriers_out);
        }
        if (hull->parsed()) {
            return cmd_hull(file, lattice, rc);
        }
        if (seq->parsed()) {
            return cmd_sequence(up_to, seq_check, rc);
        }
    } catch (const std::exception& err) {
        std::cerr << "ascurv: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
