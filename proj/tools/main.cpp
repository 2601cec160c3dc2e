// Command-line front end: generate site sets, build diagrams by either
// construction, verify the combinatorial claims, compare diagrams, export
// figures. Exit codes: 0 all good, 1 verification failure, 2 usage or input
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "svoronoi/construct_direct.hpp"
#include "svoronoi/construct_inversion.hpp"
#include "svoronoi/diagram_io.hpp"
#include "svoronoi/errors.hpp"
#include "svoronoi/generator.hpp"
#include "svoronoi/kernels.hpp"
#include "svoronoi/render.hpp"
#include "svoronoi/verify.hpp"

namespace {

using nlohmann::json;

svor::Tolerances tolerances_from(double eps) { return svor::Tolerances(eps); }

std::optional<svor::Vec3> parse_center(const std::string& s) {
    if (s.empty()) return std::nullopt;
    svor::Vec3 c;
    char comma;
    std::istringstream is(s);
    if (!(is >> c.x >> comma >> c.y >> comma >> c.z)) return std::nullopt;
    return normalized(c);
}

svor::SiteSet load_sites(const std::string& path, double eps, double jitter, std::uint64_t seed) {
    auto pts = svor::load_points_text(path, &std::cerr, tolerances_from(eps));
    if (jitter > 0.0) pts = svor::jitter_points(pts, jitter, seed ^ 0x9e3779b97f4a7c15ULL);
    return svor::SiteSet(pts, tolerances_from(eps));
}

struct VerifyEmitter {
    std::ostream& out;
    bool all_pass = true;
    void emit(const std::string& instance, int k, const std::string& check, bool pass,
              const std::string& details) {
        json rec{{"instance", instance}, {"check", check}, {"pass", pass}};
        if (k > 0) rec["k"] = k;
        if (!details.empty()) rec["details"] = details;
        out << rec.dump() << "\n";
        all_pass = all_pass && pass;
    }
};

std::string join_issues(const std::vector<std::string>& v, std::size_t cap = 4) {
    std::string s;
    for (std::size_t t = 0; t < v.size() && t < cap; ++t) s += (t ? "; " : "") + v[t];
    if (v.size() > cap) s += "; ... (" + std::to_string(v.size() - cap) + " more)";
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"order-k spherical Voronoi diagrams: construction and verification"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a random general-position site set");
    int gen_n = 10;
    std::uint64_t gen_seed = 1;
    double gen_eps = 1e-9;
    std::string gen_out = "sites.txt";
    gen->add_option("-n,--sites", gen_n, "number of sites")->check(CLI::Range(3, 1000));
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--eps", gen_eps, "master tolerance");
    gen->add_option("-o,--out", gen_out, "output file");

    // build
    auto* build = app.add_subcommand("build", "build a diagram from a point-set file");
    std::string build_in, build_out = "diagram.json", build_method = "direct", build_center_str;
    int build_k = 1;
    double build_eps = 1e-9, build_radius = 2.0, build_jitter = 0.0;
    std::uint64_t build_seed = 1;
    bool build_paranoid = false;
    build->add_option("points", build_in, "point-set file")->required();
    build->add_option("--k", build_k, "diagram order")->required();
    build->add_option("--method", build_method, "direct or inversion")
        ->check(CLI::IsMember({"direct", "inversion"}));
    build->add_option("--center", build_center_str, "inversion center `x,y,z`");
    build->add_option("--radius", build_radius, "inversion radius");
    build->add_option("--seed", build_seed, "seed for center sampling");
    build->add_option("--eps", build_eps, "master tolerance");
    build->add_option("--jitter", build_jitter, "pre-validation angular jitter sigma");
    build->add_flag("--paranoid", build_paranoid, "recount every propagated arc");
    build->add_option("-o,--out", build_out, "output diagram JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string verify_in, verify_out, verify_k = "all",
                verify_checks = "counts,rules,cover,antipodal,partition,circles,star";
    double verify_eps = 1e-9;
    std::uint64_t verify_seed = 1;
    bool verify_paranoid = false;
    verify->add_option("input", verify_in, "point-set file or diagram JSON")->required();
    verify->add_option("--k", verify_k, "order, range `a..b`, or `all`");
    verify->add_option("--checks", verify_checks, "comma-separated check list");
    verify->add_option("--seed", verify_seed, "seed for inversion centers");
    verify->add_option("--eps", verify_eps, "master tolerance");
    verify->add_flag("--paranoid", verify_paranoid, "recount every propagated arc");
    verify->add_option("-o,--out", verify_out, "JSON-lines report file (default stdout)");

    // compare
    auto* compare = app.add_subcommand("compare", "combinatorial isomorphism of two diagrams");
    std::string cmp_a, cmp_b;
    bool cmp_swap = false;
    double cmp_eps = 1e-9;
    compare->add_option("a", cmp_a, "first diagram JSON")->required();
    compare->add_option("b", cmp_b, "second diagram JSON")->required();
    compare->add_flag("--type-swap", cmp_swap, "expect complementary orders and swapped types");
    compare->add_option("--eps", cmp_eps, "master tolerance");

    // export
    auto* exp = app.add_subcommand("export", "render a diagram to SVG or OBJ");
    std::string exp_in, exp_out = "diagram.svg", exp_format = "svg";
    int exp_highlight = -1;
    double exp_eps = 1e-9;
    exp->add_option("diagram", exp_in, "diagram JSON")->required();
    exp->add_option("--format", exp_format, "svg or obj")->check(CLI::IsMember({"svg", "obj"}));
    exp->add_option("--highlight-region", exp_highlight, "shade the region of this site");
    exp->add_option("--eps", exp_eps, "master tolerance");
    exp->add_option("-o,--out", exp_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            const auto tol = tolerances_from(gen_eps);
            svor::GenerateStats stats;
            const auto sites = svor::random_sites(gen_n, gen_seed, tol, 1e-6, &stats);
            svor::save_points_text(gen_out, sites.points());
            std::cerr << "wrote " << gen_n << " sites to " << gen_out << " ("
                      << stats.rejected_sets << " rejected draws)\n";
            return 0;
        }

        if (build->parsed()) {
            const auto tol = tolerances_from(build_eps);
            const auto sites = load_sites(build_in, build_eps, build_jitter, build_seed);
            json out_json;
            if (build_method == "direct") {
                const auto d = svor::build_direct(sites, build_k, tol, build_paranoid);
                out_json = svor::diagram_to_json(d);
            } else {
                svor::Vec3 center;
                if (!build_center_str.empty()) {
                    const auto c = parse_center(build_center_str);
                    if (!c) throw svor::IoError("--center expects `x,y,z`");
                    center = *c;
                } else {
                    center = svor::random_center(sites, build_seed, tol);
                }
                const auto b = svor::build_via_inversion(sites, build_k, center, build_radius,
                                                         tol, build_paranoid);
                out_json = svor::inversion_to_json(b);
            }
            svor::save_json(build_out, out_json);
            std::cerr << "wrote " << build_out << " (kernel backend: "
                      << svor::kernels::backend_name(svor::kernels::active_backend()) << ")\n";
            return 0;
        }

        if (verify->parsed()) {
            const auto tol = tolerances_from(verify_eps);
            std::ofstream file_out;
            if (!verify_out.empty()) {
                file_out.open(verify_out);
                if (!file_out) throw svor::IoError("cannot write " + verify_out);
            }
            VerifyEmitter emit{verify_out.empty() ? std::cout : file_out};

            std::set<std::string> checks;
            {
                std::istringstream is(verify_checks);
                std::string tok;
                while (std::getline(is, tok, ',')) checks.insert(tok);
            }
            const auto want = [&](const std::string& c) { return checks.count(c) > 0; };

            // diagram JSON input: structural checks only
            if (verify_in.size() > 5 && verify_in.substr(verify_in.size() - 5) == ".json") {
                const auto d = svor::diagram_from_json(svor::load_json(verify_in), tol);
                if (want("counts") && d.surface == svor::Surface::sphere) {
                    const auto rep = svor::verify_counts(d);
                    emit.emit(verify_in, d.k, "counts", rep.pass, rep.delta);
                }
                if (want("rules")) {
                    const auto vr = svor::check_vertex_rule(d);
                    emit.emit(verify_in, d.k, "vertex-rule", vr.ok(), join_issues(vr.violations));
                    const auto fr = svor::check_face_rule(d);
                    emit.emit(verify_in, d.k, "face-rule", fr.ok(), join_issues(fr.violations));
                }
                if (want("cover") && d.surface == svor::Surface::sphere) {
                    try {
                        const auto cover = svor::cycle_double_cover(d);
                        std::size_t total = 0;
                        for (const auto& c : cover.cycles) total += c.size();
                        emit.emit(verify_in, d.k, "cover", total == 2 * d.edges.size(), "");
                    } catch (const svor::Error& e) {
                        emit.emit(verify_in, d.k, "cover", false, e.what());
                    }
                }
                return emit.all_pass ? 0 : 1;
            }

            const auto sites = load_sites(verify_in, verify_eps, 0.0, 0);
            const int n = sites.size();
            int k_lo = 1, k_hi = n - 1;
            if (verify_k != "all") {
                const auto dots = verify_k.find("..");
                if (dots != std::string::npos) {
                    k_lo = std::stoi(verify_k.substr(0, dots));
                    k_hi = std::stoi(verify_k.substr(dots + 2));
                } else {
                    k_lo = k_hi = std::stoi(verify_k);
                }
            }
            if (k_lo < 1 || k_hi > n - 1 || k_lo > k_hi)
                throw svor::OrderOutOfRange("verify k range outside 1..n-1");

            if (want("circles")) {
                const auto rep = svor::verify_circle_identities(sites, tol);
                emit.emit(verify_in, 0, "circle-identities-sphere", rep.pass,
                          join_issues(rep.issues));
                const svor::Vec3 center = svor::random_center(sites, verify_seed, tol);
                const svor::Inversion inv(center, 2.0, tol);
                const svor::PlanarSiteSet planar(sites, inv, tol);
                const auto prep = svor::verify_circle_identities(planar, tol);
                emit.emit(verify_in, 0, "circle-identities-plane", prep.pass,
                          join_issues(prep.issues));
            }

            for (int k = k_lo; k <= k_hi; ++k) {
                const auto d = svor::build_direct(sites, k, tol, verify_paranoid);
                if (want("counts")) {
                    const auto rep = svor::verify_counts(d);
                    emit.emit(verify_in, k, "counts", rep.pass, rep.delta);
                }
                if (want("rules")) {
                    const auto vr = svor::check_vertex_rule(d);
                    emit.emit(verify_in, k, "vertex-rule", vr.ok(), join_issues(vr.violations));
                    const auto fr = svor::check_face_rule(d);
                    emit.emit(verify_in, k, "face-rule", fr.ok(), join_issues(fr.violations));
                }
                if (want("cover")) {
                    try {
                        const auto cover = svor::cycle_double_cover(d);
                        std::size_t total = 0;
                        for (const auto& c : cover.cycles) total += c.size();
                        emit.emit(verify_in, k, "cover", total == 2 * d.edges.size(), "");
                    } catch (const svor::Error& e) {
                        emit.emit(verify_in, k, "cover", false, e.what());
                    }
                }
                if (want("antipodal")) {
                    const auto rep = svor::verify_antipodal(sites, k, tol);
                    emit.emit(verify_in, k, "antipodal", rep.pass, join_issues(rep.issues));
                }
                if (want("partition")) {
                    const svor::Vec3 center =
                        svor::random_center(sites, verify_seed + static_cast<std::uint64_t>(k), tol);
                    const auto rep = svor::region_partition_check(sites, k, center, 2.0, tol);
                    emit.emit(verify_in, k, "partition", rep.pass, join_issues(rep.issues));
                }
                if (want("star")) {
                    const auto warnings = svor::star_shape_spot_check(d);
                    // warning-only: logged but never fails the run
                    emit.emit(verify_in, k, "star-spot-check", true, join_issues(warnings));
                }
            }
            return emit.all_pass ? 0 : 1;
        }

        if (compare->parsed()) {
            const auto tol = tolerances_from(cmp_eps);
            const auto d1 = svor::diagram_from_json(svor::load_json(cmp_a), tol);
            const auto d2 = svor::diagram_from_json(svor::load_json(cmp_b), tol);
            const auto iso = svor::isomorphic(d1, d2, cmp_swap);
            if (iso.isomorphic) {
                std::cout << "isomorphic (" << iso.witness.size() << " vertices matched)\n";
                return 0;
            }
            std::cout << "not isomorphic: " << iso.mismatch << "\n";
            return 1;
        }

        if (exp->parsed()) {
            const auto tol = tolerances_from(exp_eps);
            const auto d = svor::diagram_from_json(svor::load_json(exp_in), tol);
            if (exp_format == "svg") {
                svor::SvgOptions opts;
                opts.highlight_region = exp_highlight;
                svor::export_svg(d, exp_out, opts);
            } else {
                svor::export_obj(d, exp_out);
            }
            std::cerr << "wrote " << exp_out << "\n";
            return 0;
        }
    } catch (const svor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
