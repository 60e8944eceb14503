#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "innerlab/clark.hpp"
#include "innerlab/components.hpp"
#include "innerlab/experiments.hpp"
#include "innerlab/extremal.hpp"
#include "innerlab/green.hpp"
#include "innerlab/map_fixtures.hpp"
#include "innerlab/serialize.hpp"
#include "innerlab/wos.hpp"

using namespace innerlab;

namespace {

Complex parse_point(const std::string& text) {
    double x = 0, y = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf", &x, &y) != 2)
        throw CLI::ValidationError("expected a point as x,y");
    return {x, y};
}

std::vector<std::pair<double, double>> parse_windows(const std::string& text) {
    std::vector<std::pair<double, double>> windows;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        double a = 0, b = 0;
        if (std::sscanf(token.c_str(), "%lf:%lf", &a, &b) != 2)
            throw CLI::ValidationError("expected windows as a:b,c:d,...");
        windows.push_back({a, b});
    }
    return windows;
}

// Named fixture maps for the julia / clark subcommands.
MapOracle oracle_by_name(const std::string& name) {
    if (name == "identity") return oracle_identity();
    if (name == "square") return oracle_blaschke(BlaschkeProduct::monomial(2));
    if (name == "boundary-atom") return oracle_singular_atom(kPi);
    if (name == "right-half-disk") return oracle_right_half_disk_inverse();
    if (name == "upper-half-disk") return oracle_upper_half_disk_inverse();
    if (name.rfind("moebius:", 0) == 0) {
        double re = 0, im = 0, rot = 0;
        if (std::sscanf(name.c_str() + 8, "%lf,%lf,%lf", &re, &im, &rot) != 3)
            throw CLI::ValidationError("expected moebius:a_re,a_im,rotation");
        return oracle_moebius(Moebius(Complex(re, im), rot));
    }
    throw CLI::ValidationError("unknown map oracle: " + name);
}

void print_json(const Json& j, const std::string& out_path) {
    std::string text = canonical_json(j);
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"innerlab: numerical laboratory for inner functions of the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();  // --seed / --out may appear after the subcommand
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "global random seed");
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // blaschke: evaluate, critical structure, entropy
    auto* blaschke_cmd = app.add_subcommand("blaschke", "finite Blaschke product queries");
    std::string blaschke_file, eval_at;
    int family_n = 0;
    std::size_t quad_n = 4096;
    bool want_critical = false, want_mu = false, want_nu = false, want_entropy = false;
    blaschke_cmd->add_option("--file", blaschke_file, "Blaschke product JSON");
    blaschke_cmd->add_option("--family", family_n, "boundary-atom family member n");
    blaschke_cmd->add_option("--eval", eval_at, "evaluate at the point x,y");
    blaschke_cmd->add_flag("--critical", want_critical, "list critical points");
    blaschke_cmd->add_flag("--mu", want_mu, "critical measure");
    blaschke_cmd->add_flag("--nu", want_nu, "critical value measure");
    blaschke_cmd->add_flag("--entropy", want_entropy, "circle entropy");
    blaschke_cmd->add_option("--quadrature", quad_n, "entropy quadrature nodes");

    // measure: poisson / weak distance / carleson entropy
    auto* measure_cmd = app.add_subcommand("measure", "measure utilities");
    std::string measure_file, measure_other, poisson_at, bc_file;
    measure_cmd->add_option("--circle", measure_file, "circle measure JSON");
    measure_cmd->add_option("--poisson", poisson_at, "Poisson extension at x,y");
    measure_cmd->add_option("--disk", measure_file, "disk measure JSON");
    measure_cmd->add_option("--weak-distance", measure_other, "second disk measure JSON");
    measure_cmd->add_option("--bc-entropy", bc_file, "Beurling-Carleson set JSON");

    // thickness subcommands
    auto* thick_cmd = app.add_subcommand("thickness", "thickness criteria");
    std::string h1_file, h2_file, windows_text, disk_h_file, julia_map;
    double tol = 0.05, p_theta = 0.0, julia_zeta = 0.0, julia_m = 1.0;
    auto* strip_sub = thick_cmd->add_subcommand("strip", "strip area criterion");
    strip_sub->add_option("--h1", h1_file, "lower graph CSV")->required();
    strip_sub->add_option("--h2", h2_file, "upper graph CSV");
    strip_sub->add_option("--windows", windows_text, "windows a:b,c:d,...")->required();
    strip_sub->add_option("--tol", tol, "verdict tolerance");
    auto* disk_sub = thick_cmd->add_subcommand("disk", "disk integral criterion");
    disk_sub->add_option("--graph", disk_h_file, "circle graph CSV (theta,h)")->required();
    disk_sub->add_option("--p", p_theta, "boundary point angle")->required();
    auto* julia_sub = thick_cmd->add_subcommand("julia", "horoball mapping check");
    julia_sub->add_option("--map", julia_map, "map oracle name")->required();
    julia_sub->add_option("--zeta", julia_zeta, "boundary angle")->required();
    julia_sub->add_option("--M", julia_m, "target derivative bound")->required();

    // modulus
    auto* modulus_cmd = app.add_subcommand("modulus", "grid modulus of a marked raster");
    std::string mask_file, marking_file;
    double delta_override = 0.0;
    modulus_cmd->add_option("--mask", mask_file, "PGM mask")->required();
    modulus_cmd->add_option("--marking", marking_file, "side-marking JSON")->required();
    modulus_cmd->add_option("--delta", delta_override, "node spacing (overrides the marking)");

    // wos
    auto* wos_cmd = app.add_subcommand("wos", "walk-on-spheres harmonic measure");
    std::string domain_file, parts_file, w_text;
    std::size_t n_walks = 100000;
    wos_cmd->add_option("--domain", domain_file, "Jordan domain JSON")->required();
    wos_cmd->add_option("--w", w_text, "interior viewpoint x,y")->required();
    wos_cmd->add_option("--parts", parts_file, "boundary partition JSON")->required();
    wos_cmd->add_option("--n", n_walks, "number of walks");

    // clark
    auto* clark_cmd = app.add_subcommand("clark", "composition operator pushforward");
    std::string clark_domain, clark_mu, clark_map, phi0_text;
    std::size_t clark_walks = 100000;
    clark_cmd->add_option("--domain", clark_domain, "Jordan domain JSON")->required();
    clark_cmd->add_option("--mu", clark_mu, "circle measure JSON")->required();
    clark_cmd->add_option("--map", clark_map, "inverse map oracle name")->required();
    clark_cmd->add_option("--phi0", phi0_text, "phi(0) as x,y")->required();
    clark_cmd->add_option("--n", clark_walks, "number of walks");

    // components
    auto* comp_cmd = app.add_subcommand("components", "preimage component tracing");
    auto* trace_sub = comp_cmd->add_subcommand("trace", "trace B^{-1}(V)");
    std::string comp_blaschke, v_text;
    std::size_t grid_res = 512;
    int comp_family = 0;
    trace_sub->add_option("--blaschke", comp_blaschke, "Blaschke product JSON");
    trace_sub->add_option("--family", comp_family, "boundary-atom family member n");
    trace_sub->add_option("--V", v_text, "round disk cx,cy,r")->required();
    trace_sub->add_option("--res", grid_res, "grid resolution");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "run a named experiment");
    std::string exp_name, ns_text, exp_v_text;
    std::size_t exp_walks = 0;
    exp_cmd->add_option("--name", exp_name, "experiment name")->required();
    exp_cmd->add_option("--ns", ns_text, "family sizes, comma separated");
    exp_cmd->add_option("--V", exp_v_text, "round disk cx,cy,r");
    exp_cmd->add_option("--n-walks", exp_walks, "walk budget");

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "emit an SVG for a report series");
    std::string report_file, kind;
    plot_cmd->add_option("--report", report_file, "experiment report JSON")->required();
    plot_cmd->add_option("--kind", kind, "series name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*blaschke_cmd) {
            BlaschkeProduct b = family_n > 0 ? boundary_atom_family(family_n)
                                             : blaschke_from_json(Json::parse(read_file(blaschke_file)));
            Json out;
            out["degree"] = b.degree();
            if (!eval_at.empty()) {
                Complex w = b(parse_point(eval_at));
                out["eval"] = Json{{"re", w.real()}, {"im", w.imag()}};
            }
            if (want_critical) {
                Json crit = Json::array();
                for (const auto& cp : critical_points(b))
                    crit.push_back(Json{{"re", cp.point.real()},
                                        {"im", cp.point.imag()},
                                        {"mult", cp.multiplicity}});
                out["critical_points"] = crit;
            }
            if (want_mu) out["mu"] = to_json(critical_measure(b));
            if (want_nu) out["nu"] = to_json(critical_value_measure(b));
            if (want_entropy) {
                EntropyResult e = entropy(b, quad_n);
                out["entropy"] = Json{{"value", e.value}, {"accuracy_warning", e.accuracy_warning}};
            }
            print_json(out, out_path);
        } else if (*measure_cmd) {
            Json out;
            if (!poisson_at.empty()) {
                CircleMeasure mu = circle_measure_from_json(Json::parse(read_file(measure_file)));
                out["poisson"] = poisson_extension(mu, parse_point(poisson_at));
            } else if (!measure_other.empty()) {
                DiskMeasure a = disk_measure_from_json(Json::parse(read_file(measure_file)));
                DiskMeasure b = disk_measure_from_json(Json::parse(read_file(measure_other)));
                out["weak_distance"] = weak_distance(a, b);
            } else if (!bc_file.empty()) {
                BeurlingCarlesonSet e = bc_set_from_json(Json::parse(read_file(bc_file)));
                out["bc_entropy"] = carleson_entropy(e);
            } else {
                throw CLI::ValidationError("measure: nothing to do");
            }
            print_json(out, out_path);
        } else if (*strip_sub) {
            StripGraphDomain u = strip_domain_from_csv(read_file(h1_file));
            if (!h2_file.empty()) {
                StripGraphDomain u2 = strip_domain_from_csv(read_file(h2_file));
                u = StripGraphDomain(u.h1, u2.h1);
            }
            auto windows = parse_windows(windows_text);
            Json out;
            Json deficits = Json::array();
            for (auto [a, b] : windows) deficits.push_back(strip_area_deficit(u, a, b, 2.0));
            out["deficits"] = deficits;
            out["verdict"] = to_string(is_thick_strip(u, windows, tol));
            out["integral"] = strip_integral(u).value;
            print_json(out, out_path);
        } else if (*disk_sub) {
            // CSV rows "theta,h" on a uniform angular grid; header rows skipped.
            std::istringstream in(read_file(disk_h_file));
            std::string line;
            std::vector<double> h;
            while (std::getline(in, line)) {
                double theta, value;
                if (std::sscanf(line.c_str(), "%lf,%lf", &theta, &value) == 2)
                    h.push_back(value);
            }
            double value = disk_thickness_integral(h, p_theta);
            Json out;
            out["integral"] = std::isfinite(value) ? Json(value) : Json("infinite");
            print_json(out, out_path);
        } else if (*julia_sub) {
            Json out;
            out["julia_check"] = julia_check(oracle_by_name(julia_map), julia_zeta, julia_m);
            out["angular_derivative"] =
                angular_derivative_radial(oracle_by_name(julia_map), julia_zeta);
            print_json(out, out_path);
        } else if (*modulus_cmd) {
            Json marking = Json::parse(read_file(marking_file));
            if (delta_override > 0.0) marking["delta"] = delta_override;
            GridDomain g = grid_from_pgm_and_marking(read_file(mask_file), marking);
            Json out;
            out["modulus"] = modulus(g);
            print_json(out, out_path);
        } else if (*wos_cmd) {
            PolylineJordanDomain omega = domain_from_json(Json::parse(read_file(domain_file)));
            BoundaryPartition parts = partition_from_json(Json::parse(read_file(parts_file)));
            auto probs = wos_harmonic_measure(omega, parse_point(w_text), parts, n_walks, seed);
            Json out;
            for (std::size_t p = 0; p < parts.parts.size(); ++p)
                out[parts.parts[p].name] = probs[p];
            print_json(out, out_path);
        } else if (*clark_cmd) {
            PolylineJordanDomain omega = domain_from_json(Json::parse(read_file(clark_domain)));
            CircleMeasure mu = circle_measure_from_json(Json::parse(read_file(clark_mu)));
            auto push = clark_pushforward(omega, oracle_by_name(clark_map),
                                          parse_point(phi0_text), mu, clark_walks, seed);
            Json out;
            out["boundary"] = to_json(push.boundary);
            out["interior"] = to_json(push.interior);
            out["interior_total"] = push.interior_total;
            out["interior_sigma"] = push.interior_sigma;
            out["used_walks"] = push.used_walks;
            print_json(out, out_path);
        } else if (*trace_sub) {
            BlaschkeProduct b = comp_family > 0
                                    ? boundary_atom_family(comp_family)
                                    : blaschke_from_json(Json::parse(read_file(comp_blaschke)));
            double cx, cy, r;
            if (std::sscanf(v_text.c_str(), "%lf,%lf,%lf", &cx, &cy, &r) != 3)
                throw CLI::ValidationError("expected --V cx,cy,r");
            auto comps = preimage_components(b, RoundDisk(Complex(cx, cy), r), grid_res);
            Json features = Json::array();
            for (const auto& comp : comps) {
                Json ring = Json::array();
                for (const Complex& z : comp.boundary)
                    ring.push_back(Json::array({z.real(), z.imag()}));
                int mult = 0;
                for (const auto& cp : comp.critical_points_inside) mult += cp.multiplicity;
                features.push_back(
                    Json{{"type", "Feature"},
                         {"geometry", Json{{"type", "Polygon"}, {"coordinates", {ring}}}},
                         {"properties", Json{{"degree", comp.degree},
                                             {"interior_multiplicity", mult},
                                             {"touches_circle", comp.touches_circle}}}});
            }
            print_json(Json{{"type", "FeatureCollection"}, {"features", features}}, out_path);
        } else if (*exp_cmd) {
            std::map<std::string, double> params;
            if (!ns_text.empty()) {
                std::istringstream in(ns_text);
                std::string token;
                int index = 0;
                while (std::getline(in, token, ','))
                    params["n" + std::to_string(index++)] = std::stod(token);
            }
            if (!exp_v_text.empty()) {
                double cx, cy, r;
                if (std::sscanf(exp_v_text.c_str(), "%lf,%lf,%lf", &cx, &cy, &r) != 3)
                    throw CLI::ValidationError("expected --V cx,cy,r");
                params["v_x"] = cx;
                params["v_y"] = cy;
                params["v_r"] = r;
            }
            if (exp_walks > 0) params["n_walks"] = double(exp_walks);
            ExperimentReport report = run_experiment(exp_name, params, seed);
            print_json(report.to_json(), out_path);
            if (!report.all_pass()) {
                std::cerr << "experiment " << exp_name << ": tolerance violation\n";
                return 1;
            }
        } else if (*plot_cmd) {
            ExperimentReport report =
                ExperimentReport::from_json(Json::parse(read_file(report_file)));
            std::string svg = emit_plot(report, kind);
            if (out_path.empty())
                std::cout << svg;
            else
                write_file(out_path, svg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
