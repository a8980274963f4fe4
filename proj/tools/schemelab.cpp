// schemelab: mapping schemes, their censuses and symmetries, Blaschke
// model spaces, generalized polynomial dynamics, quadratic-rational
// moduli algebra, Hubbard trees, and parameter-plane rasters.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schemelab/blaschke.hpp"
#include "schemelab/census.hpp"
#include "schemelab/dynamics.hpp"
#include "schemelab/families.hpp"
#include "schemelab/hubbard.hpp"
#include "schemelab/moduli.hpp"
#include "schemelab/raster.hpp"
#include "schemelab/symmetry.hpp"

using namespace schemelab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) fail(ErrorCode::IoError, "cannot read '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

MappingScheme load_scheme(const std::string& path) { return parse_scheme(slurp(path)); }

Window parse_window(const std::string& text) {
    Window w;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &w.x0, &w.x1, &w.y0, &w.y1) != 4)
        fail(ErrorCode::BadWindow, "window must be x0,x1,y0,y1");
    if (!(w.x0 < w.x1 && w.y0 < w.y1)) fail(ErrorCode::BadWindow, "window must have positive area");
    return w;
}

std::pair<int, int> parse_resolution(const std::string& text) {
    int w = 0, h = 0;
    if (std::sscanf(text.c_str(), "%dx%d", &w, &h) == 2) {
        if (w < 1 || h < 1) fail(ErrorCode::BadWindow, "resolution must be positive");
        return {w, h};
    }
    if (std::sscanf(text.c_str(), "%d", &w) == 1 && w >= 1) return {w, w};
    fail(ErrorCode::BadWindow, "resolution must be WxH or N");
}

Window default_window(Family f) {
    switch (f) {
        case Family::Tricorn: return {-2.0, 2.0, -2.0, 2.0};
        case Family::Top: return {-2.5, 1.5, -2.5, 1.5};
        case Family::Product: return {-2.5, 0.75, -2.5, 0.75};
        case Family::Capture: return {-2.5, 1.5, -2.5, 1.5};
        case Family::CubicSlice: return {-1.5, 1.5, -1.5, 1.5};
        case Family::RealCubicPlus: return {-1.5, 1.5, -1.5, 1.5};
        case Family::RealCubicMinus: return {-1.5, 1.5, -1.5, 1.5};
        case Family::RationalA: return {-2.0, 4.0, -3.0, 3.0};
    }
    return {-2.0, 2.0, -2.0, 2.0};
}

void print_scheme_summary(const MappingScheme& s) {
    std::cout << "vertices: " << s.size() << "  total weight: " << total_weight(s)
              << "  reduced: " << (is_reduced(s) ? "yes" : "no") << "\n";
    auto dec = cycle_decomposition(s);
    std::cout << "cycles: " << dec.cycles.size() << "  free vertices: " << dec.free_vertices.size()
              << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{
        "schemelab: hyperbolic mapping schemes, Blaschke model spaces,\n"
        "generalized polynomial dynamics and parameter-plane rasters.\n"
        "Set SCHEMELAB_THREADS to cap render parallelism."};
    app.require_subcommand(1);

    // ---- scheme ----
    auto* scheme = app.add_subcommand("scheme", "validate, reduce and export scheme files");
    scheme->require_subcommand(1);
    std::string scheme_file, scheme_file_b;

    auto* sv = scheme->add_subcommand("validate", "check the two scheme axioms");
    sv->add_option("file", scheme_file)->required();
    sv->callback([&]() {
        auto s = load_scheme(scheme_file);
        std::cout << "valid\n";
        print_scheme_summary(s);
    });

    auto* sr = scheme->add_subcommand("reduce", "print the associated reduced scheme");
    sr->add_option("file", scheme_file)->required();
    sr->callback([&]() { std::cout << serialize(reduce(load_scheme(scheme_file))); });

    auto* sd = scheme->add_subcommand("dot", "print the scheme graph in DOT format");
    sd->add_option("file", scheme_file)->required();
    sd->callback([&]() { std::cout << to_dot(load_scheme(scheme_file)); });

    auto* si = scheme->add_subcommand("iso", "decide isomorphism of two schemes");
    si->add_option("file-a", scheme_file)->required();
    si->add_option("file-b", scheme_file_b)->required();
    si->callback([&]() {
        bool iso = is_isomorphic(load_scheme(scheme_file), load_scheme(scheme_file_b));
        std::cout << (iso ? "isomorphic\n" : "not isomorphic\n");
    });

    // ---- census ----
    auto* census = app.add_subcommand("census", "count and list reduced schemes by weight");
    int max_weight = 6;
    bool census_list = false, census_table_flag = false;
    census->add_option("--max-weight", max_weight, "largest total weight")->capture_default_str();
    census->add_flag("--list", census_list, "print one representative per isomorphism class");
    census->add_flag("--table", census_table_flag, "print rows 'w N_tree N1 N_c N'");
    census->callback([&]() {
        if (census_table_flag) {
            for (const auto& row : census_table(max_weight))
                std::cout << row.w << " " << row.n_trees << " " << row.n1_trees << " "
                          << row.n_connected << " " << row.n_total << "\n";
        }
        if (census_list) {
            for (int w = 1; w <= max_weight; ++w) {
                auto all = enumerate_all(w);
                for (std::size_t i = 0; i < all.size(); ++i) {
                    std::cout << "# weight " << w << " scheme " << i << "\n" << serialize(all[i]);
                }
            }
        }
        if (!census_table_flag && !census_list) {
            for (int w = 1; w <= max_weight; ++w)
                std::cout << w << " " << enumerate_all(w).size() << "\n";
        }
    });

    // ---- symmetry ----
    auto* symmetry = app.add_subcommand("symmetry", "symmetry groups of a scheme");
    symmetry->add_option("file", scheme_file)->required();
    symmetry->callback([&]() {
        auto s = load_scheme(scheme_file);
        std::cout << "|Gamma|  = " << enumerate_gamma(s).size() << " (formula "
                  << gamma_order(s) << ")\n";
        std::cout << "|Gamma0| = " << gamma0(s).size() << "\n";
        std::cout << "|Aut|    = " << aut(s).size() << "\n";
        std::cout << "antilinear involutions: " << enumerate_antilinear(s).size() << "\n";
        std::cout << "real form classes (computable moves): " << classify_real_forms(s).size()
                  << "\n";
    });

    // ---- model ----
    auto* model = app.add_subcommand("model", "Blaschke model space operations");
    model->require_subcommand(1);
    auto* mc = model->add_subcommand("center", "print the center map and its boundary markings");
    mc->add_option("file", scheme_file)->required();
    mc->callback([&]() {
        auto s = load_scheme(scheme_file);
        auto m = center_map(s);
        model_validate(m);
        for (int v = 0; v < s.size(); ++v)
            std::cout << "vertex " << v << ": z^" << s.degree(v) << " -> vertex " << s.image(v)
                      << "\n";
        auto markings = enumerate_boundary_markings(m);
        std::cout << "boundary markings: " << markings.size() << " (|Gamma| = " << gamma_order(s)
                  << ")\n";
        for (std::size_t i = 0; i < markings.size(); ++i) {
            std::cout << "  marking " << i << ":";
            for (Complex q : markings[i].q) std::cout << " " << format_complex(q);
            std::cout << "\n";
        }
        auto radii = choose_radii(m);
        std::cout << "radii (r, R):";
        for (const auto& r : radii) std::cout << " (" << r.inner << ", " << r.outer << ")";
        std::cout << "\n";
    });

    // ---- hubbard ----
    auto* hubbard = app.add_subcommand("hubbard", "abstract Hubbard trees from reduced schemes");
    hubbard->require_subcommand(1);
    auto* hb = hubbard->add_subcommand("build", "build the tree and check the axioms");
    bool hubbard_dot = false;
    hb->add_option("file", scheme_file)->required();
    hb->add_flag("--dot", hubbard_dot, "print DOT (Fatou boxes, Julia circles)");
    hb->callback([&]() {
        auto s = load_scheme(scheme_file);
        auto built = build_tree(reduce(s));
        if (hubbard_dot) {
            std::cout << tree_to_dot(built.tree);
            return;
        }
        std::cout << "tree vertices: " << built.tree.size() << "  edges: " << built.tree.edges.size()
                  << "\n";
        for (std::size_t i = 0; i < built.hub.size(); ++i)
            std::cout << "hub p" << i << " rotation "
                      << julia_rotation_number(built.tree, built.hub[i]).str() << "\n";
        auto rep = check_axioms(built.tree);
        std::cout << "axioms: " << (rep.all_pass() ? "pass" : "FAIL") << "\n";
        for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
        std::cout << "round trip: "
                  << (is_isomorphic(scheme_of_tree(built.tree), reduce(s)) ? "ok" : "FAIL") << "\n";
    });

    // ---- moduli ----
    auto* moduli = app.add_subcommand("moduli", "quadratic-rational moduli algebra");
    moduli->require_subcommand(1);
    std::string opt_alpha = "0", opt_beta = "0", opt_gamma = "0";
    std::string opt_x1 = "0", opt_x2 = "0", opt_x3 = "0";

    auto* mk = moduli->add_subcommand("check", "residuals of the multiplier relations");
    mk->add_option("--alpha", opt_alpha)->required();
    mk->add_option("--beta", opt_beta)->required();
    mk->add_option("--gamma", opt_gamma)->required();
    mk->callback([&]() {
        Complex a = parse_complex(opt_alpha), b = parse_complex(opt_beta), g = parse_complex(opt_gamma);
        std::cout << "m2fm residual:  " << format_complex(m2fm_residual(a, b, g)) << "\n";
        std::cout << "cubic residual: " << format_complex(cubic_relation_residual(a, b, g)) << "\n";
        std::string index_text;
        try {
            index_text = format_complex(index_sum({a, b, g}));
        } catch (const Error&) {
            index_text = "undefined (a multiplier equals 1)";
        }
        std::cout << "index sum:      " << index_text << "\n";
    });

    auto* mx = moduli->add_subcommand("x2l", "multipliers from totally marked coordinates");
    mx->add_option("--x1", opt_x1)->required();
    mx->add_option("--x2", opt_x2)->required();
    mx->add_option("--x3", opt_x3)->required();
    mx->callback([&]() {
        TotallyMarkedPoint p{{parse_complex(opt_x1), parse_complex(opt_x2), parse_complex(opt_x3)}};
        auto m = lambdas_from_x(p);
        std::cout << "lambda = (" << format_complex(m.alpha) << ", " << format_complex(m.beta)
                  << ", " << format_complex(m.gamma) << ")\n";
    });

    auto* ml = moduli->add_subcommand("l2x", "totally marked coordinates from multipliers");
    ml->add_option("--alpha", opt_alpha)->required();
    ml->add_option("--beta", opt_beta)->required();
    ml->add_option("--gamma", opt_gamma)->required();
    ml->callback([&]() {
        MultiplierTriple m{parse_complex(opt_alpha), parse_complex(opt_beta), parse_complex(opt_gamma)};
        auto xs = x_from_lambdas(m);
        for (std::size_t i = 0; i < xs.size(); ++i)
            std::cout << "class " << i << ": (" << format_complex(xs[i].x[0]) << ", "
                      << format_complex(xs[i].x[1]) << ", " << format_complex(xs[i].x[2]) << ")\n";
    });

    // ---- extract-scheme ----
    auto* extract = app.add_subcommand("extract-scheme",
                                       "full and reduced schemes of a hyperbolic map");
    std::string map_file, window_text, res_text = "512";
    int max_iter = 1000;
    extract->add_option("--map", map_file, "map file: 'id image : c0 c1 ...'")->required();
    extract->add_option("--res", res_text, "grid resolution")->capture_default_str();
    extract->add_option("--window", window_text, "x0,x1,y0,y1 (default: escape-radius square)");
    extract->add_option("--max-iter", max_iter)->capture_default_str();
    extract->callback([&]() {
        auto f = parse_map_file(slurp(map_file));
        int res = parse_resolution(res_text).first;
        Window w;
        if (window_text.empty()) {
            double r = escape_radius(f);
            w = {-r, r, -r, r};
        } else {
            w = parse_window(window_text);
        }
        auto [full, red] = extract_schemes(f, label_basins(f, w, res, max_iter));
        std::cout << "# full\n" << serialize(full) << "# reduced\n" << serialize(red);
    });

    // ---- render ----
    auto* render = app.add_subcommand("render", "parameter-plane raster of a family");
    std::string family_name, out_path = "out.ppm";
    std::string render_window_text, render_res_text = "512x512";
    int render_iter = 1000;
    std::string family_help = "one of:";
    for (const auto& [n, f] : family_names()) family_help += " " + n;
    render->add_option("family", family_name, family_help)->required();
    render->add_option("--window", render_window_text, "x0,x1,y0,y1");
    render->add_option("--res", render_res_text, "WxH")->capture_default_str();
    render->add_option("--max-iter", render_iter)->capture_default_str();
    render->add_option("-o,--out", out_path, "output PPM path")->capture_default_str();
    render->callback([&]() {
        Family fam = parse_family(family_name);
        Window w = render_window_text.empty() ? default_window(fam) : parse_window(render_window_text);
        auto [rw, rh] = parse_resolution(render_res_text);
        auto img = render_parameter_plane(fam, w, rw, rh, render_iter);
        write_ppm(img, out_path);
        std::cout << "wrote " << out_path << " (" << rw << "x" << rh << ")\n";
    });

    // ---- julia ----
    auto* julia = app.add_subcommand("julia", "dynamical-plane raster of a map file");
    int julia_vertex = 0;
    julia->add_option("--map", map_file)->required();
    julia->add_option("--vertex", julia_vertex)->capture_default_str();
    julia->add_option("--window", render_window_text, "x0,x1,y0,y1");
    julia->add_option("--res", render_res_text, "WxH")->capture_default_str();
    julia->add_option("--max-iter", render_iter)->capture_default_str();
    julia->add_option("-o,--out", out_path)->capture_default_str();
    julia->callback([&]() {
        auto f = parse_map_file(slurp(map_file));
        Window w;
        if (render_window_text.empty()) {
            double r = escape_radius(f);
            w = {-r, r, -r, r};
        } else {
            w = parse_window(render_window_text);
        }
        auto [rw, rh] = parse_resolution(render_res_text);
        auto img = render_dynamical_plane(f, julia_vertex, w, rw, rh, render_iter);
        write_ppm(img, out_path);
        std::cout << "wrote " << out_path << " (" << rw << "x" << rh << ")\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help exits clean, usage errors exit 1
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
