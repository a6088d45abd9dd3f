// Command-line front end: every library operation behind a subcommand with
// machine-readable output. Exit codes: 0 pass/valid, 1 falsified/invalid,
// 2 usage error.

#include "pingpong/cases.hpp"
#include "pingpong/figures.hpp"
#include "pingpong/generators.hpp"
#include "pingpong/json_io.hpp"
#include "pingpong/projection.hpp"
#include "pingpong/table.hpp"
#include "pingpong/uniqueness.hpp"
#include "pingpong/words.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pingpong;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

void write_json(const Json& j, const std::string& path) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream os(path);
    if (!os) throw IOError("cannot open for writing: " + path);
    os << j.dump(2) << "\n";
}

// "1,-2,1;1,0,3;0,-1,1" -> generator columns
SimplicialCone parse_cone(const std::string& text) {
    std::vector<Vec> gens;
    std::string cur;
    auto flush = [&] {
        bool blank = true;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) gens.push_back(Vec::parse(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ';')
            flush();
        else
            cur += c;
    }
    flush();
    return SimplicialCone::from_generators(gens);
}

SimplicialCone default_cone(int n) {
    if (n == 3) return paper_cone_3d();
    if (n == 2) return SimplicialCone::from_generators({Vec{-1, 1}, Vec{1, 2}});
    throw std::invalid_argument("no default cone for n = " + std::to_string(n) +
                                "; pass --cone explicitly");
}

int cmd_verify(int n, const std::string& cone_text, const std::string& json_path) {
    const HGTriple h = build_generators(n);
    const SimplicialCone cone =
        cone_text.empty() ? default_cone(n) : parse_cone(cone_text);
    const Verdict v = verify(make_table(h, cone));
    Json j = to_json(v);
    j["n"] = n;
    write_json(j, json_path);
    std::cout << "table " << (v.valid ? "valid" : "invalid") << " (" << v.checks.size()
              << " checks)\n";
    for (const auto& c : v.checks) {
        std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.word << "  ";
        if (c.cls) {
            std::cout << to_string(c.cls->kind);
        } else if (c.family) {
            std::cout << (c.family->all_contained ? "all powers contained" : "fails at k = ");
            if (!c.family->all_contained) std::cout << c.family->first_bad_k;
        }
        std::cout << "\n";
    }
    if (v.witness)
        std::cout << "witness: word " << v.witness->word << ", point "
                  << v.witness->point.str() << ", image coords "
                  << v.witness->image_coords.str() << "\n";
    return v.valid ? kExitValid : kExitInvalid;
}

int cmd_falsify(int n, const std::string& cone_text, const std::string& json_path) {
    const HGTriple h = build_generators(n);
    const SimplicialCone cone =
        cone_text.empty() ? default_cone(n) : parse_cone(cone_text);
    auto w = falsify(make_table(h, cone));
    Json j;
    j["n"] = n;
    j["falsified"] = bool(w);
    if (w) j["witness"] = to_json(*w);
    write_json(j, json_path);
    if (w) {
        std::cout << "falsified: word " << w->word << ", point " << w->point.str()
                  << ", image coords " << w->image_coords.str() << "\n";
        return kExitInvalid;
    }
    std::cout << "cannot falsify\n";
    return kExitValid;
}

int cmd_scan(const GridSpec& g, const std::string& json_path) {
    const ObstructionReport rep = uniqueness_scan(g);
    write_json(to_json(rep), json_path);
    std::cout << "scanned " << rep.points_scanned << " grid points, " << rep.survivors.size()
              << " survivors, " << rep.falsified.size() << " falsified\n";
    for (const auto& s : rep.survivors)
        std::cout << "  survivor (lambda, mu, eta) = (" << to_string(s[0]) << ", "
                  << to_string(s[1]) << ", " << to_string(s[2]) << ")\n";
    return rep.survivors_are_expected ? kExitValid : kExitInvalid;
}

int cmd_project(const std::string& point, const std::string& at, const std::string& apply,
                const std::string& unproj, const std::string& json_path) {
    Json j;
    int rc = kExitValid;
    if (!point.empty()) {
        const Vec s = Vec::parse(point);
        const PlanePoint p = project(s);
        std::cout << p.str() << "\n";
        j["point"] = to_json(s);
        j["projection"] = Json::array({to_string(p.a), to_string(p.b)});
    } else if (!unproj.empty()) {
        const Vec ab = Vec::parse(unproj);
        if (ab.dim() != 2) throw std::invalid_argument("--unproject needs a,b");
        const Vec s = unproject({ab[0], ab[1]});
        std::cout << s.str() << "\n";
        j["unprojection"] = to_json(s);
    } else if (!at.empty()) {
        const Vec ab = Vec::parse(at);
        if (ab.dim() != 2) throw std::invalid_argument("--at needs a,b");
        PlaneMap g;
        if (apply == "R")
            g = PlaneMap::R;
        else if (apply == "Rinv" || apply == "R^-1")
            g = PlaneMap::Rinv;
        else if (apply == "T")
            g = PlaneMap::T;
        else
            throw std::invalid_argument("--apply must be R, Rinv or T");
        const PlanePoint p = act2d(g, {ab[0], ab[1]});
        std::cout << p.str() << "\n";
        j["apply"] = apply;
        j["at"] = Json::array({to_string(ab[0]), to_string(ab[1])});
        j["image"] = Json::array({to_string(p.a), to_string(p.b)});
    } else {
        throw std::invalid_argument("project needs --point, --at/--apply or --unproject");
    }
    write_json(j, json_path);
    return rc;
}

int cmd_figures(const std::string& which, const std::string& svg, const std::string& csv,
                int npoints, const Rat& l1, const Rat& l2) {
    FigureData fig;
    if (which == "fig1")
        fig = figure_pingpong_triangles();
    else if (which == "fig2")
        fig = figure_circle_orbits(npoints);
    else if (which == "fig34")
        fig = figure_q_cones(l1, l2);
    else
        throw std::invalid_argument("--which must be fig1, fig2 or fig34");
    if (svg.empty() && csv.empty())
        throw std::invalid_argument("figures needs --svg and/or --csv output paths");
    if (!svg.empty()) write_svg_file(fig, svg);
    if (!csv.empty()) write_csv_file(fig, csv);
    std::cout << "emitted " << fig.name << " (" << fig.paths.size() << " paths, "
              << fig.points.size() << " points)\n";
    return kExitValid;
}

int cmd_words(int n, long max_len, long exp_bound, const std::string& json_path) {
    const HGTriple h = build_generators(n);
    const long m = matrix_order(h.R);
    const InvOrder io = (h.T * h.T).is_identity() ? InvOrder::Order2 : InvOrder::Infinite;
    const WordEnumParams p{m, io, max_len, exp_bound};
    const InjectivityReport rep = injectivity_check(h.R, h.T, p);
    Json j = to_json(rep);
    j["n"] = n;
    j["max_len"] = max_len;
    j["expected_count"] = count_reduced_words(p);
    write_json(j, json_path);
    std::cout << "checked " << rep.checked << " reduced words (closed form "
              << count_reduced_words(p) << "), " << rep.collisions.size() << " collisions, "
              << rep.identity_words.size() << " nontrivial identities\n";
    return rep.clean() ? kExitValid : kExitInvalid;
}

int cmd_bt4(long search_bound, bool skip_search, const std::string& json_path) {
    const BravThomasData bt = build_bt();
    const BT4Report rep = verify_bt_table(bt);
    const SConjReport sconj = verify_s_conjugation(bt);
    Json j;
    j["vectors"] = Json{{"x", to_json(bt.x)},     {"Px", to_json(bt.Px)},
                        {"P2x", to_json(bt.P2x)}, {"P3x", to_json(bt.P3x)},
                        {"Qx", to_json(bt.Qx)},   {"Q2x", to_json(bt.Q2x)},
                        {"Q3x", to_json(bt.Q3x)}};
    j["table"] = to_json(rep);
    j["s_conjugation"] = to_json(sconj);
    bool ok = rep.all_pass && sconj.is_positive_multiple;
    std::cout << "bt4 table: " << (rep.all_pass ? "all checks pass" : "CHECK FAILED") << "\n";
    std::cout << "S conjugation: scalar " << to_string(sconj.scalar) << "\n";
    if (!skip_search) {
        const FourthGenSearch fg = search_fourth_generator(bt, search_bound);
        j["fourth_generator_search"] = to_json(fg);
        std::cout << "fourth-generator search bound " << search_bound << ": "
                  << fg.survivors.size() << " survivors out of " << fg.candidates
                  << " candidates\n";
        ok = ok && fg.survivors.empty();
    }
    write_json(j, json_path);
    return ok ? kExitValid : kExitInvalid;
}

int cmd_case2d(const std::string& json_path) {
    const Case2DReport rep = verify_2d_case();
    write_json(to_json(rep), json_path);
    std::cout << "2d table: " << (rep.verdict.valid ? "valid" : "invalid") << ", coverage "
              << (rep.coverage_all ? "complete" : "INCOMPLETE") << "\n";
    const bool ok = rep.verdict.valid && rep.eigen_u_fixed && rep.eigen_v_fixed && rep.coverage_all;
    return ok ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ping-pong table toolkit for the hypergeometric groups H_n"};
    app.require_subcommand(1);

    std::string json_path, cone_text, svg_path, csv_path;
    int n = 3;

    auto* verify_cmd = app.add_subcommand("verify", "verify a simplicial-cone ping-pong table");
    verify_cmd->add_option("--n", n, "group index n (matrices R_n, T_n)")->default_val(3);
    verify_cmd->add_option("--cone", cone_text,
                           "generators 'x1,y1,z1;x2,y2,z2;...' (default: the canonical cone)");
    verify_cmd->add_option("--json", json_path, "write the verdict as JSON ('-' for stdout)");

    auto* falsify_cmd = app.add_subcommand("falsify", "search for a ping-pong violation witness");
    falsify_cmd->add_option("--n", n)->default_val(3);
    falsify_cmd->add_option("--cone", cone_text);
    falsify_cmd->add_option("--json", json_path);

    auto* scan_cmd = app.add_subcommand("uniqueness-scan",
                                        "falsify every perturbed cone on a (lambda,mu,eta) grid");
    std::string lo = "-2", hi = "2", step = "1/2";
    scan_cmd->add_option("--lo", lo, "grid lower bound (exact rational)");
    scan_cmd->add_option("--hi", hi, "grid upper bound");
    scan_cmd->add_option("--step", step, "grid step");
    scan_cmd->add_option("--json", json_path);

    auto* project_cmd = app.add_subcommand("project", "plane projection and plane actions");
    std::string point, at, apply, unproj;
    project_cmd->add_option("--point", point, "project x,y,z");
    project_cmd->add_option("--at", at, "plane point a,b for --apply");
    project_cmd->add_option("--apply", apply, "R, Rinv or T");
    project_cmd->add_option("--unproject", unproj, "lift a,b back to the plane chart");
    project_cmd->add_option("--json", json_path);

    auto* figures_cmd = app.add_subcommand("figures", "emit figure geometry as SVG/CSV");
    std::string which = "fig1", l1 = "1", l2 = "1";
    int npoints = 25;
    figures_cmd->add_option("--which", which, "fig1 | fig2 | fig34")->default_val("fig1");
    figures_cmd->add_option("--svg", svg_path, "SVG output path");
    figures_cmd->add_option("--csv", csv_path, "CSV output path (exact rationals)");
    figures_cmd->add_option("--npoints", npoints, "orbit length for fig2")->default_val(25);
    figures_cmd->add_option("--lambda1", l1, "fig34 parameter");
    figures_cmd->add_option("--lambda2", l2, "fig34 parameter");

    auto* words_cmd = app.add_subcommand("words", "bounded-length free-product injectivity check");
    long max_len = 10, exp_bound = 3;
    words_cmd->add_option("--n", n)->default_val(3);
    words_cmd->add_option("--max-len", max_len)->default_val(10);
    words_cmd->add_option("--exp-bound", exp_bound, "|exponent| bound for infinite-order T")
        ->default_val(3);
    words_cmd->add_option("--json", json_path);

    auto* bt4_cmd = app.add_subcommand("bt4", "verify the 4D two-cone table and its data");
    long search_bound = 5;
    bool skip_search = false;
    bt4_cmd->add_option("--search-bound", search_bound, "integer box for the fourth-generator scan")
        ->default_val(5);
    bt4_cmd->add_flag("--skip-search", skip_search, "skip the fourth-generator scan");
    bt4_cmd->add_option("--json", json_path);

    auto* case2d_cmd = app.add_subcommand("case2d", "verify the 2D table and plane coverage");
    case2d_cmd->add_option("--json", json_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verify_cmd)) return cmd_verify(n, cone_text, json_path);
        if (app.got_subcommand(falsify_cmd)) return cmd_falsify(n, cone_text, json_path);
        if (app.got_subcommand(scan_cmd)) {
            GridSpec g;
            g.lambda_lo = g.mu_lo = g.eta_lo = pingpong::parse_rat(lo);
            g.lambda_hi = g.mu_hi = g.eta_hi = pingpong::parse_rat(hi);
            g.step = pingpong::parse_rat(step);
            return cmd_scan(g, json_path);
        }
        if (app.got_subcommand(project_cmd))
            return cmd_project(point, at, apply, unproj, json_path);
        if (app.got_subcommand(figures_cmd))
            return cmd_figures(which, svg_path, csv_path, npoints, pingpong::parse_rat(l1),
                               pingpong::parse_rat(l2));
        if (app.got_subcommand(words_cmd)) return cmd_words(n, max_len, exp_bound, json_path);
        if (app.got_subcommand(bt4_cmd)) return cmd_bt4(search_bound, skip_search, json_path);
        if (app.got_subcommand(case2d_cmd)) return cmd_case2d(json_path);
    } catch (const pingpong::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
