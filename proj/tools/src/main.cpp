// projdel: command-line front end. Exit codes: 0 success, 1 failed reproduction,
// 2 input error, 3 mathematical precondition failure.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "input.hpp"
#include "projdel/delineability.hpp"
#include "projdel/elimination.hpp"
#include "projdel/error.hpp"
#include "projdel/projection.hpp"
#include "projdel/tracking.hpp"
#include "reproduce.hpp"

using namespace projdel;
using namespace projdel::cli;
using io::json;

namespace {

struct Globals {
    Config cfg;
    std::string format;
    std::string output;
    bool infix = false;
    std::string vars;
};

struct Emitter {
    const Globals& g;
    void text(const std::string& s) const {
        if (g.output.empty() || g.output == "-") {
            std::cout << s;
            std::cout.flush();
            return;
        }
        std::ofstream out(g.output, std::ios::binary);
        if (!out) throw InputError("cannot write '" + g.output + "'");
        out << s;
    }
    void emit(const json& j) const { text(j.dump(2) + "\n"); }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::vector<std::string> var_list(const Globals& g) {
    return g.vars.empty() ? std::vector<std::string>{} : split(g.vars, ',');
}

MultiPoly one_poly(const Globals& g, const std::string& arg) { return load_polys({arg}, g.infix, var_list(g)).front(); }

std::pair<MultiPoly, MultiPoly> two_polys(const Globals& g, const std::string& a, const std::string& b) {
    auto ps = load_polys({a, b}, g.infix, var_list(g));
    if (ps[0].vars() != ps[1].vars()) throw InputError("P and Q must use the same variables");
    return {ps[0], ps[1]};
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
    if (g.format.empty()) return;
    for (const char* f : allowed)
        if (g.format == f) return;
    throw InputError("format '" + g.format + "' is not available for this command");
}

TrackOptions track_options(const Globals& g, const std::string& mode) {
    TrackOptions o;
    o.jump_threshold = g.cfg.jump_threshold;
    o.matching_margin = 0.25 * g.cfg.jump_threshold;
    if (mode == "projective") o.mode = TrackMode::projective;
    else if (mode == "real") o.mode = TrackMode::real;
    else throw InputError("mode must be projective or real");
    return o;
}

ProjectionMode projection_mode(const std::string& m) {
    if (m == "classical") return ProjectionMode::classical;
    if (m == "projective") return ProjectionMode::projective;
    throw InputError("mode must be classical or projective");
}

json point_json(const Point& p) {
    json a = json::array();
    for (const auto& c : p) a.push_back(format_rat(c));
    return a;
}

json verdict_json(const TrackResult& r, const BasePath& path) {
    const TrackVerdict& v = r.verdict;
    json j{{"status", to_string(v.status)},
           {"branch_count", v.branch_count},
           {"multiplicity_vector", v.multiplicity_vector},
           {"path", path.to_string()},
           {"samples", r.samples.size()},
           {"reason", v.reason},
           {"checked_at_samples_only", true}};
    j["monodromy"] = v.monodromy ? json(v.monodromy_cycles()) : json(nullptr);
    j["witness_t"] = v.witness_t ? json(*v.witness_t) : json(nullptr);
    j["witness_point"] = v.witness_point ? point_json(*v.witness_point) : json(nullptr);
    return j;
}

std::string trace_csv(const TrackResult& r) {
    std::string out = "t,branch_id,u,v,multiplicity,is_infinity\n";
    for (const auto& p : r.trace())
        out += fmt(p.t) + "," + std::to_string(p.branch_id) + "," + fmt(p.point.u) + "," + fmt(p.point.v) + "," +
               std::to_string(p.multiplicity) + "," + (p.is_infinity ? "1" : "0") + "\n";
    return out;
}

void add_path_options(CLI::App* cmd, PathSpec& spec) {
    cmd->add_option("--from", spec.from, "segment start, e.g. -2 or 0,-1");
    cmd->add_option("--to", spec.to, "segment end");
    cmd->add_option("--center", spec.center, "circle center x,y");
    cmd->add_option("--radius", spec.radius, "circle radius");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"projdel: projective delineability toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--samples", g.cfg.samples, "path samples N (>= 16)")
        ->capture_default_str()
        ->check(CLI::Range(16u, 1u << 24));
    app.add_option("--jump-threshold", g.cfg.jump_threshold, "largest branch move on the psi-circle, in (0,1)")
        ->capture_default_str()
        ->check(CLI::Validator(
            [](std::string& v) {
                const double x = std::stod(v);
                return x > 0 && x < 1 ? std::string() : std::string("must lie strictly between 0 and 1");
            },
            "(0,1)"));
    app.add_option("--format", g.format, "json or csv");
    app.add_option("-o,--output", g.output, "output file (default stdout)");
    app.add_flag("--infix", g.infix, "polynomial operands are infix expressions instead of JSON files");
    app.add_option("--vars", g.vars, "variables for --infix, comma separated, x_n last");

    const Emitter out{g};

    // homogenize
    std::string a1, a2;
    unsigned degree = 0;
    std::optional<unsigned> opt_degree, opt_p, opt_q;
    std::string matrix, point, points, mode, at, id;
    std::vector<std::string> many;
    PathSpec path_spec;

    auto* homog = app.add_subcommand("homogenize", "H^d(P) as a binary form");
    homog->add_option("P", a1, "polynomial (JSON file, '-' for stdin)")->required();
    homog->add_option("--degree,-d", degree, "reference degree d")->required();
    homog->callback([&] {
        require_format(g, {"json"});
        out.emit(io::to_json(homogenize(one_poly(g, a1), degree)));
    });

    auto* pull = app.add_subcommand("pullback", "iota^{*d} g, or iota_A^{*d} g with --matrix");
    pull->add_option("G", a1, "binary form JSON")->required();
    pull->add_option("--matrix,-A", matrix, "a11,a12,a21,a22 or JSON");
    pull->callback([&] {
        require_format(g, {"json"});
        const BinaryForm form = io::binary_form_from_json(read_json(a1));
        out.emit(io::to_json(matrix.empty() ? pullback(form) : pullback_wrt(form, load_matrix(matrix))));
    });

    auto* trans = app.add_subcommand("transform", "A^{*d} P");
    trans->add_option("P", a1)->required();
    trans->add_option("--matrix,-A", matrix, "a11,a12,a21,a22 or JSON")->required();
    trans->add_option("--degree,-d", degree, "reference degree d")->required();
    trans->callback([&] {
        require_format(g, {"json"});
        out.emit(io::to_json(moebius_transform(one_poly(g, a1), load_matrix(matrix), degree)));
    });

    auto* res = app.add_subcommand("resultant", "Res^{p,q}(P, Q) in the base variables");
    res->add_option("P", a1)->required();
    res->add_option("Q", a2)->required();
    res->add_option("--p", opt_p, "reference degree of P (default deg P)");
    res->add_option("--q", opt_q, "reference degree of Q (default deg Q)");
    res->callback([&] {
        require_format(g, {"json"});
        auto [p, q] = two_polys(g, a1, a2);
        out.emit(io::to_json(resultant_fixed(p, q, opt_p.value_or(p.degree_in_last()), opt_q.value_or(q.degree_in_last()))));
    });

    auto* disc = app.add_subcommand("discriminant", "Disc^p(P) in the base variables");
    disc->add_option("P", a1)->required();
    disc->add_option("--degree,-d", opt_degree, "reference degree p (default deg P)");
    disc->callback([&] {
        require_format(g, {"json"});
        const MultiPoly p = one_poly(g, a1);
        out.emit(io::to_json(discriminant_fixed(p, opt_degree.value_or(p.degree_in_last()))));
    });

    auto* roots = app.add_subcommand("roots", "projective roots of a univariate polynomial");
    roots->add_option("U", a1, "UniPoly JSON ({\"coeffs\": [...]} or one-variable polynomial)")->required();
    roots->add_option("--degree,-d", degree, "reference degree d")->required();
    roots->callback([&] {
        require_format(g, {"json"});
        UniPoly u;
        if (g.infix) {
            const MultiPoly p = one_poly(g, a1);
            if (p.nvars() > 1) throw InputError("expected a univariate polynomial");
            u = p.nvars() == 0 ? UniPoly::constant(p.is_zero() ? Rat(0) : p.constant_value())
                               : p.evaluate_partial(std::span<const Rat>{});
        } else {
            u = io::unipoly_from_json(read_json(a1));
        }
        out.emit(io::to_json(projective_roots(u, degree)));
    });

    auto* above = app.add_subcommand("roots-above", "projective roots of P above a base point (global degree)");
    above->add_option("P", a1)->required();
    above->add_option("--point,-x", point, "base point, e.g. 1/2 or 0,0")->required();
    above->callback([&] {
        require_format(g, {"json"});
        const MultiPoly p = one_poly(g, a1);
        const Point x0 = parse_point(point);
        if (x0.size() + 1 != p.nvars()) throw InputError("base point dimension does not match the polynomial");
        out.emit(io::to_json(projective_roots_above(p, x0)));
    });

    auto* track = app.add_subcommand("track", "track projective (or real) roots along a segment or circle");
    track->add_option("P", a1)->required();
    add_path_options(track, path_spec);
    track->add_option("--mode", mode, "projective (default) or real");
    track->callback([&] {
        require_format(g, {"csv", "json"});
        const MultiPoly p = one_poly(g, a1);
        const BasePath path = make_path(path_spec, g.cfg.samples);
        const TrackResult r = track_roots(p, path, track_options(g, mode.empty() ? "projective" : mode));
        if (g.format == "json") {
            json j = verdict_json(r, path);
            json tr = json::array();
            for (const auto& t : r.trace())
                tr.push_back({{"t", t.t}, {"branch_id", t.branch_id}, {"u", t.point.u}, {"v", t.point.v},
                              {"multiplicity", t.multiplicity}, {"is_infinity", t.is_infinity}});
            j["trace"] = tr;
            out.emit(j);
        } else {
            out.text(trace_csv(r));
            std::cerr << to_string(r.verdict.status) << " branches=" << r.verdict.branch_count
                      << (r.verdict.monodromy ? " monodromy=" + r.verdict.monodromy_cycles() : std::string())
                      << (r.verdict.reason.empty() ? std::string() : " reason: " + r.verdict.reason) << "\n";
        }
    });

    auto* finite = app.add_subcommand("check-finite", "(projective) delineability over a finite base set");
    finite->add_option("P", a1)->required();
    finite->add_option("--points", points, "base points separated by ';', coordinates by ','")->required();
    finite->callback([&] {
        require_format(g, {"json"});
        const MultiPoly p = one_poly(g, a1);
        const std::vector<Point> pts = parse_points(points);
        for (const auto& x : pts)
            if (x.size() + 1 != p.nvars()) throw InputError("base point dimension does not match the polynomial");
        const FiniteSetVerdict v = check_finite_set(p, pts);
        json per = json::array();
        for (const auto& x : pts) {
            const ProjRootSet s = projective_roots_above(p, x);
            per.push_back({{"point", point_json(x)},
                           {"real_multiplicities", s.real_multiplicities()},
                           {"projective_multiplicities", s.multiplicities()}});
        }
        out.emit({{"delineable", v.delineable}, {"projectively_delineable", v.projectively_delineable}, {"points", per}});
    });

    auto* proj = app.add_subcommand("project", "classical or projective projection set");
    proj->add_option("F", many, "polynomials")->required();
    proj->add_option("--mode", mode, "classical or projective (default)");
    proj->callback([&] {
        require_format(g, {"json"});
        const auto fs = load_polys(many, g.infix, var_list(g));
        const ProjectionMode m = projection_mode(mode.empty() ? "projective" : mode);
        const ProjectionSet s = m == ProjectionMode::classical ? project_classical(fs) : project_projective(fs);
        json gens = json::array();
        for (const auto& gen : s.generators) {
            std::string prov;
            for (const auto& t : gen.provenance) prov += (prov.empty() ? "" : ", ") + t;
            gens.push_back({{"provenance", prov}, {"poly", io::to_json(gen.poly)}});
        }
        out.emit({{"mode", to_string(m)}, {"generators", gens}});
    });

    auto* cell = app.add_subcommand("cell", "maximal open interval around s (two variables)");
    cell->add_option("F", many, "polynomials in (x1, x2)")->required();
    cell->add_option("--at,-s", at, "sample point s")->required();
    cell->add_option("--mode", mode, "classical or projective (default)");
    cell->callback([&] {
        require_format(g, {"json"});
        const auto fs = load_polys(many, g.infix, var_list(g));
        const ProjectionMode m = projection_mode(mode.empty() ? "projective" : mode);
        const CellInterval c = cell_bounds_1d(fs, parse_rat(at), m);
        json bounds = json::array();
        for (const CellBound* b : {&c.lower, &c.upper}) {
            if (!b->root) bounds.push_back(nullptr);
            else bounds.push_back(io::to_json(*b->root));
        }
        out.emit({{"mode", to_string(m)},
                  {"interval", {c.lower.to_string(true), c.upper.to_string(false)}},
                  {"bounds", bounds}});
    });

    auto* section = app.add_subcommand("section-check", "does H(Q) vanish identically or never along each P-section");
    section->add_option("P", a1)->required();
    section->add_option("Q", a2)->required();
    add_path_options(section, path_spec);
    section->callback([&] {
        require_format(g, {"json"});
        auto [p, q] = two_polys(g, a1, a2);
        const BasePath path = make_path(path_spec, g.cfg.samples);
        json reps = json::array();
        for (const auto& r : section_sign_check(p, q, path, track_options(g, "projective"))) {
            json j{{"branch_id", r.branch_id},
                   {"status", to_string(r.status)},
                   {"vanishing_samples", r.vanishing_samples},
                   {"total_samples", r.total_samples}};
            j["witness_t"] = r.witness_t ? json(*r.witness_t) : json(nullptr);
            reps.push_back(j);
        }
        out.emit({{"path", path.to_string()}, {"checked_at_samples_only", true}, {"branches", reps}});
    });

    int repro_status = 0;
    auto* repro = app.add_subcommand("reproduce", "rerun a worked example against embedded golden values");
    repro->add_option("id", id, "scc, cub-hyp, prop4-circle, finite-01, lc-line, p-del-not-proj, or all")->required();
    repro->callback([&] {
        require_format(g, {"json"});
        std::vector<std::string> ids = id == "all" ? reproduce_ids() : std::vector<std::string>{id};
        json all = json::array();
        for (const auto& i : ids) {
            const ReproReport r = reproduce(i, g.cfg);
            if (!r.pass()) repro_status = 1;
            all.push_back(r.to_json());
        }
        out.emit(ids.size() == 1 ? all[0] : all);
    });

    auto* plot = app.add_subcommand("plot-data", "per-branch psi-coordinates along a path, as CSV");
    plot->add_option("target", a1, "preset (cub-hyp, scc, prop4-circle, p-del-not-proj, lc-line) or polynomial")->required();
    add_path_options(plot, path_spec);
    plot->callback([&] {
        require_format(g, {"csv"});
        const bool preset = a1 == "cub-hyp" || a1 == "scc" || a1 == "prop4-circle" || a1 == "p-del-not-proj" ||
                            a1 == "lc-line";
        if (preset) {
            out.text(plot_csv(plot_preset(a1, g.cfg)));
            return;
        }
        const MultiPoly p = one_poly(g, a1);
        const BasePath path = make_path(path_spec, g.cfg.samples);
        out.text(plot_csv({{"P", track_roots(p, path, track_options(g, "projective"))}}));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const TrackingError& e) {
        std::cerr << "tracking failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return repro_status;
}
