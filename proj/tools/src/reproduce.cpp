#include "reproduce.hpp"

#include <cstdio>
#include <map>
#include <set>

#include "projdel/delineability.hpp"
#include "projdel/elimination.hpp"
#include "projdel/error.hpp"
#include "projdel/projection.hpp"

namespace projdel::cli {

namespace {

const std::vector<std::string> X12{"x1", "x2"};
const std::vector<std::string> X123{"x1", "x2", "x3"};
const char* kCircle = "x1^2 + x2^2 - 1";
const char* kHyperbola = "x1*x2 - 1";
const char* kCubHyp = "(x1*x2 - 1)*(x2 + x1^3)";
const char* kCubHypTransformed = "((x1 - 1)*x2 - 1)*((1 + x1^3)*x2 + x1^3)";
const char* kSwapQuartic = "(1 - x1)*x3^4 + 4*x2*x3^3 + (2 + 6*x1)*x3^2 - 4*x2*x3 + (1 - x1)";
const char* kSwapQuarticDisc = "2^14*(x1^2 + x2^2 - 1)^2*(x1^2 + x2^2)";  // oracle constant c = 1
const char* kFinite = "(x1*x2 - 1)*((x1 - 1)*x2 - 1)^2";
const char* kLcLine = "x1*x3^3 + (x1^2 + x2^2)*x3^2 + 1";
const char* kNoRealRoots = "x1^2*x2^2 + 1";

MultiPoly P(const char* text, const std::vector<std::string>& vars) { return io::parse_polynomial(text, vars); }

TrackOptions options(const Config& cfg, TrackMode mode = TrackMode::projective) {
    TrackOptions o;
    o.jump_threshold = cfg.jump_threshold;
    o.matching_margin = 0.25 * cfg.jump_threshold;
    o.mode = mode;
    return o;
}

std::string join(const std::vector<unsigned>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string point_string(const std::optional<Point>& p) {
    if (!p) return "none";
    std::string s = "(";
    for (std::size_t i = 0; i < p->size(); ++i) s += (i ? "," : "") + format_rat((*p)[i]);
    return s + ")";
}

class Report {
public:
    Report(std::string id, std::string description) {
        r_.id = std::move(id);
        r_.description = std::move(description);
    }
    void check(std::string name, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        r_.checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    }
    ReproReport done() { return std::move(r_); }

private:
    ReproReport r_;
};

std::string roots_string(const ProjRootSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& r : s.real_roots) {
        out += (first ? "" : ", ") + (r.is_exact() ? format_rat(r.value()) : "~" + std::to_string(r.approximate())) +
               " mult " + std::to_string(r.multiplicity);
        first = false;
    }
    if (s.infinity_multiplicity)
        out += std::string(first ? "" : ", ") + "inf mult " + std::to_string(s.infinity_multiplicity);
    return out + "}";
}

ReproReport scc(const Config&) {
    Report rep("scc", "single cell around x1 = -1/2 for the circle and the hyperbola");
    const std::vector<MultiPoly> f{P(kCircle, X12), P(kHyperbola, X12)};
    const CellInterval c = cell_bounds_1d(f, Rat(-1, 2), ProjectionMode::classical);
    const CellInterval p = cell_bounds_1d(f, Rat(-1, 2), ProjectionMode::projective);
    rep.check("classical interval", "(-1, 0)", "(" + c.lower.to_string(true) + ", " + c.upper.to_string(false) + ")");
    rep.check("projective interval", "(-1, 1)", "(" + p.lower.to_string(true) + ", " + p.upper.to_string(false) + ")");
    rep.check("resultant", "x1^4 - x1^2 + 1",
              resultant_fixed(f[0], f[1], 2, 1) == P("x1^4 - x1^2 + 1", {"x1"}) ? "x1^4 - x1^2 + 1"
                                                                                : resultant_fixed(f[0], f[1], 2, 1).to_string());
    return rep.done();
}

ReproReport cub_hyp(const Config& cfg) {
    Report rep("cub-hyp", "cubic times hyperbola: a root branch through infinity, and its removal by a Moebius map");
    const MultiPoly p = P(kCubHyp, X12);
    const Point two{2};
    rep.check("roots above x1=2", "{-8 mult 1, 1/2 mult 1}", roots_string(projective_roots_above(p, two)));
    const TrackResult tr = track_roots(p, BasePath::segment({-2}, {2}, cfg.samples), options(cfg));
    rep.check("status on [-2,2]", "CONSISTENT", to_string(tr.verdict.status));
    rep.check("branch count", "2", std::to_string(tr.verdict.branch_count));
    rep.check("multiplicities", "(1,1)", join(tr.verdict.multiplicity_vector));
    std::set<std::string> inf_at;
    for (const auto& s : tr.samples)
        for (const auto& r : s.roots)
            if (r.is_infinity) inf_at.insert(format_rat(s.base[0]));
    std::string inf = inf_at.empty() ? "never" : *inf_at.begin();
    if (inf_at.size() > 1) inf = "several";
    rep.check("branch through infinity at x1", "0", inf);
    const Point zero{0};
    const Desingularization d = desingularize_at(p, zero);
    rep.check("de-singularizing matrix", "[[1, 0], [1, 1]]", d.matrix.to_string());
    rep.check("transformed polynomial", "match", d.transformed == P(kCubHypTransformed, X12) ? "match" : d.transformed.to_string());
    return rep.done();
}

ReproReport swap_quartic_circle(const Config& cfg) {
    Report rep("prop4-circle", "quartic whose projective roots swap around the unit circle");
    const MultiPoly p = P(kSwapQuartic, X123);
    const MultiPoly disc = discriminant_fixed(p, 4);
    rep.check("discriminant", "2^14*(x1^2 + x2^2 - 1)^2*(x1^2 + x2^2)",
              disc == P(kSwapQuarticDisc, X12) ? "2^14*(x1^2 + x2^2 - 1)^2*(x1^2 + x2^2)" : disc.to_string());
    std::string orders;
    for (const Point& v : {Point{1, 0}, Point{0, 1}, Point{Rat(3, 5), Rat(4, 5)}, Point{Rat(5, 13), Rat(12, 13)}})
        orders += std::to_string(disc.order_of_vanishing(v));
    rep.check("discriminant order at 4 circle points", "2222", orders);
    const unsigned n = std::max(cfg.samples, 720u);
    for (unsigned samples : {n, 2 * n}) {
        const TrackResult tr = track_roots(p, BasePath::circle({0, 0}, 1, samples), options(cfg));
        const std::string at = " (N=" + std::to_string(samples) + ")";
        rep.check("branch count" + at, "2", std::to_string(tr.verdict.branch_count));
        rep.check("multiplicities" + at, "(2,2)", join(tr.verdict.multiplicity_vector));
        rep.check("monodromy" + at, "(1 2)", tr.verdict.monodromy_cycles());
        rep.check("status" + at, "VIOLATION", to_string(tr.verdict.status));
    }
    return rep.done();
}

ReproReport finite_01(const Config&) {
    Report rep("finite-01", "base set {0, 1}: projectively delineable but not delineable");
    const MultiPoly p = P(kFinite, X12);
    const Point zero{0}, one{1};
    rep.check("roots above x1=0", "{-1 mult 2, inf mult 1}", roots_string(projective_roots_above(p, zero)));
    rep.check("roots above x1=1", "{1 mult 1, inf mult 2}", roots_string(projective_roots_above(p, one)));
    const std::vector<Point> pts{zero, one};
    const FiniteSetVerdict v = check_finite_set(p, pts);
    rep.check("delineable", "false", v.delineable ? "true" : "false");
    rep.check("projectively delineable", "true", v.projectively_delineable ? "true" : "false");
    return rep.done();
}

ReproReport lc_line(const Config& cfg) {
    Report rep("lc-line", "leading coefficient vanishing on a line: a root of multiplicity 3 at infinity");
    const MultiPoly p = P(kLcLine, X123);
    const Point origin{0, 0};
    rep.check("roots above (0,0)", "{inf mult 3}", roots_string(projective_roots_above(p, origin)));
    const TrackResult tr = track_roots(p, BasePath::segment({0, -1}, {0, 1}, cfg.samples), options(cfg));
    rep.check("status on x1=0, x2 in [-1,1]", "VIOLATION", to_string(tr.verdict.status));
    rep.check("witness", "(0,0)", point_string(tr.verdict.witness_point));
    return rep.done();
}

ReproReport p_del_not_proj(const Config& cfg) {
    Report rep("p-del-not-proj", "delineable (no real roots) but not projectively delineable");
    const MultiPoly p = P(kNoRealRoots, X12);
    const BasePath path = BasePath::segment({-1}, {1}, cfg.samples);
    const TrackResult real = track_roots(p, path, options(cfg, TrackMode::real));
    const TrackResult proj = track_roots(p, path, options(cfg));
    rep.check("real tracking", "CONSISTENT", to_string(real.verdict.status));
    rep.check("real branch count", "0", std::to_string(real.verdict.branch_count));
    rep.check("projective tracking", "VIOLATION", to_string(proj.verdict.status));
    rep.check("witness", "(0)", point_string(proj.verdict.witness_point));
    const Point zero{0};
    rep.check("roots above x1=0", "{inf mult 2}", roots_string(projective_roots_above(p, zero)));
    return rep.done();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

bool ReproReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

io::json ReproReport::to_json() const {
    io::json cs = io::json::array();
    for (const auto& c : checks)
        cs.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return {{"id", id}, {"description", description}, {"checks", cs}, {"status", pass() ? "PASS" : "FAIL"}};
}

const std::vector<std::string>& reproduce_ids() {
    static const std::vector<std::string> ids{"scc", "cub-hyp", "prop4-circle", "finite-01", "lc-line", "p-del-not-proj"};
    return ids;
}

ReproReport reproduce(const std::string& id, const Config& cfg) {
    if (id == "scc") return scc(cfg);
    if (id == "cub-hyp") return cub_hyp(cfg);
    if (id == "prop4-circle") return swap_quartic_circle(cfg);
    if (id == "finite-01") return finite_01(cfg);
    if (id == "lc-line") return lc_line(cfg);
    if (id == "p-del-not-proj") return p_del_not_proj(cfg);
    throw InputError("unknown example id '" + id + "'");
}

std::vector<NamedTrack> plot_preset(const std::string& id, const Config& cfg) {
    const TrackOptions o = options(cfg);
    if (id == "cub-hyp")
        return {{"P", track_roots(P(kCubHyp, X12), BasePath::segment({-2}, {2}, cfg.samples), o)}};
    if (id == "scc") {
        const BasePath path = BasePath::segment({-2}, {2}, cfg.samples);
        return {{"circle", track_roots(P(kCircle, X12), path, o)},
                {"hyperbola", track_roots(P(kHyperbola, X12), path, o)}};
    }
    if (id == "prop4-circle")
        return {{"P", track_roots(P(kSwapQuartic, X123), BasePath::circle({0, 0}, 1, std::max(cfg.samples, 720u)), o)}};
    if (id == "p-del-not-proj")
        return {{"P", track_roots(P(kNoRealRoots, X12), BasePath::segment({-1}, {1}, cfg.samples), o)}};
    if (id == "lc-line")
        return {{"P", track_roots(P(kLcLine, X123), BasePath::segment({0, -1}, {0, 1}, cfg.samples), o)}};
    throw InputError("no plot preset '" + id + "' (cub-hyp, scc, prop4-circle, p-del-not-proj, lc-line)");
}

std::string plot_csv(const std::vector<NamedTrack>& curves) {
    struct Column {
        std::size_t curve;
        std::size_t branch;
    };
    std::vector<Column> cols;
    std::string header = "t";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        std::set<std::size_t> branches;
        for (const auto& s : curves[c].second.samples)
            for (const auto& r : s.roots) branches.insert(r.branch);
        for (std::size_t b : branches) {
            cols.push_back({c, b});
            const std::string name = curves[c].first + "_b" + std::to_string(b + 1);
            header += "," + name + "_u," + name + "_v";
        }
    }
    std::string out = header + "\n";
    if (cols.empty()) return out;

    // rows keyed by exact parameter; cell text per column
    std::map<Rat, std::pair<double, std::vector<std::string>>> rows;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        for (const auto& s : curves[cols[k].curve].second.samples) {
            auto& row = rows[s.parameter];
            row.first = s.t;
            row.second.resize(2 * cols.size());
            for (const auto& r : s.roots)
                if (r.branch == cols[k].branch) {
                    row.second[2 * k] = fmt(r.position.u);
                    row.second[2 * k + 1] = fmt(r.position.v);
                }
        }
    }
    for (const auto& [param, row] : rows) {
        out += fmt(row.first);
        for (const auto& cell : row.second) out += "," + cell;
        out += "\n";
    }
    return out;
}

}  // namespace projdel::cli
