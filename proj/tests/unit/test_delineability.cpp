#include <doctest.h>

#include "helpers.hpp"
#include "projdel/delineability.hpp"
#include "projdel/error.hpp"
#include "projdel/projection.hpp"
#include "projdel/tracking.hpp"

using namespace projdel;
using testing_support::poly;

namespace {
const std::vector<std::string> X12{"x1", "x2"};
const std::vector<std::string> X123{"x1", "x2", "x3"};
const char* kCubHyp = "(x1*x2 - 1)*(x2 + x1^3)";
const char* kFinite = "(x1*x2 - 1)*((x1 - 1)*x2 - 1)^2";
}  // namespace

TEST_CASE("roots above a base point use the global degree") {
    const Point zero{0};
    const ProjRootSet a = projective_roots_above(poly("x1*x2 - 1", X12), zero);
    CHECK(a.real_roots.empty());
    CHECK(a.infinity_multiplicity == 1);

    const Point two{2};
    const ProjRootSet b = projective_roots_above(poly(kCubHyp, X12), two);
    REQUIRE(b.real_roots.size() == 2);
    CHECK(b.real_roots[0].value() == -8);
    CHECK(b.real_roots[1].value() == Rat(1, 2));
    CHECK(b.infinity_multiplicity == 0);

    const Point origin{0, 0};
    const ProjRootSet c = projective_roots_above(poly("x1*x3^3 + (x1^2 + x2^2)*x3^2 + 1", X123), origin);
    CHECK(c.real_roots.empty());
    CHECK(c.infinity_multiplicity == 3);

    CHECK_THROWS_AS(projective_roots_above(poly("x1*x2", X12), zero), NullifiedError);
}

TEST_CASE("finite base sets") {
    const std::vector<Point> pts{{0}, {1}};
    const FiniteSetVerdict v = check_finite_set(poly(kFinite, X12), pts);
    const auto& g = testing_support::goldens().at("finite_verdict");
    CHECK(v.delineable == g.at("delineable").get<bool>());
    CHECK(v.projectively_delineable == g.at("projectively_delineable").get<bool>());
    CHECK_FALSE(v.delineable);
    CHECK(v.projectively_delineable);

    const std::vector<Point> sym{{Rat(-1, 2)}, {Rat(1, 2)}};
    const FiniteSetVerdict w = check_finite_set(poly("x1^2 + x2^2 - 1", X12), sym);
    CHECK(w.delineable);
    CHECK(w.projectively_delineable);

    const std::vector<Point> one{{Rat(7, 3)}};
    const FiniteSetVerdict s = check_finite_set(poly(kFinite, X12), one);
    CHECK(s.delineable);
    CHECK(s.projectively_delineable);

    const std::vector<Point> bad{{0}, {5}};
    CHECK_THROWS_AS(check_finite_set(poly("x1*x2", X12), bad), NullifiedError);
}

TEST_CASE("desingularization") {
    const Point zero{0};
    const Desingularization d = desingularize_at(poly(kCubHyp, X12), zero);
    CHECK(d.matrix == Matrix2(1, 0, 1, 1));
    CHECK(d.transformed == poly("((x1 - 1)*x2 - 1)*((1 + x1^3)*x2 + x1^3)", X12));
    CHECK(d.neighborhood.evaluate(zero) != 0);
    CHECK(d.transformed.coefficient_in_last(2) == d.neighborhood);

    const Desingularization id = desingularize_at(poly("x1^2 + x2^2 - 1", X12), zero);
    CHECK(id.matrix == Matrix2::identity());

    const Desingularization h = desingularize_at(poly("x1*x2 - 1", X12), zero);
    CHECK(h.matrix.det() == 1);
    CHECK(h.matrix.a21() != 0);
    CHECK(h.neighborhood.evaluate(zero) == -h.matrix.a21());
    CHECK(projective_roots_above(h.transformed, zero).infinity_multiplicity == 0);

    CHECK_THROWS_AS(desingularize_at(poly("x1*x2", X12), zero), NullifiedError);
}

TEST_CASE("desingularization removes roots at infinity on random instances") {
    testing_support::RandomPolys gen(53);
    for (int i = 0; i < 40; ++i) {
        const MultiPoly p = gen.in_last({"x1"}, "x2", static_cast<unsigned>(gen.integer(1, 3)));
        const Point s{gen.integer(-3, 3)};
        if (p.evaluate_partial(s).is_zero()) continue;
        const Desingularization d = desingularize_at(p, s);
        CHECK(d.matrix.det() == 1);
        CHECK(projective_roots_above(d.transformed, s).infinity_multiplicity == 0);
        CHECK(projective_roots_above(d.transformed, s).multiplicities() == projective_roots_above(p, s).multiplicities());
    }
}

TEST_CASE("tracking the cubic and the hyperbola") {
    const BasePath path = BasePath::segment({-2}, {2}, 256);
    const TrackResult r = track_roots(poly(kCubHyp, X12), path);
    CHECK(r.verdict.status == TrackStatus::consistent);
    CHECK(r.verdict.branch_count == 2);
    CHECK(r.verdict.multiplicity_vector == std::vector<unsigned>{1, 1});
    bool through_infinity = false;
    for (const auto& s : r.samples)
        for (const auto& root : s.roots)
            if (root.is_infinity) {
                through_infinity = true;
                CHECK(s.base[0] == 0);
            }
    CHECK(through_infinity);
    // classical tracking breaks at x1 = 0
    TrackOptions real;
    real.mode = TrackMode::real;
    const TrackResult c = track_roots(poly(kCubHyp, X12), path, real);
    CHECK(c.verdict.status == TrackStatus::violation);
    CHECK(c.verdict.witness_point->at(0) == 0);
}

TEST_CASE("tracking detects the appearing root at infinity") {
    const unsigned n = 64;
    const TrackResult r = track_roots(poly("x1^2*x2^2 + 1", X12), BasePath::segment({-1}, {1}, n));
    CHECK(r.verdict.status == TrackStatus::violation);
    REQUIRE(r.verdict.witness_point);
    CHECK(abs(r.verdict.witness_point->at(0)) < Rat(2, n));
}

TEST_CASE("Moebius transport of tracked branches") {
    const MultiPoly p = poly("x1^2 + x2^2 - 4", X12);
    const Matrix2 a{1, 2, -1, 1};
    const MultiPoly t = moebius_transform(p, a, 2);
    const BasePath path = BasePath::segment({-1}, {1}, 32);
    const TrackResult rp = track_roots(p, path), rt = track_roots(t, path);
    REQUIRE(rp.samples.size() == rt.samples.size());
    for (std::size_t i = 0; i < rp.samples.size(); ++i) {
        const auto& sp = rp.samples[i];
        const auto& st = rt.samples[i];
        REQUIRE(sp.roots.size() == st.roots.size());
        for (const auto& root : st.roots) {
            const ProjPoint img = root.is_infinity ? moebius_point(a, infinity())
                                                   : moebius_point(a, from_affine(rationalize(root.real_root->approximate(), 1L << 40)));
            const NumProjPoint e = embed_circle(img);
            double best = 1;
            for (const auto& q : sp.roots) best = std::min(best, chordal_distance(e, q.position));
            CHECK(best < 1e-6);
        }
    }
}

TEST_CASE("classical and projective tracking agree where lc never vanishes") {
    const MultiPoly p = poly("(x2 - x1)*(x2 + 2*x1 - 3)*(2*x2^2 + 1)", X12);
    const BasePath path = BasePath::segment({2}, {3}, 64);
    TrackOptions real;
    real.mode = TrackMode::real;
    const TrackResult a = track_roots(p, path), b = track_roots(p, path, real);
    CHECK(a.verdict.status == TrackStatus::consistent);
    CHECK(b.verdict.status == TrackStatus::consistent);
    CHECK(a.verdict.multiplicity_vector == b.verdict.multiplicity_vector);
    for (const auto& s : a.samples)
        for (const auto& r : s.roots) CHECK_FALSE(r.is_infinity);
}

TEST_CASE("lc vanishing identically on the path") {
    // c_2 = x1 vanishes on the line x1 = 0; projective CONSISTENT implies real CONSISTENT
    const MultiPoly p = poly("x1*x3^2 + x3 - x2^2 - 1", X123);
    const BasePath path = BasePath::segment({0, -1}, {0, 1}, 32);
    TrackOptions real;
    real.mode = TrackMode::real;
    CHECK(track_roots(p, path).verdict.status == TrackStatus::consistent);
    CHECK(track_roots(p, path, real).verdict.status == TrackStatus::consistent);
}

TEST_CASE("section sign checks") {
    const MultiPoly p = poly("x1^2 + x2^2 - 1", X12);
    const BasePath path = BasePath::segment({Rat(-9, 10)}, {Rat(9, 10)}, 64);
    for (const auto& rep : section_sign_check(p, poly("x1*x2 - 1", X12), path))
        CHECK(rep.status == SectionStatus::never_vanishes);
    for (const auto& rep : section_sign_check(p, p, path)) CHECK(rep.status == SectionStatus::vanishes_identically);

    const MultiPoly q = poly("x2 + x1^3", X12);
    const MultiPoly pq = q * poly("x2^2 + x1^2 + 1", X12) * poly("x2 - 5", X12);
    const auto reports = section_sign_check(pq, q, BasePath::segment({-1}, {1}, 32));
    std::size_t identically = 0;
    for (const auto& rep : reports) {
        CHECK(rep.status != SectionStatus::mixed);
        if (rep.status == SectionStatus::vanishes_identically) ++identically;
    }
    CHECK(identically == 1);

    // a crossing is reported as MIXED with a witness
    const auto mixed = section_sign_check(poly("x2", X12), poly("x2 - x1", X12), BasePath::segment({-1}, {1}, 16));
    REQUIRE(mixed.size() == 1);
    CHECK(mixed[0].status == SectionStatus::mixed);
    CHECK(mixed[0].witness_t);
}

TEST_CASE("projection operators") {
    const std::vector<MultiPoly> f{poly("x1^2 + x2^2 - 1", X12), poly("x1*x2 - 1", X12)};
    const ProjectionSet cl = project_classical(f), pr = project_projective(f);
    CHECK(cl.contains(poly("x1", {"x1"})));
    CHECK(cl.contains(poly("x1^2 - 1", {"x1"})));
    CHECK(cl.contains(poly("x1^4 - x1^2 + 1", {"x1"})));
    CHECK(cl.generators.size() == 3);
    CHECK_FALSE(pr.contains(poly("x1", {"x1"})));
    CHECK(pr.generators.size() == 2);
    CHECK(same_generators(with_leading_coefficients(pr, f), cl));
    for (const auto& g : pr.generators)
        for (const auto& tag : g.provenance) CHECK(tag.rfind("lc(", 0) != 0);

    const std::vector<MultiPoly> monic{poly("x2^2 - x1", X12)};
    CHECK(project_projective(monic).generators.size() == project_classical(monic).generators.size());

    testing_support::RandomPolys gen(59);
    for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<MultiPoly> fs;
        for (std::size_t i = 0; i < m; ++i) fs.push_back(gen.in_last({"x1"}, "x2", 2));
        std::size_t res_tags = 0;
        for (const auto& g : project_projective(fs).generators)
            for (const auto& tag : g.provenance) res_tags += tag.rfind("res(", 0) == 0;
        // constants can drop out, so only an upper bound holds on the generator count
        CHECK(res_tags <= m * (m - 1) / 2);
    }

    CHECK_THROWS_AS(project_classical(std::vector<MultiPoly>{poly("x1", X12)}), PreconditionError);
}

TEST_CASE("one-dimensional cells") {
    const std::vector<MultiPoly> f{poly("x1^2 + x2^2 - 1", X12), poly("x1*x2 - 1", X12)};
    const CellInterval c = cell_bounds_1d(f, Rat(-1, 2), ProjectionMode::classical);
    const CellInterval p = cell_bounds_1d(f, Rat(-1, 2), ProjectionMode::projective);
    const auto& gc = testing_support::goldens().at("cell_classical");
    const auto& gp = testing_support::goldens().at("cell_projective");
    CHECK(c.lower.to_string(true) == gc[0].get<std::string>());
    CHECK(c.upper.to_string(false) == gc[1].get<std::string>());
    CHECK(p.lower.to_string(true) == gp[0].get<std::string>());
    CHECK(p.upper.to_string(false) == gp[1].get<std::string>());

    const CellInterval all = cell_bounds_1d(std::vector<MultiPoly>{poly("x2", X12)}, 5, ProjectionMode::classical);
    CHECK(all.lower.to_string(true) == "-inf");
    CHECK(all.upper.to_string(false) == "inf");
    CHECK_THROWS_AS(cell_bounds_1d(f, 0, ProjectionMode::classical), PreconditionError);
    CHECK_NOTHROW(cell_bounds_1d(f, 0, ProjectionMode::projective));

    const CellInterval irr = cell_bounds_1d(std::vector<MultiPoly>{poly("x2^2 + x1^2 - 2", X12)}, 0, ProjectionMode::projective);
    CHECK(irr.upper.root);
    CHECK_FALSE(irr.upper.root->is_exact());
}
