#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "helpers.hpp"
#include "projdel/binary_forms.hpp"
#include "projdel/error.hpp"
#include "projdel/roots.hpp"

using namespace projdel;

namespace {

UniPoly from_roots(const std::vector<std::pair<Rat, unsigned>>& roots, const Rat& lead = 1) {
    UniPoly u = UniPoly::constant(lead);
    for (const auto& [r, m] : roots) u = u * UniPoly::linear_root(r).pow(m);
    return u;
}

UniPoly as_uni(const MultiPoly& p) { return p.evaluate_partial(std::span<const Rat>{}); }

}  // namespace

TEST_CASE("squarefree decomposition") {
    const auto sf = squarefree_decomposition(UniPoly({1, 1}).pow(2) * UniPoly({-1, 1}));
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].factor == UniPoly({-1, 1}));
    CHECK(sf[0].multiplicity == 1);
    CHECK(sf[1].factor == UniPoly({1, 1}));
    CHECK(sf[1].multiplicity == 2);

    const auto single = squarefree_decomposition(UniPoly({-2, 0, 1}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].multiplicity == 1);

    const auto neg = squarefree_decomposition(UniPoly({-1, -2, -1}));
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].factor == UniPoly({1, 1}));
    CHECK(neg[0].multiplicity == 2);
    CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), PreconditionError);
}

TEST_CASE("isolation") {
    const auto r = isolate_real_roots(UniPoly({Rat(-3, 4), 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].lo >= -1);
    CHECK(r[0].hi <= 0);
    CHECK(r[1].lo >= 0);
    CHECK(r[1].hi <= 1);
    CHECK(isolate_real_roots(UniPoly({1, 0, 1})).empty());

    const auto m = isolate_real_roots(UniPoly({0, 0, -2, 1}));
    REQUIRE(m.size() == 2);
    CHECK(m[0].is_exact());
    CHECK(m[0].value() == 0);
    CHECK(m[0].multiplicity == 2);
    CHECK(m[1].value() == 2);
    CHECK(m[1].multiplicity == 1);
    CHECK_THROWS_AS(isolate_real_roots(UniPoly()), PreconditionError);
}

TEST_CASE("refinement") {
    const auto roots = isolate_real_roots(UniPoly({Rat(-3, 4), 0, 1}));
    const IsolatedRoot& r = roots[1];
    const IsolatedRoot fine = refine(r, Rat(1, Int(1) << 60));
    CHECK(fine.lo >= r.lo);
    CHECK(fine.hi <= r.hi);
    CHECK(fine.hi - fine.lo <= Rat(1, Int(1) << 60));
    const double golden = testing_support::goldens().at("sqrt3_over_2").get<double>();
    CHECK(std::abs(fine.approximate() - golden) < 1e-12);
    CHECK(compare(r, Rat(1, 2)) == 1);
    CHECK(compare(r, 1) == -1);
    CHECK_THROWS(refine(r, 0));
}

TEST_CASE("isolation is complete on random products of linear factors") {
    testing_support::RandomPolys gen(43);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::pair<Rat, unsigned>> rs;
        const int k = gen.integer(1, 4);
        for (int j = 0; j < k; ++j) rs.emplace_back(gen.rational(-9, 9, 5), gen.integer(1, 3));
        // irrational pair too
        const int c = gen.integer(2, 11);
        UniPoly u = from_roots(rs, gen.integer(1, 5)) * UniPoly({-c, 0, 1});
        const auto roots = isolate_real_roots(u);
        std::map<Rat, unsigned> expected;
        for (const auto& [r, m] : rs) expected[r] += m;
        unsigned total = 0;
        for (std::size_t j = 0; j + 1 < roots.size(); ++j) CHECK(roots[j].hi <= roots[j + 1].lo);
        for (const auto& r : roots) {
            total += r.multiplicity;
            if (!r.is_exact()) {
                // parity of sign change matches the multiplicity
                const int sl = sgn(u(r.lo)), sh = sgn(u(r.hi));
                CHECK(((sl != sh) == (r.multiplicity % 2 == 1)));
            }
        }
        CHECK(total == static_cast<unsigned>(u.degree()));
    }
}

TEST_CASE("projective roots with a reference degree") {
    const ProjRootSet a = projective_roots(UniPoly::constant(-1), 1);
    CHECK(a.real_roots.empty());
    CHECK(a.infinity_multiplicity == 1);

    const ProjRootSet b = projective_roots(UniPoly({-1, -2, -1}), 3);
    REQUIRE(b.real_roots.size() == 1);
    CHECK(b.real_roots[0].value() == -1);
    CHECK(b.real_roots[0].multiplicity == 2);
    CHECK(b.infinity_multiplicity == 1);
    CHECK(b.multiplicities() == std::vector<unsigned>{1, 2});

    const ProjRootSet c = projective_roots(UniPoly({-1, 1}), 3);
    CHECK(c.real_roots[0].value() == 1);
    CHECK(c.infinity_multiplicity == 2);

    CHECK(projective_roots(UniPoly({-2, 0, 1}), 2).infinity_multiplicity == 0);
    CHECK_THROWS_AS(projective_roots(UniPoly(), 2), NullifiedError);
    CHECK_THROWS_AS(projective_roots(UniPoly({1, 1, 1}), 1), PreconditionError);
}

TEST_CASE("multiplicities are transported by Moebius maps") {
    testing_support::RandomPolys gen(47);
    for (int i = 0; i < 60; ++i) {
        std::vector<std::pair<Rat, unsigned>> rs;
        const int k = gen.integer(1, 3);
        for (int j = 0; j < k; ++j) rs.emplace_back(gen.rational(-5, 5, 3), gen.integer(1, 2));
        const UniPoly u = from_roots(rs, gen.integer(1, 3));
        const unsigned d = static_cast<unsigned>(u.degree() + gen.integer(0, 2));
        const Matrix2 a = gen.matrix();
        std::vector<MultiPoly> cs;
        for (const auto& c : u.coeffs()) cs.push_back(MultiPoly::constant({}, c));
        const MultiPoly um = MultiPoly::from_last_coefficients({}, "x", cs);
        const UniPoly t = as_uni(moebius_transform(um, a, d));
        const ProjRootSet before = projective_roots(u, d), after = projective_roots(t, d);
        CHECK(before.multiplicities() == after.multiplicities());
        unsigned sum = 0;
        for (auto m : before.multiplicities()) sum += m;
        CHECK(sum == d);
        for (const auto& r : after.real_roots) {
            REQUIRE(r.is_exact());
            const ProjPoint image = moebius_point(a, r.exact_point());
            bool found = false;
            if (image.is_infinity()) {
                found = before.infinity_multiplicity == r.multiplicity;
            } else {
                for (const auto& s : before.real_roots)
                    if (s.value() == image.to_affine() && s.multiplicity == r.multiplicity) found = true;
            }
            CHECK(found);
        }
    }
}
