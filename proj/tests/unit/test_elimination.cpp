#include <doctest.h>

#include "helpers.hpp"
#include "projdel/binary_forms.hpp"
#include "projdel/elimination.hpp"
#include "projdel/error.hpp"

using namespace projdel;
using testing_support::golden_poly;
using testing_support::poly;

namespace {
const std::vector<std::string> X12{"x1", "x2"};
const std::vector<std::string> X123{"x1", "x2", "x3"};
}  // namespace

TEST_CASE("resultant of the circle and the hyperbola") {
    const MultiPoly p = poly("x1^2 + x2^2 - 1", X12), q = poly("x1*x2 - 1", X12);
    CHECK(resultant_fixed(p, q, 2, 1) == golden_poly("scc_resultant"));
    CHECK(resultant_fixed(p, q, 2, 1) == poly("x1^4 - x1^2 + 1", {"x1"}));
    CHECK(resultant_fixed(p, p, 2, 2).is_zero());
    CHECK_THROWS_AS(resultant_fixed(p, q, 1, 1), PreconditionError);
    CHECK_THROWS_AS(resultant_fixed(poly("x1", X12), poly("x1 + 1", X12), 0, 0), PreconditionError);
}

TEST_CASE("discriminants against the oracle") {
    CHECK(discriminant_fixed(poly("x2^2 - x1", X12), 2) == golden_poly("disc_parabola"));
    CHECK(discriminant_fixed(poly("x1^2 + x2^2 - 1", X12), 2) == golden_poly("scc_disc_circle"));
    CHECK_THROWS_AS(discriminant_fixed(poly("x1*x2 - 1", X12), 1), PreconditionError);
    CHECK_THROWS_AS(discriminant_fixed(poly("x2^3", X12), 2), PreconditionError);
    // repeated factor in x_n
    CHECK(discriminant_fixed(poly("(x1*x2 - 1)^2*(x2 + x1)", X12), 3).is_zero());
    // vanishing leading coefficient: still a polynomial, zero where a double root at infinity appears
    const MultiPoly disc = discriminant_fixed(poly("x1*x2^2 + x2 + 1", X12), 2);
    CHECK(disc == poly("1 - 4*x1", {"x1"}));
    CHECK(discriminant_fixed(poly("x1*x2^2 + x1*x2 + 1", X12), 2) == poly("x1^2 - 4*x1", {"x1"}));
}

TEST_CASE("cross-check with univariate elimination") {
    const MultiPoly p = poly("x1^2 + x2^2 - 1", X12), q = poly("x1*x2 - 1", X12);
    const Point x0{Rat(-1, 2)};
    const auto check = evaluate_then_eliminate(p, q, 2, 1, x0);
    CHECK(check.agrees());
    CHECK(check.evaluated_then_eliminated ==
          parse_rat(testing_support::goldens().at("scc_res_at_minus_half").get<std::string>()));

    testing_support::RandomPolys gen(31);
    for (int i = 0; i < 20; ++i) {
        const MultiPoly a = gen.in_last({"x1", "x2"}, "x3", 3), b = gen.in_last({"x1", "x2"}, "x3", 2);
        CHECK(evaluate_then_eliminate(a, b, 3, 2, gen.point(2)).agrees());
    }
    const Point zero{0};
    CHECK_THROWS_AS(evaluate_then_eliminate(MultiPoly(X12), q, 2, 1, zero), PreconditionError);
}

TEST_CASE("resultant symmetry and padding") {
    testing_support::RandomPolys gen(37);
    for (int i = 0; i < 30; ++i) {
        const unsigned p = static_cast<unsigned>(gen.integer(1, 4)), q = static_cast<unsigned>(gen.integer(1, 3));
        const MultiPoly a = gen.in_last({"x1"}, "x2", p), b = gen.in_last({"x1"}, "x2", q);
        const MultiPoly rab = resultant_fixed(a, b, p, q), rba = resultant_fixed(b, a, q, p);
        CHECK(rab == ((p * q) % 2 ? -rba : rba));

        // univariate padding: Res^{p+k,q}(u, v) = (+-) lc(v)^k Res^{p,q}(u, v)
        const UniPoly u{gen.rational(), gen.rational(), 1 + gen.integer(0, 3)};
        const UniPoly v{gen.rational(), 2 + gen.integer(0, 3)};
        const unsigned k = static_cast<unsigned>(gen.integer(1, 2));
        Rat lc_pow = 1;
        for (unsigned j = 0; j < k; ++j) lc_pow *= v.leading();
        const Rat padded = resultant_fixed(u, v, 2 + k, 1), plain = resultant_fixed(u, v, 2, 1);
        CHECK((padded == lc_pow * plain || padded == -lc_pow * plain));
    }
}

TEST_CASE("GKZ invariance on a handful of instances") {
    testing_support::RandomPolys gen(41);
    for (int i = 0; i < 10; ++i) {
        const unsigned p = static_cast<unsigned>(gen.integer(2, 3)), q = static_cast<unsigned>(gen.integer(1, 3));
        const MultiPoly a = gen.in_last({"x1"}, "x2", p), b = gen.in_last({"x1"}, "x2", q);
        const Matrix2 m = gen.matrix();
        Rat dpq = 1, dpp = 1;
        for (unsigned j = 0; j < p * q; ++j) dpq *= m.det();
        for (unsigned j = 0; j < p * (p - 1); ++j) dpp *= m.det();
        CHECK(resultant_fixed(moebius_transform(a, m, p), moebius_transform(b, m, q), p, q) ==
              resultant_fixed(a, b, p, q).scale(dpq));
        CHECK(discriminant_fixed(moebius_transform(a, m, p), p) == discriminant_fixed(a, p).scale(dpp));
    }
}

TEST_CASE("determinants") {
    CHECK(determinant(std::vector<std::vector<Rat>>{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(std::vector<std::vector<Rat>>{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}) == -5);
    const auto x = poly("x1", {"x1"});
    PolyMatrix m{{x, MultiPoly::constant({"x1"}, 1)}, {MultiPoly::constant({"x1"}, 1), x}};
    CHECK(determinant(m) == poly("x1^2 - 1", {"x1"}));
}
