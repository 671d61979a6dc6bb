#include <doctest.h>

#include "helpers.hpp"
#include "projdel/error.hpp"

using namespace projdel;
using testing_support::poly;

namespace {
const std::vector<std::string> X12{"x1", "x2"};
const std::vector<std::string> X123{"x1", "x2", "x3"};
const MultiPoly kSwapQuartic =
    poly("(1 - x1)*x3^4 + 4*x2*x3^3 + (2 + 6*x1)*x3^2 - 4*x2*x3 + (1 - x1)", X123);
}  // namespace

TEST_CASE("rationals parse to canonical form") {
    CHECK(parse_rat("6/-4") == Rat(-3, 2));
    CHECK(format_rat(parse_rat("10/4")) == "5/2");
    CHECK(format_rat(parse_rat("+7")) == "7");
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("abc"), InputError);
    CHECK(rationalize(0.75, 100) == Rat(3, 4));
}

TEST_CASE("evaluate_partial") {
    const Point half{Rat(-1, 2)};
    CHECK(poly("x1^2 + x2^2 - 1", X12).evaluate_partial(half) == UniPoly({Rat(-3, 4), 0, 1}));
    const Point zero{0};
    CHECK(poly("(x1*x2 - 1)*((x1 - 1)*x2 - 1)^2", X12).evaluate_partial(zero) == UniPoly({-1, -2, -1}));
    CHECK(poly("x1*x2 - 1", X12).evaluate_partial(zero) == UniPoly::constant(-1));
    const Point wrong{1, 2};
    CHECK_THROWS_AS(poly("x1*x2", X12).evaluate_partial(wrong), InputError);
}

TEST_CASE("degree and coefficients in the last variable") {
    CHECK(poly("x1*x2 - 1", X12).degree_in_last() == 1);
    CHECK(poly("(x1*x2 - 1)*(x2 + x1^3)", X12).degree_in_last() == 2);
    CHECK(kSwapQuartic.degree_in_last() == 4);
    CHECK_THROWS_AS(MultiPoly(X12).degree_in_last(), PreconditionError);

    CHECK(poly("x1*x2 - 1", X12).coefficient_in_last(1) == poly("x1", {"x1"}));
    CHECK(kSwapQuartic.coefficient_in_last(4) == poly("1 - x1", X12));
    CHECK(poly("x1^2*x2^2 + 1", X12).coefficient_in_last(2) == poly("x1^2", {"x1"}));
    CHECK(poly("x1*x2 - 1", X12).coefficient_in_last(5).is_zero());
}

TEST_CASE("order of vanishing") {
    const Point origin{0, 0};
    CHECK(poly("x1^2 + x2^2", X12).order_of_vanishing(origin) == 2);
    const MultiPoly disc = poly("2^14*(x1^2 + x2^2 - 1)^2*(x1^2 + x2^2)", X12);
    const Point p10{1, 0};
    CHECK(disc.order_of_vanishing(p10) == 2);
    const Point p01{0, 1};
    CHECK(poly("x1*x2", X12).order_of_vanishing(p01) == 1);
    const Point p22{2, 2};
    CHECK(poly("x1*x2", X12).order_of_vanishing(p22) == 0);
    CHECK_THROWS_AS(MultiPoly(X12).order_of_vanishing(origin), PreconditionError);
}

TEST_CASE("ring operations") {
    CHECK(poly("x2^3", X12).derivative_in(1) == poly("3*x2^2", X12));
    CHECK(poly("x1*x2 - 1", X12) * poly("x2 + x1^3", X12) == poly("x1*x2^2 + x1^4*x2 - x2 - x1^3", X12));
    const MultiPoly p = poly("3*x1*x2 - 7/3", X12);
    CHECK((p + p.scale(-1)).is_zero());
    CHECK((p * p).divide_exact(p) == p);
    CHECK_THROWS_AS(p.divide_exact(poly("x1", X12)), PreconditionError);
}

TEST_CASE("poly_core properties on random instances") {
    testing_support::RandomPolys gen(11);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly p = gen.in_last({"x1"}, "x2", 3);
        const MultiPoly q = gen.in_last({"x1"}, "x2", 2);
        CHECK((p + q) - q == p);
        const Point x0 = gen.point(1);
        CHECK((p * q).evaluate_partial(x0) == p.evaluate_partial(x0) * q.evaluate_partial(x0));
        CHECK((p + q).evaluate_partial(x0) == p.evaluate_partial(x0) + q.evaluate_partial(x0));

        const Point v = gen.point(2);
        CHECK((p.order_of_vanishing(v) == 0) == (p.evaluate(v) != 0));

        // ord(f o A, v) = ord(f, A v) for an invertible linear A on (x1, x2)
        const Matrix2 a = gen.matrix();
        const std::vector<MultiPoly> images{
            poly(format_rat(a.a11()) + "*x1 + " + format_rat(a.a12()) + "*x2", X12),
            poly(format_rat(a.a21()) + "*x1 + " + format_rat(a.a22()) + "*x2", X12)};
        const MultiPoly f = p * p;  // order 2 somewhere on the curve
        const MultiPoly fa = f.substitute(images);
        const Point av{a.a11() * v[0] + a.a12() * v[1], a.a21() * v[0] + a.a22() * v[1]};
        CHECK(fa.order_of_vanishing(v) == f.order_of_vanishing(av));
    }
}

TEST_CASE("order of vanishing is transported on singular points") {
    // (x1^2 + x2^2 - 1)^2 vanishes to order 2 on the circle; pick exact circle points.
    const MultiPoly f = poly("(x1^2 + x2^2 - 1)^2", X12);
    for (const auto& v : {Point{Rat(3, 5), Rat(4, 5)}, Point{Rat(5, 13), Rat(-12, 13)}, Point{Rat(-8, 17), Rat(15, 17)}}) {
        REQUIRE(v[0] * v[0] + v[1] * v[1] == 1);
        CHECK(f.order_of_vanishing(v) == 2);
    }
}

TEST_CASE("univariate arithmetic") {
    const UniPoly f{-1, 0, 1};
    const UniPoly g{1, 1};
    CHECK(f.divide_exact(g) == UniPoly({-1, 1}));
    CHECK(gcd(f, g * g) == g);
    auto [q, r] = UniPoly({1, 0, 0, 1}).divmod(g);
    CHECK(r.is_zero());
    CHECK(q == UniPoly({1, -1, 1}));
    CHECK(UniPoly({2, 3}).affine_substitute(1, 2) == UniPoly({5, 6}));
    CHECK(UniPoly({1, 2, 3}).reversed() == UniPoly({3, 2, 1}));
    CHECK_THROWS_AS(UniPoly().degree(), PreconditionError);
}
