#include "projdel/projective_line.hpp"

#include <cmath>

#include "projdel/error.hpp"

namespace projdel {

ProjPoint::ProjPoint(const Rat& x, const Rat& y) {
    if (y != 0) {
        x_ = x / y;
        y_ = 1;
    } else if (x != 0) {
        x_ = 1;
        y_ = 0;
    } else {
        throw PreconditionError("(0, 0) does not define a projective point");
    }
}

Rat ProjPoint::to_affine() const {
    if (is_infinity()) throw PreconditionError("the point at infinity has no affine coordinate");
    return x_;
}

std::string ProjPoint::to_string() const { return "(" + format_rat(x_) + " : " + format_rat(y_) + ")"; }

ProjPoint from_affine(const Rat& x) { return {x, 1}; }

ProjPoint infinity() { return {1, 0}; }

ProjPoint moebius_point(const Matrix2& a, const ProjPoint& p) {
    return {a.a11() * p.x() + a.a12() * p.y(), a.a21() * p.x() + a.a22() * p.y()};
}

NumProjPoint embed_circle(double x, double y) {
    const double n = x * x + y * y;
    if (n == 0) throw PreconditionError("(0, 0) does not define a projective point");
    return {y * x / n, y * y / n};
}

NumProjPoint embed_circle(const ProjPoint& p) {
    if (p.is_infinity()) return {0, 0};
    return embed_affine(p.x().get_d());
}

NumProjPoint embed_affine(double t) {
    // y/(x^2+y^2)*(x,y) with (x,y) = (t,1); stable for large |t|.
    const double n = 1.0 + t * t;
    return {t / n, 1.0 / n};
}

double chordal_distance(const NumProjPoint& p, const NumProjPoint& q) {
    return std::hypot(p.u - q.u, p.v - q.v);
}

}  // namespace projdel
