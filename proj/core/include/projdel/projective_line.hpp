#pragma once

#include <compare>
#include <string>

#include "projdel/binary_forms.hpp"
#include "projdel/rational.hpp"

namespace projdel {

/// Point of RP^1 in canonical form: (x/y : 1) when y != 0, else (1 : 0).
class ProjPoint {
public:
    /// pi(x, y); throws PreconditionError on (0, 0).
    ProjPoint(const Rat& x, const Rat& y);

    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    bool is_infinity() const { return y_ == 0; }
    /// phi^-1; throws on infinity.
    Rat to_affine() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    /// Finite points by value, infinity last.
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
        if (a.is_infinity() != b.is_infinity())
            return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.is_infinity() ? std::strong_ordering::equal : cmp(a.x_, b.x_) <=> 0;
    }

    std::string to_string() const;

private:
    Rat x_, y_;
};

/// phi(x) = (x : 1)
ProjPoint from_affine(const Rat& x);
/// (1 : 0)
ProjPoint infinity();
/// mu_A(p) = pi(A (x, y)^T)
ProjPoint moebius_point(const Matrix2& a, const ProjPoint& p);

/// psi(x : y) = y / (x^2 + y^2) (x, y), on the circle of radius 1/2 centred at (0, 1/2).
struct NumProjPoint {
    double u = 0;
    double v = 0;
};

NumProjPoint embed_circle(const ProjPoint& p);
/// psi applied to a floating representative (x, y) != (0, 0).
NumProjPoint embed_circle(double x, double y);
/// psi(t : 1) for a finite affine value.
NumProjPoint embed_affine(double t);

double chordal_distance(const NumProjPoint& p, const NumProjPoint& q);

}  // namespace projdel
