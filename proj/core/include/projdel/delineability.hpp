#pragma once

#include <vector>

#include "projdel/binary_forms.hpp"
#include "projdel/multipoly.hpp"
#include "projdel/roots.hpp"

namespace projdel {

/// Projective roots of P above x0 with respect to the global degree
/// deg_{x_n}(P), never the degree of E_x0(P). Throws NullifiedError when
/// E_x0(P) is the zero polynomial.
ProjRootSet projective_roots_above(const MultiPoly& p, std::span<const Rat> x0);

struct FiniteSetVerdict {
    bool delineable = false;
    bool projectively_delineable = false;
};

/// Delineability over a finite base set. On a discrete set every root function
/// is continuous, so (projective) delineability reduces to equality of the
/// multisets of (projective) root multiplicities across the points.
FiniteSetVerdict check_finite_set(const MultiPoly& p, std::span<const Point> points);

struct Desingularization {
    Matrix2 matrix;
    /// H^{d_n}(P)(x, (a11, a21)): nonzero on the neighbourhood V_s, and equal
    /// to the x_n^{d_n} coefficient of the transformed polynomial.
    MultiPoly neighborhood;
    /// A^{*d_n} P
    MultiPoly transformed;
};

/// Unimodular A whose first column (a11, a21) is not a projective root of P
/// above s, so A^{*d_n} P has no root at infinity near s. Directions are tried
/// in a fixed order: (1,0), (0,1), (1,1), (1,-1), then small integer pairs.
Desingularization desingularize_at(const MultiPoly& p, std::span<const Rat> s);

}  // namespace projdel
