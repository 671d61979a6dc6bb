#pragma once

#include <vector>

#include "projdel/multipoly.hpp"
#include "projdel/unipoly.hpp"

namespace projdel {

/// Square matrix of base-ring polynomials, row major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Sylvester matrix of (P, Q) w.r.t. reference degrees (p, q): q shifted rows
/// of P's coefficients padded to p+1, then p shifted rows of Q's padded to q+1,
/// highest degree first.
PolyMatrix sylvester_matrix(const MultiPoly& p_poly, const MultiPoly& q_poly, unsigned p, unsigned q);

/// Fraction-free (Bareiss) determinant over Q[x].
MultiPoly determinant(PolyMatrix m);
/// Gaussian-elimination determinant over Q.
Rat determinant(std::vector<std::vector<Rat>> m);

/// Res^{p,q}(P, Q) as a polynomial in the first n-1 variables.
MultiPoly resultant_fixed(const MultiPoly& p_poly, const MultiPoly& q_poly, unsigned p, unsigned q);
/// Univariate Res^{p,q}.
Rat resultant_fixed(const UniPoly& p_poly, const UniPoly& q_poly, unsigned p, unsigned q);

/// Disc^p(P) = (-1)^{p(p-1)/2} Res^{p,p-1}(P, dP/dx_n) / c_p. The division is
/// carried out symbolically on the first Sylvester column, so the result is a
/// polynomial even where c_p vanishes; it vanishes exactly where H^p(P) has a
/// repeated projective root.
MultiPoly discriminant_fixed(const MultiPoly& p_poly, unsigned p);
Rat discriminant_fixed(const UniPoly& p_poly, unsigned p);

struct EliminationCrossCheck {
    Rat evaluated_then_eliminated;
    Rat eliminated_then_evaluated;
    bool agrees() const { return evaluated_then_eliminated == eliminated_then_evaluated; }
};

/// Res^{p,q}(E_x0 P, E_x0 Q) against E_x0 Res^{p,q}(P, Q).
EliminationCrossCheck evaluate_then_eliminate(const MultiPoly& p_poly, const MultiPoly& q_poly, unsigned p,
                                              unsigned q, std::span<const Rat> x0);

}  // namespace projdel
