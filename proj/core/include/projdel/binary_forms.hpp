#pragma once

#include <string>
#include <vector>

#include "projdel/multipoly.hpp"
#include "projdel/rational.hpp"

namespace projdel {

/// Invertible 2x2 rational matrix [[a11, a12], [a21, a22]].
class Matrix2 {
public:
    /// Throws PreconditionError when the determinant vanishes.
    Matrix2(Rat a11, Rat a12, Rat a21, Rat a22);

    static Matrix2 identity() { return {1, 0, 0, 1}; }
    static Matrix2 scalar(const Rat& k) { return {k, 0, 0, k}; }
    static Matrix2 swap() { return {0, 1, 1, 0}; }

    const Rat& a11() const { return a11_; }
    const Rat& a12() const { return a12_; }
    const Rat& a21() const { return a21_; }
    const Rat& a22() const { return a22_; }
    const Rat& det() const { return det_; }

    Matrix2 inverse() const;
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend bool operator==(const Matrix2& a, const Matrix2& b) {
        return a.a11_ == b.a11_ && a.a12_ == b.a12_ && a.a21_ == b.a21_ && a.a22_ == b.a22_;
    }

    std::string to_string() const;

private:
    Rat a11_, a12_, a21_, a22_, det_;
};

/// g(x_n, y) = sum_k c_k(x) x_n^k y^(d-k), with base coefficients c_k over the
/// first n-1 variables. The degree d is part of the value: forms of different
/// degree are never identified.
class BinaryForm {
public:
    BinaryForm(unsigned degree, std::vector<MultiPoly> coeffs, std::vector<std::string> base_vars,
               std::string var);

    unsigned degree() const { return degree_; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
    const MultiPoly& coeff(unsigned k) const { return coeffs_.at(k); }
    const std::vector<std::string>& base_vars() const { return base_vars_; }
    const std::string& var() const { return var_; }

    bool is_zero() const;
    /// E_x0(g)(x, y)
    Rat evaluate(std::span<const Rat> x0, const Rat& x, const Rat& y) const;
    /// g(x, (x_n, y) = (u, v)) as a polynomial in the base variables.
    MultiPoly at_direction(const Rat& u, const Rat& v) const;

    friend bool operator==(const BinaryForm& a, const BinaryForm& b);

    std::string to_string() const;

private:
    unsigned degree_;
    std::vector<MultiPoly> coeffs_;
    std::vector<std::string> base_vars_;
    std::string var_;
};

/// H^d(P). Throws PreconditionError if deg_{x_n}(P) > d.
BinaryForm homogenize(const MultiPoly& p, unsigned d);

/// iota^{*d} g: sets y := 1.
MultiPoly pullback(const BinaryForm& g);

/// R_A g = g o A.
BinaryForm compose_right(const BinaryForm& g, const Matrix2& a);

/// A^{*d} P = sum_k c_k(x) (a11 x_n + a12)^k (a21 x_n + a22)^(d-k), expanded
/// term by term with binomial coefficients.
MultiPoly moebius_transform(const MultiPoly& p, const Matrix2& a, unsigned d);

/// iota_A^{*d} = iota^{*d} o R_A
MultiPoly pullback_wrt(const BinaryForm& g, const Matrix2& a);

/// H_A^d = R_{A^-1} o H^d
BinaryForm homogenize_wrt(const MultiPoly& p, const Matrix2& a, unsigned d);

}  // namespace projdel
