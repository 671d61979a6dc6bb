#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projdel/rational.hpp"

namespace projdel {

/// Dense univariate polynomial over Q; coeffs()[k] is the coefficient of x^k.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    UniPoly(std::initializer_list<Rat> coeffs);

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, int k);
    /// (x - r)
    static UniPoly linear_root(const Rat& r);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; throws PreconditionError on the zero polynomial.
    int degree() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    Rat leading() const;

    Rat operator()(const Rat& x) const;
    double eval(double x) const;

    UniPoly derivative() const;
    UniPoly monic() const;
    /// Scale to integer coefficients with gcd 1 and positive leading coefficient.
    UniPoly primitive() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rat& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly pow(unsigned e) const;

    /// Euclidean division; throws on division by zero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// Exact quotient; throws PreconditionError if the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& d) const;

    /// f(a + b x)
    UniPoly affine_substitute(const Rat& a, const Rat& b) const;
    /// x^n f(1/x) for n = degree.
    UniPoly reversed() const;
    /// Sign variations in the coefficient sequence.
    int sign_variations() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace projdel
