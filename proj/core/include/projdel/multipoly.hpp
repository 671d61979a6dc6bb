#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "projdel/rational.hpp"
#include "projdel/unipoly.hpp"

namespace projdel {

using Exponents = std::vector<std::uint32_t>;
using Point = std::vector<Rat>;

/// Sparse multivariate polynomial over Q in a fixed, ordered variable list.
/// The last variable is the projection variable x_n. Terms are kept in a
/// lexicographically ordered map without zero coefficients, so structural
/// equality is polynomial equality.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rat>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);
    /// Sum_k coeffs[k] * last_var^k, where every coeffs[k] lives over base_vars.
    static MultiPoly from_last_coefficients(const std::vector<std::string>& base_vars,
                                            const std::string& last_var,
                                            std::span<const MultiPoly> coeffs);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws if not constant.
    Rat constant_value() const;

    /// Adds c * x^exps (accumulating, dropping zeros).
    void add_term(const Exponents& exps, const Rat& c);

    /// Least d with P in Q[x; x_n]_{<=d}. Throws on the zero polynomial.
    unsigned degree_in_last() const;
    unsigned degree_in(std::size_t var) const;
    unsigned total_degree() const;
    /// Lowest total degree over all terms (the order at the origin).
    unsigned min_total_degree() const;

    /// c_k(x) in P = sum_k c_k(x) x_n^k, as a polynomial over the first n-1 variables.
    MultiPoly coefficient_in_last(unsigned k) const;
    /// c_{deg}(x); throws on the zero polynomial.
    MultiPoly leading_coefficient_in_last() const;
    std::vector<MultiPoly> coefficients_in_last() const;

    Rat evaluate(std::span<const Rat> point) const;
    double evaluate(std::span<const double> point) const;
    /// E_x0(P): substitutes x0 for the first n-1 variables.
    UniPoly evaluate_partial(std::span<const Rat> x0) const;
    /// Replaces variable i by images[i]; all images share target variables.
    MultiPoly substitute(std::span<const MultiPoly> images) const;
    /// f(x + shift)
    MultiPoly translate(std::span<const Rat> shift) const;

    /// Least total order k of a nonvanishing partial derivative at point.
    unsigned order_of_vanishing(std::span<const Rat> point) const;

    MultiPoly derivative_in(std::size_t var) const;
    MultiPoly scale(const Rat& c) const;
    MultiPoly pow(unsigned e) const;
    /// Exact quotient; throws PreconditionError when d does not divide *this.
    MultiPoly divide_exact(const MultiPoly& d) const;
    /// Positive integer-primitive representative of the scaling class (zero stays zero).
    MultiPoly primitive() const;

    /// Same terms, new variable names (must have the same count).
    MultiPoly renamed(std::vector<std::string> vars) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Variable-list compatibility used by binary operations: equal lists, or one
/// side a variable-free constant. Returns the common variable list.
const std::vector<std::string>& common_vars(const MultiPoly& a, const MultiPoly& b);

}  // namespace projdel
