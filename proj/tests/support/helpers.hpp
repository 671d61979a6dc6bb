#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "projdel/binary_forms.hpp"
#include "projdel/io.hpp"
#include "projdel/multipoly.hpp"

namespace testing_support {

using namespace projdel;

inline MultiPoly poly(const std::string& text, const std::vector<std::string>& vars) {
    return io::parse_polynomial(text, vars);
}

inline const io::json& goldens() {
    static const io::json g = [] {
        std::ifstream in(PROJDEL_GOLDENS);
        return io::json::parse(in);
    }();
    return g;
}

inline MultiPoly golden_poly(const std::string& key) { return io::multipoly_from_json(goldens().at(key)); }

/// Random polynomials of bounded degree with small integer coefficients.
struct RandomPolys {
    explicit RandomPolys(unsigned seed) : rng(seed) {}

    std::mt19937 rng;

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Rat rational(int lo = -9, int hi = 9, int max_den = 4) {
        Rat q(integer(lo, hi), integer(1, max_den));
        q.canonicalize();
        return q;
    }

    /// Base polynomial in `vars` of total degree <= deg.
    MultiPoly base(const std::vector<std::string>& vars, unsigned deg, int coeff = 9, unsigned max_terms = 4) {
        MultiPoly p(vars);
        const unsigned terms = static_cast<unsigned>(integer(1, static_cast<int>(max_terms)));
        for (unsigned t = 0; t < terms; ++t) {
            Exponents e(vars.size(), 0);
            unsigned left = deg;
            for (auto& x : e) {
                x = static_cast<std::uint32_t>(integer(0, static_cast<int>(left)));
                left -= x;
            }
            p.add_term(e, integer(-coeff, coeff));
        }
        return p;
    }

    /// Polynomial in base_vars + {last} with x_n-degree exactly d (nonzero lc).
    MultiPoly in_last(const std::vector<std::string>& base_vars, const std::string& last, unsigned d,
                      unsigned base_deg = 2, int coeff = 9) {
        std::vector<MultiPoly> cs;
        for (unsigned k = 0; k <= d; ++k) cs.push_back(base(base_vars, base_deg, coeff));
        while (cs.back().is_zero()) cs.back() = base(base_vars, base_deg, coeff);
        return MultiPoly::from_last_coefficients(base_vars, last, cs);
    }

    Matrix2 matrix(int range = 3) {
        while (true) {
            Rat a = integer(-range, range), b = integer(-range, range), c = integer(-range, range),
                d = integer(-range, range);
            if (a * d - b * c != 0) return {a, b, c, d};
        }
    }

    Point point(std::size_t dim) {
        Point p;
        for (std::size_t i = 0; i < dim; ++i) p.push_back(rational());
        return p;
    }
};

inline std::vector<std::string> base_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

}  // namespace testing_support
