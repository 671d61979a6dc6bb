#include "projdel/delineability.hpp"

#include <cstdlib>
#include <numeric>

#include "projdel/error.hpp"

namespace projdel {

ProjRootSet projective_roots_above(const MultiPoly& p, std::span<const Rat> x0) {
    if (p.is_zero()) throw NullifiedError("zero polynomial nullifies everywhere");
    const UniPoly e = p.evaluate_partial(x0);
    if (e.is_zero()) throw NullifiedError(p.to_string() + " nullifies above the given base point");
    return projective_roots(e, p.degree_in_last());
}

FiniteSetVerdict check_finite_set(const MultiPoly& p, std::span<const Point> points) {
    if (points.empty()) throw InputError("finite base set is empty");
    FiniteSetVerdict v{true, true};
    const ProjRootSet first = projective_roots_above(p, points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const ProjRootSet other = projective_roots_above(p, points[i]);
        if (other.real_multiplicities() != first.real_multiplicities()) v.delineable = false;
        if (other.multiplicities() != first.multiplicities()) v.projectively_delineable = false;
    }
    return v;
}

namespace {

std::vector<std::pair<int, int>> candidate_directions(unsigned degree) {
    std::vector<std::pair<int, int>> dirs = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    // A nonzero form of degree d has at most d projective roots, so d + 1
    // pairwise independent directions always contain a good one.
    for (int r = 2; dirs.size() < degree + 5; ++r)
        for (int j = -r; j <= r; ++j)
            for (auto [a, b] : {std::pair{r, j}, std::pair{j, r}})
                if (std::abs(a) == r || std::abs(b) == r)
                    if (std::gcd(std::abs(a), std::abs(b)) == 1 && (a > 0 || (a == 0 && b > 0)))
                        dirs.emplace_back(a, b);
    return dirs;
}

}  // namespace

Desingularization desingularize_at(const MultiPoly& p, std::span<const Rat> s) {
    if (p.is_zero()) throw NullifiedError("zero polynomial nullifies everywhere");
    if (p.evaluate_partial(s).is_zero()) throw NullifiedError(p.to_string() + " nullifies at the given point");
    const unsigned d = p.degree_in_last();
    const BinaryForm h = homogenize(p, d);
    for (auto [a11, a21] : candidate_directions(d)) {
        if (h.evaluate(s, a11, a21) == 0) continue;
        // Complete the column to det = 1.
        const Matrix2 a = a11 != 0 ? Matrix2(a11, 0, a21, Rat(1) / a11) : Matrix2(a11, Rat(-1) / a21, a21, 0);
        return {a, h.at_direction(a11, a21), moebius_transform(p, a, d)};
    }
    throw PreconditionError("no admissible direction found");  // unreachable for nonzero E_s(P)
}

}  // namespace projdel
