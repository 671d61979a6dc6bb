#pragma once

#include <optional>
#include <vector>

#include "projdel/projective_line.hpp"
#include "projdel/unipoly.hpp"

namespace projdel {

struct SquarefreeFactor {
    UniPoly factor;  // monic, squarefree
    unsigned multiplicity = 0;
};

/// Yun's algorithm. Product of factor^multiplicity equals u up to a nonzero
/// rational constant; factors are pairwise coprime, ordered by multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& u);

/// A real root of a squarefree factor. Exact roots have lo == hi; otherwise
/// the root is the unique root of `factor` in the open interval (lo, hi) and
/// neither endpoint is a root of `factor`.
struct IsolatedRoot {
    Rat lo;
    Rat hi;
    unsigned multiplicity = 1;
    UniPoly factor;

    bool is_exact() const { return lo == hi; }
    /// The exact value; throws unless is_exact().
    const Rat& value() const;
    /// Midpoint as double after refining to relative width ~1e-14.
    double approximate() const;
    ProjPoint exact_point() const { return from_affine(value()); }
};

/// Complete, disjoint, increasing isolation of the real roots of u with
/// multiplicities. Throws PreconditionError on the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& u);

/// Shrinks the interval to width <= eps (or makes it exact). Throws if eps <= 0.
IsolatedRoot refine(const IsolatedRoot& root, const Rat& eps);

/// Sign of the root minus x: -1, 0, +1. Exact.
int compare(const IsolatedRoot& root, const Rat& x);

/// Projective roots of u with respect to reference degree d.
struct ProjRootSet {
    unsigned reference_degree = 0;
    std::vector<IsolatedRoot> real_roots;
    unsigned infinity_multiplicity = 0;

    std::size_t size() const { return real_roots.size() + (infinity_multiplicity > 0 ? 1 : 0); }
    unsigned total_multiplicity() const;
    /// Sorted multiplicities of all projective roots (infinity included).
    std::vector<unsigned> multiplicities() const;
    /// Sorted multiplicities of the real (affine) roots only.
    std::vector<unsigned> real_multiplicities() const;
};

/// Throws NullifiedError when u is the zero polynomial and PreconditionError
/// when deg(u) > d.
ProjRootSet projective_roots(const UniPoly& u, unsigned d);

}  // namespace projdel
