#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "projdel/multipoly.hpp"
#include "projdel/roots.hpp"

namespace projdel {

enum class ProjectionMode { classical, projective };

struct Generator {
    MultiPoly poly;                        // integer-primitive, positive leading term
    std::vector<std::string> provenance;   // e.g. "lc(P1)", "disc(P2)", "res(P1,P2)"
};

/// Projection polynomials in the first n-1 variables. Constants are dropped
/// and generators equal up to a rational factor are merged.
struct ProjectionSet {
    ProjectionMode mode = ProjectionMode::classical;
    std::vector<Generator> generators;

    bool contains(const MultiPoly& poly) const;
    /// Adds a generator, merging with an existing one up to scaling.
    void add(const MultiPoly& poly, const std::string& provenance);
};

/// { lc(P), Disc(P) : P in F } u { Res(P, Q) : pairs }.
ProjectionSet project_classical(std::span<const MultiPoly> polys);
/// Discriminants and resultants only.
ProjectionSet project_projective(std::span<const MultiPoly> polys);
/// Adds lc(P) for every P in F.
ProjectionSet with_leading_coefficients(ProjectionSet set, std::span<const MultiPoly> polys);

/// Same polynomials, ignoring order and provenance.
bool same_generators(const ProjectionSet& a, const ProjectionSet& b);

std::string to_string(ProjectionMode m);

/// Endpoint of a one-dimensional cell: unbounded, or a real algebraic number.
struct CellBound {
    std::optional<IsolatedRoot> root;  // empty means -inf / +inf
    std::string to_string(bool lower) const;
};

struct CellInterval {
    CellBound lower;
    CellBound upper;
};

/// Maximal open interval around s free of real roots of the projection of F
/// (F in two variables). Throws PreconditionError when s is such a root.
CellInterval cell_bounds_1d(std::span<const MultiPoly> polys, const Rat& s, ProjectionMode mode);

}  // namespace projdel
