#include "projdel/projection.hpp"

#include <algorithm>
#include <sstream>

#include "projdel/elimination.hpp"
#include "projdel/error.hpp"

namespace projdel {

namespace {

void check_inputs(std::span<const MultiPoly> polys) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& p = polys[i];
        if (p.is_zero()) throw PreconditionError("projection input P" + std::to_string(i + 1) + " is zero");
        if (p.nvars() == 0 || p.degree_in_last() == 0)
            throw PreconditionError("projection input P" + std::to_string(i + 1) + " does not involve " +
                                    (p.nvars() ? p.vars().back() : std::string("the projection variable")));
        if (p.vars() != polys[0].vars()) throw InputError("projection inputs use different variables");
    }
}

std::string name(std::size_t i) { return "P" + std::to_string(i + 1); }

ProjectionSet project(std::span<const MultiPoly> polys, ProjectionMode mode) {
    check_inputs(polys);
    ProjectionSet set;
    set.mode = mode;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& p = polys[i];
        const unsigned d = p.degree_in_last();
        if (mode == ProjectionMode::classical) set.add(p.leading_coefficient_in_last(), "lc(" + name(i) + ")");
        // Disc^1 is a nonzero constant and would be dropped anyway.
        if (d >= 2) set.add(discriminant_fixed(p, d), "disc(" + name(i) + ")");
    }
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j)
            set.add(resultant_fixed(polys[i], polys[j], polys[i].degree_in_last(), polys[j].degree_in_last()),
                    "res(" + name(i) + "," + name(j) + ")");
    return set;
}

}  // namespace

bool ProjectionSet::contains(const MultiPoly& poly) const {
    const MultiPoly key = poly.primitive();
    return std::any_of(generators.begin(), generators.end(), [&](const Generator& g) { return g.poly == key; });
}

void ProjectionSet::add(const MultiPoly& poly, const std::string& provenance) {
    if (poly.is_constant()) return;
    const MultiPoly key = poly.primitive();
    for (auto& g : generators)
        if (g.poly == key) {
            g.provenance.push_back(provenance);
            return;
        }
    generators.push_back({key, {provenance}});
}

ProjectionSet project_classical(std::span<const MultiPoly> polys) { return project(polys, ProjectionMode::classical); }

ProjectionSet project_projective(std::span<const MultiPoly> polys) {
    return project(polys, ProjectionMode::projective);
}

ProjectionSet with_leading_coefficients(ProjectionSet set, std::span<const MultiPoly> polys) {
    check_inputs(polys);
    for (std::size_t i = 0; i < polys.size(); ++i) set.add(polys[i].leading_coefficient_in_last(), "lc(" + name(i) + ")");
    set.mode = ProjectionMode::classical;
    return set;
}

bool same_generators(const ProjectionSet& a, const ProjectionSet& b) {
    if (a.generators.size() != b.generators.size()) return false;
    return std::all_of(a.generators.begin(), a.generators.end(),
                       [&](const Generator& g) { return b.contains(g.poly); });
}

std::string to_string(ProjectionMode m) { return m == ProjectionMode::classical ? "classical" : "projective"; }

std::string CellBound::to_string(bool lower) const {
    if (!root) return lower ? "-inf" : "inf";
    if (root->is_exact()) return format_rat(root->value());
    std::ostringstream out;
    out << "root(" << root->factor.to_string() << ", " << format_rat(root->lo) << ", " << format_rat(root->hi) << ")";
    return out.str();
}

CellInterval cell_bounds_1d(std::span<const MultiPoly> polys, const Rat& s, ProjectionMode mode) {
    if (polys.empty()) throw InputError("empty polynomial set");
    if (polys[0].nvars() != 2) throw InputError("cell bounds need polynomials in exactly two variables");
    const ProjectionSet proj = project(polys, mode);
    UniPoly product = UniPoly::constant(1);
    for (const auto& g : proj.generators) product = product * g.poly.evaluate_partial(std::span<const Rat>{});
    CellInterval cell;
    for (const auto& root : isolate_real_roots(product)) {
        const int c = compare(root, s);
        if (c == 0) throw PreconditionError("sample " + format_rat(s) + " is a root of a projection polynomial");
        if (c < 0) cell.lower.root = root;
        else if (!cell.upper.root) cell.upper.root = root;
    }
    // Tighten algebraic endpoints so the reported interval excludes s.
    for (auto* b : {&cell.lower, &cell.upper}) {
        if (!b->root || b->root->is_exact()) continue;
        IsolatedRoot& r = *b->root;
        while (r.lo < s && s < r.hi) r = refine(r, (r.hi - r.lo) / 2);
    }
    return cell;
}

}  // namespace projdel
