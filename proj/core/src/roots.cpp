#include "projdel/roots.hpp"

#include <algorithm>
#include <cmath>

#include "projdel/error.hpp"

namespace projdel {

namespace {

// Rational root candidates are only enumerated when both end coefficients are
// below this bound; larger cases fall back to plain bisection.
constexpr unsigned long kRationalRootCoeffBound = 1'000'000'000UL;

std::vector<Int> positive_divisors(Int n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Descartes bound on the number of roots of f in the open interval (a, b).
int descartes_count(const UniPoly& f, const Rat& a, const Rat& b) {
    const UniPoly shifted = f.affine_substitute(a, b - a).reversed().affine_substitute(1, 1);
    return shifted.sign_variations();
}

Rat root_bound(const UniPoly& f) {
    // Cauchy bound, rounded up to a power of two.
    Rat m = 0;
    const Rat lc = abs(f.leading());
    for (int k = 0; k < f.degree(); ++k) m = std::max(m, Rat(abs(f.coeff(k)) / lc));
    Rat bound = 1;
    while (bound <= m + 1) bound *= 2;
    return bound;
}

void bisect(UniPoly f, const Rat& a, const Rat& b, unsigned mult, std::vector<IsolatedRoot>& out) {
    const int v = descartes_count(f, a, b);
    if (v == 0) return;
    if (v == 1) {
        out.push_back({a, b, mult, std::move(f)});
        return;
    }
    const Rat m = (a + b) / 2;
    if (f(m) == 0) {
        out.push_back({m, m, mult, UniPoly::linear_root(m)});
        f = f.divide_exact(UniPoly::linear_root(m));
    }
    bisect(f, a, m, mult, out);
    bisect(f, m, b, mult, out);
}

void isolate_squarefree(UniPoly f, unsigned mult, std::vector<IsolatedRoot>& out) {
    if (f.degree() == 0) return;
    if (f.coeff(0) == 0) {
        out.push_back({0, 0, mult, UniPoly::linear_root(0)});
        f = f.divide_exact(UniPoly::linear_root(0));
    }
    // Exact rational roots p/q with p | a_0, q | a_n.
    const UniPoly prim = f.primitive();
    const Int a0 = abs(prim.coeff(0).get_num());
    const Int an = abs(prim.leading().get_num());
    if (f.degree() > 1 && a0 <= kRationalRootCoeffBound && an <= kRationalRootCoeffBound) {
        const auto ps = positive_divisors(a0);
        const auto qs = positive_divisors(an);
        for (const auto& p : ps)
            for (const auto& q : qs)
                for (int s : {-1, 1}) {
                    if (f.degree() == 0) break;
                    Rat r(s * p, q);
                    r.canonicalize();
                    if (f(r) != 0) continue;
                    out.push_back({r, r, mult, UniPoly::linear_root(r)});
                    f = f.divide_exact(UniPoly::linear_root(r));
                }
    }
    if (f.degree() == 0) return;
    if (f.degree() == 1) {
        const Rat r = -f.coeff(0) / f.coeff(1);
        out.push_back({r, r, mult, UniPoly::linear_root(r)});
        return;
    }
    const Rat bound = root_bound(f);
    bisect(f, -bound, bound, mult, out);
}

IsolatedRoot bisect_once(const IsolatedRoot& root) {
    if (root.is_exact()) return root;
    IsolatedRoot r = root;
    const Rat m = (r.lo + r.hi) / 2;
    const int sm = sgn(r.factor(m));
    if (sm == 0) {
        r.lo = r.hi = m;
        r.factor = UniPoly::linear_root(m);
        return r;
    }
    if (sgn(r.factor(r.lo)) * sm < 0) r.hi = m;
    else r.lo = m;
    return r;
}

// Strict ordering of distinct roots once separated. Two open intervals may share
// an endpoint (it is a root of neither factor); an exact root may not touch one.
bool before(const IsolatedRoot& a, const IsolatedRoot& b) {
    if (a.is_exact() != b.is_exact()) return a.hi < b.lo;
    if (a.is_exact()) return a.lo < b.lo;
    return a.hi <= b.lo;
}

bool overlapping(const IsolatedRoot& a, const IsolatedRoot& b) { return !before(a, b) && !before(b, a); }

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& u) {
    if (u.is_zero()) throw PreconditionError("square-free decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (u.degree() == 0) return out;
    const UniPoly f = u.monic();
    const UniPoly df = f.derivative();
    const UniPoly b = gcd(f, df);
    UniPoly c = f.divide_exact(b);
    UniPoly d = df.divide_exact(b) - c.derivative();
    for (unsigned i = 1; c.degree() > 0; ++i) {
        const UniPoly a = gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = c.divide_exact(a);
        d = d.divide_exact(a) - c.derivative();
    }
    return out;
}

const Rat& IsolatedRoot::value() const {
    if (!is_exact()) throw PreconditionError("root is only known up to an isolating interval");
    return lo;
}

double IsolatedRoot::approximate() const {
    if (is_exact()) return lo.get_d();
    const Rat scale = std::max(Rat(1), std::max(Rat(abs(lo)), Rat(abs(hi))));
    const IsolatedRoot r = refine(*this, scale / Rat(1L << 48));
    return Rat((r.lo + r.hi) / 2).get_d();
}

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& u) {
    if (u.is_zero()) throw PreconditionError("root isolation of the zero polynomial");
    std::vector<IsolatedRoot> roots;
    for (const auto& [factor, mult] : squarefree_decomposition(u)) isolate_squarefree(factor, mult, roots);
    // Roots of distinct factors are distinct: refine until pairwise disjoint.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                while (overlapping(roots[i], roots[j])) {
                    roots[i] = bisect_once(roots[i]);
                    roots[j] = bisect_once(roots[j]);
                    changed = true;
                }
    }
    for (auto& r : roots)
        while (!r.is_exact() && r.hi - r.lo > 1) r = bisect_once(r);
    std::sort(roots.begin(), roots.end(), before);
    return roots;
}

IsolatedRoot refine(const IsolatedRoot& root, const Rat& eps) {
    if (eps <= 0) throw PreconditionError("refinement tolerance must be positive");
    IsolatedRoot r = root;
    while (!r.is_exact() && r.hi - r.lo > eps) r = bisect_once(r);
    return r;
}

int compare(const IsolatedRoot& root, const Rat& x) {
    IsolatedRoot r = root;
    while (true) {
        if (r.is_exact()) return sgn(r.lo - x);
        if (x <= r.lo) return 1;
        if (x >= r.hi) return -1;
        if (r.factor(x) == 0) return 0;
        r = bisect_once(r);
    }
}

unsigned ProjRootSet::total_multiplicity() const {
    unsigned s = infinity_multiplicity;
    for (const auto& r : real_roots) s += r.multiplicity;
    return s;
}

std::vector<unsigned> ProjRootSet::multiplicities() const {
    std::vector<unsigned> m = real_multiplicities();
    if (infinity_multiplicity > 0) m.push_back(infinity_multiplicity);
    std::sort(m.begin(), m.end());
    return m;
}

std::vector<unsigned> ProjRootSet::real_multiplicities() const {
    std::vector<unsigned> m;
    for (const auto& r : real_roots) m.push_back(r.multiplicity);
    std::sort(m.begin(), m.end());
    return m;
}

ProjRootSet projective_roots(const UniPoly& u, unsigned d) {
    if (u.is_zero()) throw NullifiedError("polynomial is identically zero: projective roots undefined");
    if (u.degree() > static_cast<int>(d))
        throw PreconditionError("degree " + std::to_string(u.degree()) + " exceeds the reference degree " +
                                std::to_string(d));
    ProjRootSet out;
    out.reference_degree = d;
    out.real_roots = isolate_real_roots(u);
    out.infinity_multiplicity = d - static_cast<unsigned>(u.degree());
    return out;
}

}  // namespace projdel
