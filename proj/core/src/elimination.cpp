#include "projdel/elimination.hpp"

#include <algorithm>

#include "projdel/error.hpp"

namespace projdel {

namespace {

std::vector<std::string> base_of(const MultiPoly& p) {
    if (p.nvars() == 0) throw InputError("polynomial has no projection variable");
    return {p.vars().begin(), p.vars().end() - 1};
}

void check_bounds(const MultiPoly& poly, unsigned bound, const char* which) {
    if (poly.is_zero()) throw PreconditionError(std::string("operand ") + which + " is the zero polynomial");
    if (poly.degree_in_last() > bound)
        throw PreconditionError(std::string("operand ") + which + " has degree " +
                                std::to_string(poly.degree_in_last()) + " above its reference degree " +
                                std::to_string(bound));
}

template <class T>
std::vector<std::vector<T>> sylvester_rows(const std::vector<T>& pc, const std::vector<T>& qc, unsigned p,
                                           unsigned q, const T& zero) {
    const unsigned n = p + q;
    std::vector<std::vector<T>> m(n, std::vector<T>(n, zero));
    for (unsigned i = 0; i < q; ++i)
        for (unsigned k = 0; k <= p; ++k) m[i][i + k] = pc[p - k];
    for (unsigned i = 0; i < p; ++i)
        for (unsigned k = 0; k <= q; ++k) m[q + i][i + k] = qc[q - k];
    return m;
}

}  // namespace

PolyMatrix sylvester_matrix(const MultiPoly& p_poly, const MultiPoly& q_poly, unsigned p, unsigned q) {
    if (p + q == 0) throw PreconditionError("resultant needs p + q >= 1");
    check_bounds(p_poly, p, "P");
    check_bounds(q_poly, q, "Q");
    const auto base = base_of(p_poly);
    if (base_of(q_poly) != base) throw InputError("operands use different variables");
    std::vector<MultiPoly> pc, qc;
    for (unsigned k = 0; k <= p; ++k) pc.push_back(p_poly.coefficient_in_last(k));
    for (unsigned k = 0; k <= q; ++k) qc.push_back(q_poly.coefficient_in_last(k));
    return sylvester_rows(pc, qc, p, q, MultiPoly(base));
}

MultiPoly determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) throw PreconditionError("determinant of an empty matrix");
    const auto vars = m[0][0].vars();
    bool negate = false;
    MultiPoly prev = MultiPoly::constant(vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Sparsest nonzero pivot in column k.
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            if (pivot == n || m[i][k].term_count() < m[pivot][k].term_count()) pivot = i;
        }
        if (pivot == n) return MultiPoly(vars);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = prev.is_constant() ? num.scale(1 / prev.constant_value()) : num.divide_exact(prev);
            }
            m[i][k] = MultiPoly(vars);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw PreconditionError("determinant of an empty matrix");
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

MultiPoly resultant_fixed(const MultiPoly& p_poly, const MultiPoly& q_poly, unsigned p, unsigned q) {
    return determinant(sylvester_matrix(p_poly, q_poly, p, q));
}

Rat resultant_fixed(const UniPoly& p_poly, const UniPoly& q_poly, unsigned p, unsigned q) {
    if (p + q == 0) throw PreconditionError("resultant needs p + q >= 1");
    if (p_poly.is_zero() || q_poly.is_zero()) throw PreconditionError("resultant of the zero polynomial");
    if (p_poly.degree() > static_cast<int>(p) || q_poly.degree() > static_cast<int>(q))
        throw PreconditionError("operand degree exceeds its reference degree");
    std::vector<Rat> pc(p + 1), qc(q + 1);
    for (unsigned k = 0; k <= p; ++k) pc[k] = p_poly.coeff(static_cast<int>(k));
    for (unsigned k = 0; k <= q; ++k) qc[k] = q_poly.coeff(static_cast<int>(k));
    return determinant(sylvester_rows(pc, qc, p, q, Rat(0)));
}

MultiPoly discriminant_fixed(const MultiPoly& p_poly, unsigned p) {
    if (p < 2) throw PreconditionError("discriminant needs reference degree >= 2");
    check_bounds(p_poly, p, "P");
    const MultiPoly deriv = p_poly.derivative_in(p_poly.nvars() - 1);
    const auto base = base_of(p_poly);
    std::vector<MultiPoly> pc, dc;
    for (unsigned k = 0; k <= p; ++k) pc.push_back(p_poly.coefficient_in_last(k));
    for (unsigned k = 0; k + 1 <= p; ++k) dc.push_back(deriv.coefficient_in_last(k));
    auto m = sylvester_rows(pc, dc, p, p - 1, MultiPoly(base));
    // Column 0 is c_p * (e_0 + p e_{p-1}); factor c_p out.
    m[0][0] = MultiPoly::constant(base, 1);
    m[p - 1][0] = MultiPoly::constant(base, p);
    MultiPoly det = determinant(std::move(m));
    return (p * (p - 1) / 2) % 2 ? -det : det;
}

Rat discriminant_fixed(const UniPoly& p_poly, unsigned p) {
    if (p < 2) throw PreconditionError("discriminant needs reference degree >= 2");
    if (p_poly.is_zero()) throw PreconditionError("discriminant of the zero polynomial");
    if (p_poly.degree() > static_cast<int>(p)) throw PreconditionError("degree exceeds the reference degree");
    std::vector<Rat> pc(p + 1), dc(p);
    const UniPoly deriv = p_poly.derivative();
    for (unsigned k = 0; k <= p; ++k) pc[k] = p_poly.coeff(static_cast<int>(k));
    for (unsigned k = 0; k < p; ++k) dc[k] = deriv.coeff(static_cast<int>(k));
    auto m = sylvester_rows(pc, dc, p, p - 1, Rat(0));
    m[0][0] = 1;
    m[p - 1][0] = p;
    Rat det = determinant(std::move(m));
    return (p * (p - 1) / 2) % 2 ? Rat(-det) : det;
}

EliminationCrossCheck evaluate_then_eliminate(const MultiPoly& p_poly, const MultiPoly& q_poly, unsigned p,
                                              unsigned q, std::span<const Rat> x0) {
    const UniPoly ep = p_poly.evaluate_partial(x0);
    const UniPoly eq = q_poly.evaluate_partial(x0);
    if (ep.is_zero() || eq.is_zero()) throw NullifiedError("operand evaluates to the zero polynomial");
    EliminationCrossCheck out;
    out.evaluated_then_eliminated = resultant_fixed(ep, eq, p, q);
    out.eliminated_then_evaluated = resultant_fixed(p_poly, q_poly, p, q).evaluate(x0);
    return out;
}

}  // namespace projdel
