#include "projdel/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "projdel/error.hpp"

namespace projdel {

namespace {

MultiPoly lift_constant(const MultiPoly& c, const std::vector<std::string>& vars) {
    MultiPoly out(vars);
    if (!c.is_zero()) out.add_term(Exponents(vars.size(), 0), c.constant_value());
    return out;
}

MultiPoly lift_constant_or_self(const MultiPoly& p, const std::vector<std::string>& vars) {
    return p.vars() == vars ? p : lift_constant(p, vars);
}

}  // namespace

const std::vector<std::string>& common_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() == b.vars()) return a.vars();
    if (a.nvars() == 0 && a.is_constant()) return b.vars();
    if (b.nvars() == 0 && b.is_constant()) return a.vars();
    throw InputError("variable lists differ between operands");
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw InputError("variable index out of range");
    MultiPoly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::from_last_coefficients(const std::vector<std::string>& base_vars,
                                            const std::string& last_var,
                                            std::span<const MultiPoly> coeffs) {
    std::vector<std::string> vars(base_vars);
    vars.push_back(last_var);
    MultiPoly p(vars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const MultiPoly& c = coeffs[k];
        if (c.is_zero()) continue;
        if (c.nvars() != base_vars.size()) {
            if (!(c.nvars() == 0 && c.is_constant()))
                throw InputError("coefficient variables do not match the base variables");
        }
        for (const auto& [e, v] : c.terms()) {
            Exponents full(vars.size(), 0);
            std::copy(e.begin(), e.end(), full.begin());
            full.back() = static_cast<std::uint32_t>(k);
            p.add_term(full, v);
        }
    }
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
    if (!is_constant()) throw PreconditionError("polynomial is not constant");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rat& c) {
    if (exps.size() != vars_.size()) throw InputError("exponent vector length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    if (is_zero()) throw PreconditionError("degree of the zero polynomial is undefined");
    if (var >= vars_.size()) throw InputError("variable index out of range");
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
    return d;
}

unsigned MultiPoly::degree_in_last() const {
    if (is_zero()) throw PreconditionError("degree of the zero polynomial is undefined");
    if (vars_.empty()) return 0;
    return degree_in(vars_.size() - 1);
}

unsigned MultiPoly::total_degree() const {
    if (is_zero()) throw PreconditionError("degree of the zero polynomial is undefined");
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

unsigned MultiPoly::min_total_degree() const {
    if (is_zero()) throw PreconditionError("order of the zero polynomial is undefined");
    unsigned d = std::numeric_limits<unsigned>::max();
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto x : e) s += x;
        d = std::min(d, s);
    }
    return d;
}

MultiPoly MultiPoly::coefficient_in_last(unsigned k) const {
    if (vars_.empty()) throw InputError("polynomial has no variables");
    std::vector<std::string> base(vars_.begin(), vars_.end() - 1);
    MultiPoly c(base);
    for (const auto& [e, v] : terms_) {
        if (e.back() != k) continue;
        c.terms_.emplace(Exponents(e.begin(), e.end() - 1), v);
    }
    return c;
}

MultiPoly MultiPoly::leading_coefficient_in_last() const { return coefficient_in_last(degree_in_last()); }

std::vector<MultiPoly> MultiPoly::coefficients_in_last() const {
    const unsigned d = degree_in_last();
    std::vector<MultiPoly> out;
    out.reserve(d + 1);
    for (unsigned k = 0; k <= d; ++k) out.push_back(coefficient_in_last(k));
    return out;
}

Rat MultiPoly::evaluate(std::span<const Rat> point) const {
    if (point.size() != vars_.size()) throw InputError("evaluation point has wrong dimension");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rat pw;
            mpz_pow_ui(mpq_numref(pw.get_mpq_t()), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(mpq_denref(pw.get_mpq_t()), point[i].get_den_mpz_t(), e[i]);
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

double MultiPoly::evaluate(std::span<const double> point) const {
    if (point.size() != vars_.size()) throw InputError("evaluation point has wrong dimension");
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t j = 0; j < e[i]; ++j) t *= point[i];
        acc += t;
    }
    return acc;
}

UniPoly MultiPoly::evaluate_partial(std::span<const Rat> x0) const {
    if (vars_.empty()) throw InputError("polynomial has no variables");
    if (x0.size() + 1 != vars_.size())
        throw InputError("base point has dimension " + std::to_string(x0.size()) + ", expected " +
                         std::to_string(vars_.size() - 1));
    if (is_zero()) return {};
    std::vector<Rat> coeffs(degree_in_last() + 1);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rat pw;
            mpz_pow_ui(mpq_numref(pw.get_mpq_t()), x0[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(mpq_denref(pw.get_mpq_t()), x0[i].get_den_mpz_t(), e[i]);
            t *= pw;
        }
        coeffs[e.back()] += t;
    }
    return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
    if (images.size() != vars_.size()) throw InputError("substitution needs one image per variable");
    std::vector<std::string> target;
    for (const auto& img : images) {
        if (img.nvars() == 0) continue;
        if (target.empty()) target = img.vars();
        else if (img.vars() != target) throw InputError("substitution images use different variables");
    }
    // Cache of powers per variable.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * lift_constant_or_self(images[i], target));
        return cache[k];
    };
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::translate(std::span<const Rat> shift) const {
    if (shift.size() != vars_.size()) throw InputError("shift has wrong dimension");
    std::vector<MultiPoly> images;
    images.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        images.push_back(variable(vars_, i) + constant(vars_, shift[i]));
    return substitute(images);
}

unsigned MultiPoly::order_of_vanishing(std::span<const Rat> point) const {
    if (is_zero()) throw PreconditionError("order of the zero polynomial is undefined");
    if (evaluate(point) != 0) return 0;
    return translate(point).min_total_degree();
}

MultiPoly MultiPoly::derivative_in(std::size_t var) const {
    if (var >= vars_.size()) throw InputError("variable index out of range");
    MultiPoly d(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        d.add_term(f, c * static_cast<unsigned long>(e[var]));
    }
    return d;
}

MultiPoly MultiPoly::scale(const Rat& c) const {
    MultiPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, 1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw PreconditionError("polynomial division by zero");
    const auto& vars = common_vars(*this, d);
    MultiPoly rem = nvars() == vars.size() ? *this : lift_constant(*this, vars);
    MultiPoly div = d.nvars() == vars.size() ? d : lift_constant(d, vars);
    MultiPoly quot(vars);
    const auto& [lead_e, lead_c] = *div.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Exponents qe(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            if (re[i] < lead_e[i]) throw PreconditionError("inexact multivariate division");
            qe[i] = re[i] - lead_e[i];
        }
        Rat qc = rc / lead_c;
        quot.add_term(qe, qc);
        for (const auto& [de, dc] : div.terms_) {
            Exponents te(de.size());
            for (std::size_t i = 0; i < de.size(); ++i) te[i] = de[i] + qe[i];
            rem.add_term(te, -qc * dc);
        }
    }
    return quot;
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return *this;
    Int den_lcm = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Int num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        Int scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (terms_.rbegin()->second < 0) factor = -factor;
    return scale(factor);
}

MultiPoly MultiPoly::renamed(std::vector<std::string> vars) const {
    if (vars.size() != vars_.size()) throw InputError("renaming must keep the variable count");
    MultiPoly out(*this);
    out.vars_ = std::move(vars);
    return out;
}

MultiPoly MultiPoly::operator-() const { return scale(-1); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    const auto& vars = common_vars(*this, o);
    if (vars_ != vars) *this = lift_constant(*this, vars);
    if (o.vars_ != vars) return *this += lift_constant(o, vars);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const auto& vars = common_vars(a, b);
    if (a.vars_ != vars) return lift_constant(a, vars) * b;
    if (b.vars_ != vars) return a * lift_constant(b, vars);
    MultiPoly out(vars);
    Exponents e(vars.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    // A variable-free constant equals the same constant over any variable list.
    if ((a.nvars() == 0 || b.nvars() == 0) && a.is_constant() && b.is_constant())
        return a.constant_value() == b.constant_value();
    return false;
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool unit = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
        Rat mag = abs(c);
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool need_star = false;
        if (mag != 1 || unit) {
            out << format_rat(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return out.str();
}

}  // namespace projdel
