#include "projdel/binary_forms.hpp"

#include <sstream>

#include "projdel/error.hpp"

namespace projdel {

namespace {

std::vector<std::string> base_of(const MultiPoly& p) {
    if (p.nvars() == 0) throw InputError("polynomial has no projection variable");
    return {p.vars().begin(), p.vars().end() - 1};
}

void check_degree(const MultiPoly& p, unsigned d) {
    if (!p.is_zero() && p.degree_in_last() > d)
        throw PreconditionError("degree in " + p.vars().back() + " is " + std::to_string(p.degree_in_last()) +
                                ", exceeding the reference degree " + std::to_string(d));
}

Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat rat_pow(const Rat& base, unsigned e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), e);
    return r;
}

}  // namespace

Matrix2::Matrix2(Rat a11, Rat a12, Rat a21, Rat a22)
    : a11_(std::move(a11)), a12_(std::move(a12)), a21_(std::move(a21)), a22_(std::move(a22)) {
    det_ = a11_ * a22_ - a12_ * a21_;
    if (det_ == 0) throw PreconditionError("matrix is singular");
}

Matrix2 Matrix2::inverse() const {
    return {a22_ / det_, -a12_ / det_, -a21_ / det_, a11_ / det_};
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.a11_ * b.a11_ + a.a12_ * b.a21_, a.a11_ * b.a12_ + a.a12_ * b.a22_,
            a.a21_ * b.a11_ + a.a22_ * b.a21_, a.a21_ * b.a12_ + a.a22_ * b.a22_};
}

std::string Matrix2::to_string() const {
    return "[[" + format_rat(a11_) + ", " + format_rat(a12_) + "], [" + format_rat(a21_) + ", " +
           format_rat(a22_) + "]]";
}

BinaryForm::BinaryForm(unsigned degree, std::vector<MultiPoly> coeffs, std::vector<std::string> base_vars,
                       std::string var)
    : degree_(degree), coeffs_(std::move(coeffs)), base_vars_(std::move(base_vars)), var_(std::move(var)) {
    if (coeffs_.size() != degree_ + 1) throw InputError("binary form needs degree+1 coefficients");
    for (auto& c : coeffs_) {
        if (c.vars() == base_vars_) continue;
        if (c.is_constant() && c.nvars() == 0) {
            c = MultiPoly::constant(base_vars_, c.constant_value());
            continue;
        }
        throw InputError("binary form coefficient has foreign variables");
    }
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Rat BinaryForm::evaluate(std::span<const Rat> x0, const Rat& x, const Rat& y) const {
    Rat acc = 0;
    for (unsigned k = 0; k <= degree_; ++k) acc += coeffs_[k].evaluate(x0) * rat_pow(x, k) * rat_pow(y, degree_ - k);
    return acc;
}

MultiPoly BinaryForm::at_direction(const Rat& u, const Rat& v) const {
    MultiPoly acc(base_vars_);
    for (unsigned k = 0; k <= degree_; ++k) acc += coeffs_[k].scale(rat_pow(u, k) * rat_pow(v, degree_ - k));
    return acc;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.base_vars_ == b.base_vars_ && a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

std::string BinaryForm::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int k = static_cast<int>(degree_); k >= 0; --k) {
        const auto& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << c.to_string() << ")";
        if (k > 0) out << "*" << var_ << (k > 1 ? "^" + std::to_string(k) : "");
        const int yk = static_cast<int>(degree_) - k;
        if (yk > 0) out << "*y" << (yk > 1 ? "^" + std::to_string(yk) : "");
        first = false;
    }
    return first ? "0" : out.str();
}

BinaryForm homogenize(const MultiPoly& p, unsigned d) {
    check_degree(p, d);
    std::vector<MultiPoly> coeffs;
    coeffs.reserve(d + 1);
    for (unsigned k = 0; k <= d; ++k) coeffs.push_back(p.coefficient_in_last(k));
    return {d, std::move(coeffs), base_of(p), p.vars().back()};
}

MultiPoly pullback(const BinaryForm& g) {
    return MultiPoly::from_last_coefficients(g.base_vars(), g.var(), g.coeffs());
}

BinaryForm compose_right(const BinaryForm& g, const Matrix2& a) {
    const unsigned d = g.degree();
    // Column k holds the dehomogenized (a11 x + a12)^k (a21 x + a22)^(d-k).
    const UniPoly first({a.a12(), a.a11()});
    const UniPoly second({a.a22(), a.a21()});
    std::vector<MultiPoly> out(d + 1, MultiPoly(g.base_vars()));
    for (unsigned k = 0; k <= d; ++k) {
        if (g.coeff(k).is_zero()) continue;
        const UniPoly w = first.pow(k) * second.pow(d - k);
        for (unsigned j = 0; j <= d; ++j) {
            const Rat wj = w.coeff(static_cast<int>(j));
            if (wj != 0) out[j] += g.coeff(k).scale(wj);
        }
    }
    return {d, std::move(out), g.base_vars(), g.var()};
}

MultiPoly moebius_transform(const MultiPoly& p, const Matrix2& a, unsigned d) {
    check_degree(p, d);
    const std::size_t n = p.nvars();
    if (n == 0) throw InputError("polynomial has no projection variable");
    MultiPoly out(p.vars());
    // Per degree k: weights of x_n^m in (a11 x_n + a12)^k (a21 x_n + a22)^(d-k).
    std::vector<std::vector<Rat>> weights(d + 1, std::vector<Rat>(d + 1));
    for (unsigned k = 0; k <= d; ++k)
        for (unsigned i = 0; i <= k; ++i) {
            const Rat left = Rat(binomial(k, i)) * rat_pow(a.a11(), i) * rat_pow(a.a12(), k - i);
            if (left == 0) continue;
            for (unsigned j = 0; j <= d - k; ++j)
                weights[k][i + j] +=
                    left * Rat(binomial(d - k, j)) * rat_pow(a.a21(), j) * rat_pow(a.a22(), d - k - j);
        }
    for (const auto& [e, c] : p.terms()) {
        const unsigned k = e.back();
        Exponents f = e;
        for (unsigned m = 0; m <= d; ++m) {
            if (weights[k][m] == 0) continue;
            f.back() = m;
            out.add_term(f, c * weights[k][m]);
        }
    }
    return out;
}

MultiPoly pullback_wrt(const BinaryForm& g, const Matrix2& a) { return pullback(compose_right(g, a)); }

BinaryForm homogenize_wrt(const MultiPoly& p, const Matrix2& a, unsigned d) {
    return compose_right(homogenize(p, d), a.inverse());
}

}  // namespace projdel
