#include "projdel/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "projdel/error.hpp"

namespace projdel {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rat& r) { return UniPoly({Rat(-r), Rat(1)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UniPoly::degree() const {
    if (is_zero()) throw PreconditionError("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rat(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rat UniPoly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Rat UniPoly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    Rat lc = leading();
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c /= lc;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    Int den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Int num_gcd = 0;
    for (const auto& c : coeffs_) {
        Int scaled = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (leading() < 0) factor = -factor;
    return factor * *this;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c = -c;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rat& c, const UniPoly& a) {
    std::vector<Rat> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = constant(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw PreconditionError("polynomial division by zero");
    if (is_zero() || degree() < d.degree()) return {UniPoly{}, *this};
    std::vector<Rat> rem(coeffs_);
    const int dd = d.degree();
    std::vector<Rat> quot(static_cast<std::size_t>(degree() - dd) + 1);
    const Rat lc = d.leading();
    for (int k = degree(); k >= dd; --k) {
        Rat q = rem[static_cast<std::size_t>(k)] / lc;
        if (q == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * d.coeffs_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
    return q;
}

UniPoly UniPoly::affine_substitute(const Rat& a, const Rat& b) const {
    // Horner in the polynomial ring: acc = acc * (a + b x) + c_k.
    const UniPoly lin({a, b});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

UniPoly UniPoly::reversed() const {
    std::vector<Rat> v(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(v));
}

int UniPoly::sign_variations() const {
    int count = 0, last = 0;
    for (const auto& c : coeffs_) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rat mag = abs(c);
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || k == 0) out << format_rat(mag) << (k ? "*" : "");
        if (k >= 1) out << var;
        if (k >= 2) out << "^" << k;
        first = false;
    }
    return out.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

}  // namespace projdel
