#include "projdel/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "projdel/error.hpp"

namespace projdel::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

Int int_from_json(const json& j) {
    Int v;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        if (s.empty() || v.set_str(s, 10) != 0) throw InputError("malformed integer string '" + j.get<std::string>() + "'");
    } else if (j.is_number_integer()) {
        v = Int(std::to_string(j.get<long long>()));
    } else {
        throw InputError("integers must be decimal strings");
    }
    return v;
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw InputError(std::string(what) + " must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

std::string rat_string(const Rat& q) { return format_rat(q); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    throw InputError("rationals must be strings of the form \"num/den\"");
}

json to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exps", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return {{"vars", p.vars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const json& j) {
    std::vector<std::string> vars = string_list(field(j, "vars"), "vars");
    std::set<std::string> unique(vars.begin(), vars.end());
    if (unique.size() != vars.size()) throw InputError("duplicate variable names");
    MultiPoly p(vars);
    const json& terms = field(j, "terms");
    if (!terms.is_array()) throw InputError("terms must be an array");
    for (const auto& t : terms) {
        const json& ej = field(t, "exps");
        if (!ej.is_array() || ej.size() != vars.size())
            throw InputError("exponent vector length must equal the number of variables");
        Exponents e;
        for (const auto& x : ej) {
            if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
                throw InputError("exponents must be natural numbers");
            e.push_back(x.get<std::uint32_t>());
        }
        const Int num = int_from_json(field(t, "num"));
        const Int den = t.contains("den") ? int_from_json(t.at("den")) : Int(1);
        if (den == 0) throw InputError("zero denominator");
        Rat c(num, den);
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

json to_json(const BinaryForm& g) {
    json coeffs = json::array();
    for (const auto& c : g.coeffs()) coeffs.push_back(to_json(c));
    return {{"degree", g.degree()}, {"coeffs", coeffs}, {"var", g.var()}};
}

BinaryForm binary_form_from_json(const json& j) {
    const json& dj = field(j, "degree");
    if (!dj.is_number_unsigned() && !(dj.is_number_integer() && dj.get<long long>() >= 0))
        throw InputError("degree must be a natural number");
    const auto d = dj.get<unsigned>();
    const json& cj = field(j, "coeffs");
    if (!cj.is_array()) throw InputError("coeffs must be an array");
    std::vector<MultiPoly> coeffs;
    for (const auto& c : cj) coeffs.push_back(multipoly_from_json(c));
    if (coeffs.size() != d + 1) throw InputError("binary form of degree d needs d+1 coefficients");
    std::vector<std::string> base;
    for (const auto& c : coeffs)
        if (c.nvars() > 0) {
            base = c.vars();
            break;
        }
    const std::string var = j.contains("var") ? j.at("var").get<std::string>() : std::string("x");
    return {d, std::move(coeffs), std::move(base), var};
}

json to_json(const Matrix2& a) {
    json rows = json::array();
    rows.push_back(json::array({rat_string(a.a11()), rat_string(a.a12())}));
    rows.push_back(json::array({rat_string(a.a21()), rat_string(a.a22())}));
    return {{"a", rows}};
}

Matrix2 matrix_from_json(const json& j) {
    const json& a = field(j, "a");
    if (!a.is_array() || a.size() != 2 || !a[0].is_array() || !a[1].is_array() || a[0].size() != 2 ||
        a[1].size() != 2)
        throw InputError("matrix must be {\"a\": [[a11, a12], [a21, a22]]}");
    return {rat_from_json(a[0][0]), rat_from_json(a[0][1]), rat_from_json(a[1][0]), rat_from_json(a[1][1])};
}

json to_json(const ProjPoint& p) { return {{"x", rat_string(p.x())}, {"y", rat_string(p.y())}}; }

ProjPoint proj_point_from_json(const json& j) {
    return {rat_from_json(field(j, "x")), rat_from_json(field(j, "y"))};
}

UniPoly unipoly_from_json(const json& j) {
    if (j.is_object() && j.contains("coeffs")) {
        std::vector<Rat> c;
        for (const auto& x : j.at("coeffs")) c.push_back(rat_from_json(x));
        return UniPoly(std::move(c));
    }
    const MultiPoly p = multipoly_from_json(j);
    if (p.nvars() != 1) throw InputError("expected a univariate polynomial");
    return p.evaluate_partial(std::span<const Rat>{});
}

json to_json(const IsolatedRoot& r) {
    json out;
    if (r.is_exact()) out["point"] = rat_string(r.value());
    else out["interval"] = {rat_string(r.lo), rat_string(r.hi)};
    out["approx"] = r.approximate();
    out["multiplicity"] = r.multiplicity;
    return out;
}

json to_json(const ProjRootSet& roots) {
    json out = json::array();
    for (const auto& r : roots.real_roots) out.push_back(to_json(r));
    if (roots.infinity_multiplicity > 0)
        out.push_back({{"infinity", true}, {"multiplicity", roots.infinity_multiplicity}});
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool peek_power() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '^') return true;
        return pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*';
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    MultiPoly term() {
        MultiPoly acc = unary();
        while (true) {
            if (!peek_power() && eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = acc.scale(1 / d.constant_value());
            } else {
                return acc;
            }
        }
    }
    MultiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    MultiPoly power() {
        MultiPoly base = primary();
        if (peek_power()) {
            pos_ += text_[pos_] == '^' ? 1 : 2;
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a natural exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }
    MultiPoly primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string id(text_.substr(start, pos_ - start));
            auto it = std::find(vars_.begin(), vars_.end(), id);
            if (it == vars_.end()) fail("unknown variable '" + id + "'");
            return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
        }
        fail(std::string("unexpected '") + c + "'");
    }
    MultiPoly number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        Int den = 1;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_++];
                den *= 10;
            }
        }
        if (digits.empty()) fail("malformed number");
        Rat q(Int(digits, 10), den);
        q.canonicalize();
        return MultiPoly::constant(vars_, q);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            const auto na = std::stoull(a.substr(i, ie - i)), nb = std::stoull(b.substr(j, je - j));
            if (na != nb) return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

std::vector<std::string> infer_variables(std::string_view text) {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            ids.emplace(text.substr(start, i - start));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
        } else {
            ++i;
        }
    }
    std::vector<std::string> out(ids.begin(), ids.end());
    std::sort(out.begin(), out.end(), natural_less);
    return out;
}

}  // namespace projdel::io
