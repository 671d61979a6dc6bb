#include "projdel/rational.hpp"

#include <cmath>
#include <string>

#include "projdel/error.hpp"

namespace projdel {

Rat parse_rat(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    Int num, den{1};
    auto parse_int = [&](const std::string& part, Int& out) {
        std::string digits = part;
        if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
        if (digits.empty() || out.set_str(digits, 10) != 0)
            throw InputError("malformed rational literal '" + s + "'");
    };
    if (slash == std::string::npos) {
        parse_int(s, num);
    } else {
        parse_int(s.substr(0, slash), num);
        parse_int(s.substr(slash + 1), den);
    }
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rat(const Rat& q) { return q.get_str(10); }

double to_double(const Rat& q) { return q.get_d(); }

Rat rationalize(double v, long max_den) {
    if (!std::isfinite(v)) throw PreconditionError("cannot rationalize a non-finite value");
    // Continued-fraction convergents, stopping before the denominator bound.
    long double x = v;
    Int h_prev{1}, h{static_cast<long>(std::floor(x))};
    Int k_prev{0}, k{1};
    long double frac = x - std::floor(x);
    for (int iter = 0; iter < 64 && frac > 1e-18L; ++iter) {
        x = 1.0L / frac;
        long double a_ld = std::floor(x);
        if (a_ld > 1e15L) break;
        Int a{static_cast<long>(a_ld)};
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
        frac = x - a_ld;
    }
    Rat q(h, k);
    q.canonicalize();
    return q;
}

}  // namespace projdel
