#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace projdel {

/// Exact rational; GMP keeps it in lowest terms with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

/// Accepts "n", "-n", "n/d" (any sign placement GMP understands) and
/// canonicalizes. Throws InputError on garbage or a zero denominator.
Rat parse_rat(std::string_view text);

/// "n" for integers, otherwise "n/d".
std::string format_rat(const Rat& q);

double to_double(const Rat& q);

/// Best rational with denominator <= max_den approximating v (continued fractions).
Rat rationalize(double v, long max_den);

inline int sign(const Rat& q) { return sgn(q); }

}  // namespace projdel
