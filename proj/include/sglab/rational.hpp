#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sglab {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) as long as they are built through the helpers below.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string emit_rational(const Rational& r);

bool is_integer(const Rational& r);

// Exact square root when one exists in the rationals.
bool rational_sqrt(const Rational& r, Rational& out);

}  // namespace sglab
