#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace oncgl2 {

/// Exact field of fractions; all coefficients in the engine live here.
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace oncgl2
