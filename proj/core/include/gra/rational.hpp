#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Accepts "p" or "p/q" with an optional leading '-'; q must be positive.
Rational parse_rational(std::string_view text);
/// Canonical "p" or "p/q" form, "-" for negatives.
std::string format_rational(const Rational& r);

}  // namespace gra
