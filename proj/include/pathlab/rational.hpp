#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pathlab {

/// Exact arbitrary-precision rational. Every semantic computation in the
/// library goes through this type; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;

/// Parses an integer ("3", "-2") or a fraction "p/q" with q > 0 in lowest
/// terms. Throws Error(MalformedInput) otherwise.
Rational parse_rational(std::string_view text);

/// Lowest-terms text form, "p/q" or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Sum of the coordinates, |x|.
Rational coordinate_sum(const RationalVector& x);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace pathlab
