#pragma once

#include <string>
#include <utility>

#include "subfac/cyclotomic.hpp"

namespace subfac {

// Certified numerics on exact cyclotomic values, backed by outward-rounded
// MPFR interval evaluation at adaptive precision.  Signs and comparisons are
// decided exactly: zero is tested algebraically, nonzero values are separated
// from zero by refining the interval, which always terminates.

// sign of a real value: -1, 0, +1; throws if the value is not real
int certified_sign(const Cyc& x);
bool certified_positive(const Cyc& x);
bool certified_less(const Cyc& a, const Cyc& b);

// rational enclosure lo <= x <= hi with hi - lo <= 10^-digits (x real)
std::pair<Rational, Rational> rational_enclosure(const Cyc& x, unsigned digits);

// Decimal approximation with `digits` fractional digits, rounding half away
// from zero.  Exact decimal arithmetic for rational values; interval
// refinement otherwise (an irrational value never sits on a rounding tie, and
// exact tie candidates inside the interval are tested algebraically, so the
// result is the correctly rounded decimal, not a best effort).
// Complex values are rendered as "re+imi" / "re-imi".
std::string decimal_string(const Cyc& x, unsigned digits = 6);

// decimal string for an exact rational (same rounding convention)
std::string decimal_string(const Rational& q, unsigned digits = 6);

double to_double(const Cyc& x); // midpoint of a 53-bit enclosure of re(x)

} // namespace subfac
