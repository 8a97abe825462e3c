#pragma once

#include <gmpxx.h>

#include <string>

namespace gasket {

// Exact arbitrary-precision rational scalar. Every quantity in the library
// (values, derivatives, energies, measures) is a Rat; no floating point
// appears anywhere in the computation paths.
using Rat = mpq_class;

// num/den in lowest terms; den must be nonzero.
Rat make_rat(long num, long den = 1);

// Integer power, exponent may be negative (base must be nonzero then).
Rat rat_pow(const Rat& base, long exp);

// Accepts "p", "p/q", with optional leading '-'.
Rat parse_rat(const std::string& s);

// Lowest terms; "p" when the denominator is 1.
std::string rat_str(const Rat& q);

// Resistance scaling r = 3/5 of the standard energy form.
const Rat& res_scale();

// 5/3 = r^{-1}.
const Rat& res_scale_inv();

}  // namespace gasket
