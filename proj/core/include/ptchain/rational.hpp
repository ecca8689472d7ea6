#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ptchain {

// Exact arbitrary-precision rational. GMP keeps values in lowest terms with a
// positive denominator as long as they are produced through arithmetic or the
// helpers below; raw two-argument construction is deliberately not used
// anywhere in this codebase.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "num", "num/den" and optional leading '-'. Throws on anything else.
Rational parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string rational_to_string(const Rational& r);

// r^e for possibly negative e; throws on 0^negative.
Rational rational_pow(const Rational& base, long exponent);

}  // namespace ptchain
