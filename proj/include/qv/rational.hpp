#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qv {

// Exact rational coefficients. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// the series layer relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "3", "-3/2". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical form: "3", "-3/2".
std::string to_string(const Rational& value);

}  // namespace qv
