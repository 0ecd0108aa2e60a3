#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace sflow {

// All arithmetic in this library is exact.  Coefficients are arbitrary
// precision rationals stored in lowest terms with a positive denominator,
// both guaranteed by the GMP backend.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parse "p", "-p" or "p/q".  Floating point text is rejected.
Rational parse_rational(const std::string& text);

/// Format in lowest terms: "p" when the denominator is one, else "p/q".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) {
    if (value > 0) return 1;
    if (value < 0) return -1;
    return 0;
}

inline bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

std::vector<Rational> parse_rational_vector(const std::vector<std::string>& texts);
std::vector<std::string> format_rational_vector(const std::vector<Rational>& values);

}  // namespace sflow
