#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tlocus {

// Exact arithmetic is GMP's mpq_class throughout. Always bind results to a
// named Rational (never `auto`) so expression templates are materialized.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". The result is canonicalized; callers that need
/// lowest-terms input can compare against the original text.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& value);

/// Exact conversion of a finite double (doubles are dyadic rationals).
Rational from_double(double value);

/// Best rational approximation with denominator at most `max_den`
/// (continued-fraction convergents / semiconvergents).
Rational best_rational_approximation(double value, const Integer& max_den);

/// x^e for integer e; negative exponents require x != 0.
Rational pow(const Rational& base, long exponent);

inline int sign(const Rational& value) { return sgn(value); }
inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

RationalVector zeros(std::size_t n);
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);
bool all_positive(const RationalVector& v);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
void axpy(RationalVector& y, const Rational& a, const RationalVector& x);

std::vector<double> to_doubles(const RationalVector& v);

/// Least common multiple of the denominators.
Integer common_denominator(const RationalVector& v);

} // namespace tlocus
