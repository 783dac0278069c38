#ifndef FERNKIT_RATIONAL_HPP
#define FERNKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace fernkit::exactlin {

// Exact rational scalar. GMP keeps values canonical: gcd(|num|, den) = 1
// and den > 0. No floating point is used anywhere in the library.
using Rational = mpq_class;
using Integer = mpz_class;

// Builds num/den in canonical form. Throws DomainError if den = 0.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "a/b" or "a" (optionally signed). Throws DomainError on junk.
Rational parse_rational(const std::string& text);

// Renders "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rational& x);

// Exact p-adic valuation. v_p(0) is +infinity, which is never an integer;
// the sentinel keeps that case out of arithmetic by construction.
struct PadicValuation {
  bool is_infinite = false;
  long value = 0;  // meaningful only when !is_infinite

  static PadicValuation infinity() { return PadicValuation{true, 0}; }
  static PadicValuation finite(long v) { return PadicValuation{false, v}; }

  bool operator==(const PadicValuation&) const = default;
};

// v_p(x) for a prime p >= 2. Throws DomainError if p is not prime.
PadicValuation vp(const Rational& x, const Integer& p);

}  // namespace fernkit::exactlin

#endif  // FERNKIT_RATIONAL_HPP
