#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsep {

// Canonical arbitrary-precision rational: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;
using BigInt = mpz_class;

// Raised when an exact operation is handed structurally invalid input
// (arity mismatch, bound depending on the integration variable, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(long num, long den = 1);

// Accepts "p/q", "p", and finite decimals such as "-0.45" or "1.5e-2";
// decimals are converted exactly.
Rational parse_rational(std::string_view text);

// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& q);

double to_double(const Rational& q);

BigInt factorial(unsigned n);

// Γ(k) = (k-1)! for positive integer k.
BigInt gamma_int(unsigned k);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace qsep
