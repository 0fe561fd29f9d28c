#pragma once

#include <string>

#include "qsep/exactmath/rational.hpp"

namespace qsep {

// Exact real of the form coeff * pi^pi_power * sqrt(radicand), radicand
// square-free. Zero is always (0, 0, 1).
class SymbolicReal {
 public:
  SymbolicReal() : coeff_(0), pi_power_(0), radicand_(1) {}
  SymbolicReal(Rational coeff, unsigned pi_power = 0, unsigned long radicand = 1);

  static SymbolicReal pi_pow(unsigned k) { return SymbolicReal(Rational(1), k, 1); }
  static SymbolicReal sqrt_of(unsigned long n);

  const Rational& coeff() const { return coeff_; }
  unsigned pi_power() const { return pi_power_; }
  unsigned long radicand() const { return radicand_; }
  bool is_zero() const { return coeff_ == 0; }

  double to_double() const;

  friend SymbolicReal operator*(const SymbolicReal& a, const SymbolicReal& b);
  friend SymbolicReal operator*(const SymbolicReal& a, const Rational& c);
  friend SymbolicReal operator*(const Rational& c, const SymbolicReal& a) { return a * c; }
  // Throws std::domain_error on division by zero or a negative pi power.
  friend SymbolicReal operator/(const SymbolicReal& a, const SymbolicReal& b);
  // Only like terms (same pi power and radicand) or zero operands combine.
  friend SymbolicReal operator+(const SymbolicReal& a, const SymbolicReal& b);
  friend SymbolicReal operator-(const SymbolicReal& a, const SymbolicReal& b);

  SymbolicReal pow(unsigned exponent) const;

  friend bool operator==(const SymbolicReal& a, const SymbolicReal& b) {
    return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_ && a.radicand_ == b.radicand_;
  }

 private:
  void normalize();

  Rational coeff_;
  unsigned pi_power_;
  unsigned long radicand_;
};

// "coeff * pi^k * sqrt(m)" with trivial factors omitted.
std::string to_string(const SymbolicReal& x);

// 17 significant digits.
std::string to_decimal(double value);

}  // namespace qsep
