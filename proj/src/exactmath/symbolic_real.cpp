#include "qsep/exactmath/symbolic_real.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <cstdio>

namespace qsep {

namespace {

// Splits n = s^2 * f with f square-free.
std::pair<unsigned long, unsigned long> square_split(unsigned long n) {
  unsigned long square_root = 1;
  unsigned long free_part = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    unsigned count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) square_root *= p;
    if (count % 2) free_part *= p;
  }
  free_part *= n;
  return {square_root, free_part};
}

}  // namespace

SymbolicReal::SymbolicReal(Rational coeff, unsigned pi_power, unsigned long radicand)
    : coeff_(std::move(coeff)), pi_power_(pi_power), radicand_(radicand) {
  if (radicand_ == 0) {
    coeff_ = 0;
    radicand_ = 1;
  }
  normalize();
}

SymbolicReal SymbolicReal::sqrt_of(unsigned long n) { return SymbolicReal(Rational(1), 0, n); }

void SymbolicReal::normalize() {
  coeff_.canonicalize();
  if (coeff_ == 0) {
    pi_power_ = 0;
    radicand_ = 1;
    return;
  }
  auto [root, free_part] = square_split(radicand_);
  coeff_ *= root;
  radicand_ = free_part;
}

double SymbolicReal::to_double() const {
  return coeff_.get_d() * std::pow(std::numbers::pi, pi_power_) * std::sqrt(static_cast<double>(radicand_));
}

SymbolicReal operator*(const SymbolicReal& a, const SymbolicReal& b) {
  return SymbolicReal(a.coeff_ * b.coeff_, a.pi_power_ + b.pi_power_, a.radicand_ * b.radicand_);
}

SymbolicReal operator*(const SymbolicReal& a, const Rational& c) {
  return SymbolicReal(a.coeff_ * c, a.pi_power_, a.radicand_);
}

SymbolicReal operator/(const SymbolicReal& a, const SymbolicReal& b) {
  if (b.is_zero()) throw std::domain_error("SymbolicReal division by zero");
  if (a.is_zero()) return {};
  if (a.pi_power_ < b.pi_power_) throw std::domain_error("SymbolicReal quotient has negative pi power");
  // 1/sqrt(m) = sqrt(m)/m
  Rational c = a.coeff_ / b.coeff_ / b.radicand_;
  return SymbolicReal(c, a.pi_power_ - b.pi_power_, a.radicand_ * b.radicand_);
}

SymbolicReal operator+(const SymbolicReal& a, const SymbolicReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_power_ != b.pi_power_ || a.radicand_ != b.radicand_)
    throw std::domain_error("SymbolicReal addition of unlike terms");
  return SymbolicReal(a.coeff_ + b.coeff_, a.pi_power_, a.radicand_);
}

SymbolicReal operator-(const SymbolicReal& a, const SymbolicReal& b) {
  return a + SymbolicReal(-b.coeff_, b.pi_power_, b.radicand_);
}

SymbolicReal SymbolicReal::pow(unsigned exponent) const {
  SymbolicReal r(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * *this;
  return r;
}

std::string to_string(const SymbolicReal& x) {
  if (x.is_zero()) return "0";
  std::string s = x.coeff().get_str();
  if (x.pi_power() == 1) s += "*pi";
  if (x.pi_power() > 1) s += "*pi^" + std::to_string(x.pi_power());
  if (x.radicand() != 1) s += "*sqrt(" + std::to_string(x.radicand()) + ")";
  return s;
}

std::string to_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace qsep
