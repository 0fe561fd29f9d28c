#include <stdexcept>

#include "qsep/volumes.hpp"

namespace qsep {

namespace {

void require_descending(const std::vector<Rational>& v, const char* what) {
  if (v.empty()) throw std::invalid_argument(std::string(what) + ": empty");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) throw std::invalid_argument(std::string(what) + ": entries must be descending");
}

bool strictly_descending(const std::vector<Rational>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

Rational sum_of(const std::vector<Rational>& v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

Spectrum::Spectrum(std::vector<Rational> entries) : entries_(std::move(entries)) {
  require_descending(entries_, "Spectrum");
  if (entries_.back() < 0) throw std::invalid_argument("Spectrum: negative eigenvalue");
  if (sum_of(entries_) != 1) throw std::invalid_argument("Spectrum: entries must sum to 1");
}

bool Spectrum::is_simple() const { return strictly_descending(entries_); }

CenteredSpectrum::CenteredSpectrum(std::vector<Rational> entries) : entries_(std::move(entries)) {
  require_descending(entries_, "CenteredSpectrum");
  if (sum_of(entries_) != 0) throw std::invalid_argument("CenteredSpectrum: entries must sum to 0");
}

CenteredSpectrum CenteredSpectrum::from(const Spectrum& lambda) {
  const Rational shift(1, lambda.size());
  std::vector<Rational> out;
  out.reserve(lambda.size());
  for (const auto& l : lambda.entries()) out.emplace_back(l - shift);
  return CenteredSpectrum(std::move(out));
}

bool CenteredSpectrum::is_simple() const { return strictly_descending(entries_); }

CenteredSpectrum CenteredSpectrum::scaled(const Rational& tau) const {
  if (tau <= 0) throw std::invalid_argument("CenteredSpectrum::scaled: factor must be positive");
  std::vector<Rational> out;
  for (const auto& l : entries_) out.emplace_back(l * tau);
  return CenteredSpectrum(std::move(out));
}

}  // namespace qsep
