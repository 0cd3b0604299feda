#include "spin3/kpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace spin3 {

namespace {
const Rational kZero{};
}

KPoly::KPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

KPoly KPoly::variable() { return monomial(1, Rational(1)); }

KPoly KPoly::monomial(int degree, Rational coeff) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  KPoly p;
  if (!coeff.is_zero()) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

const Rational& KPoly::coeff(int deg) const {
  if (deg < 0 || deg > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(deg)];
}

void KPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KPoly operator-(const KPoly& p) {
  KPoly out = p;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  KPoly out;
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    if (i < a.coeffs_.size()) out.coeffs_[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out.coeffs_[i] += b.coeffs_[i];
  }
  out.trim();
  return out;
}

KPoly operator-(const KPoly& a, const KPoly& b) { return a + (-b); }

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  KPoly out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  out.trim();
  return out;
}

KPoly operator*(const KPoly& p, const Rational& c) {
  if (c.is_zero()) return {};
  KPoly out = p;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

KPoly operator/(const KPoly& p, const Rational& c) {
  if (c.is_zero()) throw DivisionByZeroError();
  return p * (Rational(1) / c);
}

Rational KPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace spin3
