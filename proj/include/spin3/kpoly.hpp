#pragma once

#include <vector>

#include "spin3/rational.hpp"

namespace spin3 {

/// Univariate polynomial in the formal symbol k with Rational coefficients,
/// stored densely by degree. Canonical form has no trailing zero coefficient;
/// the zero polynomial stores nothing (degree -1).
class KPoly {
 public:
  KPoly() = default;
  KPoly(Rational constant);  // NOLINT: constants embed implicitly
  KPoly(long long constant) : KPoly(Rational(constant)) {}

  static KPoly variable();  // the polynomial k
  static KPoly monomial(int degree, Rational coeff);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Degree-d coefficient; zero outside the stored range.
  const Rational& coeff(int deg) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  friend KPoly operator-(const KPoly& p);
  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& p, const Rational& c);
  friend KPoly operator*(const Rational& c, const KPoly& p) { return p * c; }
  friend KPoly operator/(const KPoly& p, const Rational& c);

  KPoly& operator+=(const KPoly& b) { return *this = *this + b; }
  KPoly& operator-=(const KPoly& b) { return *this = *this - b; }
  KPoly& operator*=(const KPoly& b) { return *this = *this * b; }

  /// Exact Horner evaluation.
  Rational eval(const Rational& x) const;

  friend bool operator==(const KPoly& a, const KPoly& b) = default;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

}  // namespace spin3
