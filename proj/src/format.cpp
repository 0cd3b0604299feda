#include "spin3/format.hpp"

namespace spin3 {

std::string format_rational(const Rational& r) { return r.str(); }

namespace {

std::string monomial_str(const BigInt& coeff_mag, int deg) {
  std::string out;
  if (coeff_mag != 1 || deg == 0) out += coeff_mag.str();
  if (deg >= 1) {
    out += 'k';
    if (deg >= 2) out += '^' + std::to_string(deg);
  }
  return out;
}

}  // namespace

std::string format_kpoly(const KPoly& p) {
  if (p.is_zero()) return "0";

  // factor out the content: gcd of numerators over lcm of denominators
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    num_gcd = gcd(num_gcd, abs(c.num()));
    den_lcm = lcm(den_lcm, c.den());
  }
  const Rational content(num_gcd, den_lcm);

  std::vector<BigInt> prim(p.coeffs().size());
  int nonzero = 0;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    const Rational q = p.coeffs()[i] / content;
    prim[i] = q.num();  // exact integer by construction of the content
    if (prim[i] != 0) ++nonzero;
  }

  const bool negative = prim.back() < 0;
  if (negative)
    for (auto& c : prim) c = -c;

  std::string out;
  if (negative) out += '-';

  if (nonzero == 1) {
    // single monomial: merge the content in directly
    const int deg = p.degree();
    out += monomial_str(num_gcd * prim[static_cast<std::size_t>(deg)], deg);
  } else {
    if (num_gcd != 1) out += num_gcd.str();
    out += '(';
    bool first = true;
    for (int deg = p.degree(); deg >= 0; --deg) {
      const BigInt& c = prim[static_cast<std::size_t>(deg)];
      if (c == 0) continue;
      if (!first) out += c > 0 ? "+" : "-";
      out += monomial_str(abs(c), deg);
      first = false;
    }
    out += ')';
  }
  if (den_lcm != 1) out += '/' + den_lcm.str();
  return out;
}

std::string format_key(const CorrelatorKey& key) {
  return "<m=" + std::to_string(key.m) + ", shift=" + std::to_string(key.shift) +
         ", r=" + std::to_string(key.r) + ">";
}

std::string format_lincomb(const LinComb& lc) {
  if (lc.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : lc.terms()) {
    std::string term = format_kpoly(coeff);
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    out += " · " + format_key(key);
  }
  return out;
}

}  // namespace spin3
