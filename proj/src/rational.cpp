#include "spin3/rational.hpp"

#include <cctype>
#include <utility>

namespace spin3 {

namespace {

void normalize(BigInt& num, BigInt& den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  const BigInt g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DivisionByZeroError();
  normalize(num_, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DivisionByZeroError();
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  const auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) throw ParseError("malformed rational: \"" + std::string(text) + "\"");
  }
  std::string_view mag = num;
  if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
  if (!digits(mag)) throw ParseError("malformed rational: \"" + std::string(text) + "\"");

  BigInt n(std::string(num));
  BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den));
  if (d == 0) throw ParseError("malformed rational: zero denominator in \"" + std::string(text) + "\"");
  return Rational(std::move(n), std::move(d));
}

}  // namespace spin3
