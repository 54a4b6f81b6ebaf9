#include "zetalab/complex.hpp"

#include "zetalab/errors.hpp"

#include <sstream>

namespace zetalab {

Cx& Cx::operator*=(const Cx& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Cx& Cx::operator/=(const Cx& o) {
  // Smith's algorithm
  if (abs(o.re) >= abs(o.im)) {
    const Real ratio = o.im / o.re;
    const Real den = o.re + o.im * ratio;
    Real r = (re + im * ratio) / den;
    im = (im - re * ratio) / den;
    re = std::move(r);
  } else {
    const Real ratio = o.re / o.im;
    const Real den = o.re * ratio + o.im;
    Real r = (re * ratio + im) / den;
    im = (im * ratio - re) / den;
    re = std::move(r);
  }
  return *this;
}

Cx operator+(Cx a, const Cx& b) { return a += b; }
Cx operator-(Cx a, const Cx& b) { return a -= b; }
Cx operator*(Cx a, const Cx& b) { return a *= b; }
Cx operator/(Cx a, const Cx& b) { return a /= b; }
Cx operator*(Cx a, const Real& b) { return a *= b; }
Cx operator*(const Real& a, Cx b) { return b *= a; }
Cx operator/(Cx a, const Real& b) { return a /= b; }
Cx operator-(const Cx& a) { return Cx(-a.re, -a.im); }

bool is_real(const Cx& z) { return z.im == 0; }

Real abs(const Cx& z) { return hypot(z.re, z.im); }
Real norm(const Cx& z) { return z.re * z.re + z.im * z.im; }
Real arg(const Cx& z) { return atan2(z.im, z.re); }
Cx conj(const Cx& z) { return Cx(z.re, -z.im); }

Cx exp(const Cx& z) {
  const Real m = exp(z.re);
  return Cx(m * cos(z.im), m * sin(z.im));
}

Cx log(const Cx& z) { return Cx(log(abs(z)), arg(z)); }

Cx sqrt(const Cx& z) {
  if (z.re == 0 && z.im == 0) return Cx();
  const Real r = abs(z);
  if (z.re >= 0) {
    const Real w = sqrt((r + z.re) / 2);
    return Cx(w, z.im / (2 * w));
  }
  Real w = sqrt((r - z.re) / 2);
  if (z.im < 0) w = -w;
  return Cx(z.im / (2 * w), w);
}

Cx pow(const Cx& base, const Cx& e) {
  if (base.re == 0 && base.im == 0) return Cx();
  return exp(e * log(base));
}

Cx pow(const Real& base, const Cx& e) {
  const Real lb = log(base);
  return exp(Cx(e.re * lb, e.im * lb));
}

Cx pow(const Cx& base, unsigned n) {
  Cx result(1);
  Cx b = base;
  while (n) {
    if (n & 1U) result *= b;
    n >>= 1U;
    if (n) b *= b;
  }
  return result;
}

Cx sin(const Cx& z) {
  return Cx(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}

Cx cos(const Cx& z) {
  return Cx(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}

Cx parse_cx(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Cx(Real(text));
    return Cx(Real(text.substr(0, comma)), Real(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw ConfigError("cannot parse complex value '" + text + "'");
  }
}

}  // namespace zetalab
