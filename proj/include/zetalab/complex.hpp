#ifndef ZETALAB_COMPLEX_HPP
#define ZETALAB_COMPLEX_HPP

#include "zetalab/real.hpp"

namespace zetalab {

/// Complex number over `Real`. Kept separate from std::complex, whose
/// behaviour for non-builtin value types is unspecified.
struct Cx {
  Real re;
  Real im;

  Cx() : re(0), im(0) {}
  Cx(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Cx(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Cx(const Real& r, const Real& i) : re(r), im(i) {}

  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cx& operator*=(const Cx& o);
  Cx& operator/=(const Cx& o);
  Cx& operator*=(const Real& r) {
    re *= r;
    im *= r;
    return *this;
  }
  Cx& operator/=(const Real& r) {
    re /= r;
    im /= r;
    return *this;
  }
};

Cx operator+(Cx a, const Cx& b);
Cx operator-(Cx a, const Cx& b);
Cx operator*(Cx a, const Cx& b);
Cx operator/(Cx a, const Cx& b);
Cx operator*(Cx a, const Real& b);
Cx operator*(const Real& a, Cx b);
Cx operator/(Cx a, const Real& b);
Cx operator-(const Cx& a);
inline Cx operator*(const Cx& a, int b) { return a * Real(b); }
inline Cx operator*(int a, const Cx& b) { return Real(a) * b; }
inline Cx operator/(const Cx& a, int b) { return a / Real(b); }
inline bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }

bool is_real(const Cx& z);

/// |z| via hypot, so no intermediate squares overflow the exponent range.
Real abs(const Cx& z);
Real norm(const Cx& z);
Real arg(const Cx& z);
Cx conj(const Cx& z);
Cx exp(const Cx& z);
/// Principal logarithm, arg in (-pi, pi].
Cx log(const Cx& z);
/// Principal square root, Re >= 0.
Cx sqrt(const Cx& z);
Cx pow(const Cx& base, const Cx& e);
/// x^s = exp(s log x) for x > 0.
Cx pow(const Real& base, const Cx& e);
Cx pow(const Cx& base, unsigned n);
Cx sin(const Cx& z);
Cx cos(const Cx& z);

/// Parses "re,im" or "re".
Cx parse_cx(const std::string& text);

}  // namespace zetalab

#endif  // ZETALAB_COMPLEX_HPP
