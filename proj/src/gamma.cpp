#include "zetalab/numerics.hpp"

#include <cmath>

namespace zetalab {

namespace {

bool is_nonpositive_integer(const Cx& z) {
  return z.im == 0 && z.re <= 0 && floor(z.re) == z.re;
}

// Stirling series for log Gamma(w), Re(w) large.
Cx stirling_log_gamma(const Cx& w) {
  const Real eps = epsilon();
  Cx result = (w - Cx(Real(1) / 2)) * log(w) - w + Cx(log(2 * pi()) / 2);
  const Cx inv_w = Cx(1) / w;
  const Cx inv_w2 = inv_w * inv_w;
  Cx power = inv_w;  // w^-(2k-1)
  const Real scale = abs(result) + 1;
  for (unsigned k = 1;; ++k) {
    const auto& b = bernoulli_numbers(2 * k);
    const Real coef = to_real(b[2 * k]) / (Real(2 * k) * Real(2 * k - 1));
    const Cx term = power * coef;
    result += term;
    if (abs(term) < eps * scale) break;
    if (k > 4 * static_cast<unsigned>(Precision::working_digits())) {
      throw ConvergenceError("Stirling series did not converge", -1,
                             -Precision::working_digits());
    }
    power *= inv_w2;
  }
  return result;
}

// Shift so that Re(z + n) >= D/2.
int stirling_shift(const Cx& z) {
  const double threshold = 0.5 * Precision::working_digits();
  const double re = static_cast<double>(z.re);
  return re >= threshold ? 0 : static_cast<int>(std::ceil(threshold - re));
}

}  // namespace

Cx log_gamma(const Cx& z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at nonpositive integer");
  }
  const int n = stirling_shift(z);
  Cx result = stirling_log_gamma(z + Cx(n));
  for (int k = 0; k < n; ++k) result -= log(z + Cx(k));
  return result;
}

Cx gamma(const Cx& z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at nonpositive integer");
  }
  if (z.im == 0) return Cx(gamma(z.re));
  const int n = stirling_shift(z);
  Cx denom(1);
  for (int k = 0; k < n; ++k) denom *= z + Cx(k);
  return exp(stirling_log_gamma(z + Cx(n))) / denom;
}

Real gamma(const Real& x) {
  if (x <= 0 && floor(x) == x) {
    throw PoleError("gamma: pole at nonpositive integer");
  }
  return tgamma(x);
}

Real abs_gamma_quarter_line(const Real& t) {
  return exp(log_gamma(Cx(Real(1) / 4, t / 2)).re);
}

}  // namespace zetalab
