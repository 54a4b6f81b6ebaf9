#include "zetalab/numerics.hpp"

#include <cmath>

namespace zetalab {

namespace {

constexpr double kMaxImag = 100.0;
// Below this |1 - 2^(1-s)| the eta route is ill conditioned.
constexpr double kEtaFactorFloor = 1e-3;

void check_domain(const Cx& s) {
  if (s.re == 1 && s.im == 0) throw PoleError("zeta: pole at s = 1");
  if (!(s.re > 0) || s.re > 2 || abs(s.im) > kMaxImag) {
    throw PrecisionError(
        "zeta_oracle: validated only for 0 < Re(s) <= 2, |Im(s)| <= 100");
  }
}

Cx eta_factor(const Cx& s) {
  return Cx(1) - pow(Real(2), Cx(1) - s);
}

Cx zeta_eta(const Cx& s) {
  const int n = eta_series_terms(s);
  // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
  std::vector<Real> d(n + 1);
  Real term(1);
  Real acc(1);
  d[0] = acc;
  for (int i = 0; i < n; ++i) {
    term *= Real(4) * (n + i) * (n - i) / (Real(2 * i + 1) * (2 * i + 2));
    acc += term;
    d[i + 1] = acc;
  }
  const Real& dn = d[n];
  CompensatedSum<Cx> sum;
  for (int k = 0; k < n; ++k) {
    Cx power = exp(-s * Cx(log(Real(k + 1))));
    power *= (d[k] - dn);
    if (k & 1) power = -power;
    sum.add(power);
  }
  return -sum.value() / (eta_factor(s) * Cx(dn));
}

Cx zeta_euler_maclaurin(const Cx& s) {
  const Real eps = epsilon();
  const double abs_s = static_cast<double>(abs(s));
  int big_n = static_cast<int>(std::ceil(abs_s)) + Precision::working_digits();
  for (int attempt = 0; attempt < 6; ++attempt, big_n *= 2) {
    CompensatedSum<Cx> sum;
    for (int k = 1; k < big_n; ++k) sum.add(exp(-s * Cx(log(Real(k)))));
    const Real log_n = log(Real(big_n));
    const Cx n_pow_minus_s = exp(-s * Cx(log_n));
    sum.add(n_pow_minus_s * Cx(Real(big_n)) / (s - Cx(1)));
    sum.add(n_pow_minus_s / Real(2));
    // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1)
    Cx rising = s;  // (s)_(2k-1)
    Cx npow = n_pow_minus_s / Real(big_n);
    Real fact(2);  // (2k)!
    const Real inv_n2 = Real(1) / (Real(big_n) * big_n);
    bool converged = false;
    const int max_k = static_cast<int>(0.4 * big_n);
    for (int k = 1; k <= max_k; ++k) {
      const auto& b = bernoulli_numbers(2 * k);
      const Cx term = rising * npow * (to_real(b[2 * k]) / fact);
      sum.add(term);
      if (abs(term) < eps) {
        converged = true;
        break;
      }
      rising *= (s + Cx(2 * k - 1)) * (s + Cx(2 * k));
      npow *= Cx(inv_n2);
      fact *= Real(2 * k + 1) * (2 * k + 2);
    }
    if (converged) return sum.value();
  }
  throw ConvergenceError("zeta Euler-Maclaurin did not converge", -1,
                         -Precision::digits());
}

}  // namespace

int eta_series_terms(const Cx& s) {
  const double t = std::fabs(static_cast<double>(s.im));
  const double digits = Precision::working_digits();
  const double log_gamma_abs = static_cast<double>(log_gamma(s).re);
  const double log_factor = static_cast<double>(log(abs(eta_factor(s))));
  const double numer = digits * std::log(10.0) + M_PI * t / 2 +
                       std::log(3.0 * (1 + 2 * t)) - log_gamma_abs -
                       log_factor;
  return std::max(8, static_cast<int>(std::ceil(numer / std::log(3 + std::sqrt(8.0)))));
}

Cx zeta_oracle(const Cx& s, ZetaMethod method) {
  check_domain(s);
  if (method == ZetaMethod::euler_maclaurin ||
      abs(eta_factor(s)) < kEtaFactorFloor) {
    return zeta_euler_maclaurin(s);
  }
  return zeta_eta(s);
}

Cx hardy_z(const Real& t) {
  const Real theta = log_gamma(Cx(Real(1) / 4, t / 2)).im - t / 2 * log(pi());
  return exp(Cx(Real(0), theta)) * zeta_oracle(Cx(Real(1) / 2, t));
}

}  // namespace zetalab
