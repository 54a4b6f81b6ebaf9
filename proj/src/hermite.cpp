#include "zetalab/hermite.hpp"

#include <cmath>

namespace zetalab {

Real hermite_poly(int m, const Real& x) {
  if (m == 0) return Real(1);
  Real h0(1), h1 = 2 * x;
  for (int k = 1; k < m; ++k) {
    Real h2 = 2 * x * h1 - 2 * k * h0;
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

BigRational hermite_poly_exact(int m, const BigRational& x) {
  if (m == 0) return BigRational(1);
  BigRational h0(1), h1 = 2 * x;
  for (int k = 1; k < m; ++k) {
    BigRational h2 = 2 * x * h1 - 2 * k * h0;
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

std::vector<Real> scaled_hermite_functions(int kmax, const Real& x) {
  std::vector<Real> r(kmax + 1);
  const Real y = sqrt(2 * pi()) * x;
  r[0] = exp(-pi() * x * x);
  if (kmax == 0) return r;
  r[1] = y * sqrt(Real(2)) * r[0];
  for (int k = 1; k < kmax; ++k) {
    r[k + 1] = y * sqrt(Real(2) / (k + 1)) * r[k] - sqrt(Real(k) / (k + 1)) * r[k - 1];
  }
  return r;
}

Real log_hermite_scale(int k) {
  return Real(k) / 2 * ln2() + lgamma(Real(k + 1)) / 2;
}

Real hermite_function(int k, const Real& x) {
  return scaled_hermite_functions(k, x)[k] * exp(log_hermite_scale(k));
}

Real log_abs_hermite_function(int k, const Real& x) {
  return log(abs(scaled_hermite_functions(k, x)[k])) + log_hermite_scale(k);
}

namespace {

// log of 2^(-k)/(k/2)! * 2^(k/2) sqrt(k!), k even.
Real log_lattice_normalization(int k) {
  return lgamma(Real(k + 1)) / 2 - lgamma(Real(k / 2 + 1)) - Real(k) / 2 * ln2();
}

}  // namespace

HermiteEval phi_norm(int m, const Real& x) {
  HermiteEval out;
  out.m = m;
  out.x = x;
  const auto r = scaled_hermite_functions(2 * m, x);
  out.phi_norm = r[2 * m] * exp(log_lattice_normalization(2 * m));
  out.log_scale_used = m > 0;
  return out;
}

Real lattice_tail_bound(int two_m, int radius) {
  const int m = two_m / 2;
  const Real p = pi();
  // C_m = (2m)!/(m!^2 4^m)
  const Real log_c = lgamma(Real(2 * m + 1)) - 2 * lgamma(Real(m + 1)) - 2 * m * ln2();
  const Real root = 2 * sqrt(2 * p * m);
  const Real x = Real(radius + 1);
  const Real log_first = log_c + root * x - p * x * x;
  const Real log_ratio = root - p * (2 * x + 1);
  if (log_ratio >= 0) return Real(std::numeric_limits<double>::infinity());
  return 2 * exp(log_first) / (1 - exp(log_ratio));
}

int lattice_radius(int two_m) {
  int radius = static_cast<int>(std::ceil(2 * std::sqrt(static_cast<double>(two_m))));
  const Real goal = pow10(-Precision::working_digits());
  while (lattice_tail_bound(two_m, radius) >= goal) ++radius;
  return radius;
}

std::vector<LatticeSumResult> lattice_sums_S(int max_index) {
  const int kmax = 2 * max_index;
  const int radius = lattice_radius(kmax);
  std::vector<CompensatedSum<Real>> sums(max_index + 1);
  for (int n = 0; n <= radius; ++n) {
    const auto r = scaled_hermite_functions(kmax, Real(n));
    for (int j = 0; j <= max_index; ++j) {
      sums[j].add(n == 0 ? r[2 * j] : 2 * r[2 * j]);
    }
  }
  std::vector<LatticeSumResult> out(max_index + 1);
  for (int j = 0; j <= max_index; ++j) {
    out[j].value = sums[j].value() * exp(log_lattice_normalization(2 * j));
    out[j].radius = radius;
    out[j].tail_bound = lattice_tail_bound(2 * j, radius);
  }
  return out;
}

LatticeSumResult lattice_sum_S(int two_m) {
  if (two_m < 0 || two_m % 2 != 0) {
    throw DomainError("lattice_sum_S: index must be even and nonnegative");
  }
  const int radius = lattice_radius(two_m);
  CompensatedSum<Real> sum;
  for (int n = 0; n <= radius; ++n) {
    const Real r = scaled_hermite_functions(two_m, Real(n))[two_m];
    sum.add(n == 0 ? r : 2 * r);
  }
  return LatticeSumResult{sum.value() * exp(log_lattice_normalization(two_m)), radius,
                          lattice_tail_bound(two_m, radius)};
}

LatticeSumResult hermite_lattice_sum(int k) {
  if (k % 2 == 1) {
    return LatticeSumResult{Real(0), 0, Real(0)};
  }
  LatticeSumResult s = lattice_sum_S(k);
  // Undo the 2^(-k)/(k/2)! normalization.
  const Real scale = exp(Real(k) * ln2() + lgamma(Real(k / 2 + 1)));
  s.value *= scale;
  s.tail_bound *= scale;
  return s;
}

Real lattice_abs_sum(int m, bool tail_only) {
  const int k = 2 * m;
  const int radius = lattice_radius(k);
  const double cut = 2 * std::sqrt(2.0 * m);
  CompensatedSum<Real> sum;
  for (int n = 0; n <= radius; ++n) {
    if (tail_only && n < cut) continue;
    const Real r = abs(scaled_hermite_functions(k, Real(n))[k]);
    sum.add(n == 0 ? r : 2 * r);
  }
  return sum.value() * exp(log_lattice_normalization(k));
}

Real phi_integral(int k) {
  if (k < 0) throw DomainError("phi_integral: k >= 0");
  if (k % 2) return Real(0);
  const Real p = pi();
  // Past the turning point sqrt((2k+1)/(2 pi)) the Gaussian envelope takes over.
  const Real x_end = sqrt(Real(2 * k + 1) / (2 * p)) +
                     sqrt(Real(Precision::working_digits() + 5) * log(Real(10)) / p) + 1;
  auto integrand = [k](const Real& x) -> Cx {
    return Cx(scaled_hermite_functions(k, x)[k]);
  };
  const Real scale = exp(log_hermite_scale(k));
  const Real size = to_real(BigRational(factorial(k), factorial(k / 2)));
  const QuadratureResult q =
      integrate_smooth(integrand, Real(0), x_end, tol(5) * size / scale, 4 + k / 2);
  return 2 * q.value.re * scale;
}

Real phi_integral_identity_check(int m) {
  if (m < 0 || m > 50) throw DomainError("phi_integral_identity_check: 0 <= m <= 50");
  const Real exact = to_real(BigRational(factorial(2 * m), factorial(m)));
  return (phi_integral(2 * m) - exact) / exact;
}

Real phi_square_integral_scaled(int k) {
  const Real p = pi();
  const Real x_end = sqrt(Real(2 * k + 1) / (2 * p)) +
                     sqrt(Real(Precision::working_digits() + 5) * log(Real(10)) / (2 * p)) + 1;
  auto integrand = [k](const Real& x) -> Cx {
    const Real r = scaled_hermite_functions(k, x)[k];
    return Cx(r * r);
  };
  const QuadratureResult q = integrate_smooth(integrand, Real(0), x_end, tol(5), 4 + k);
  return 2 * q.value.re;
}

}  // namespace zetalab
