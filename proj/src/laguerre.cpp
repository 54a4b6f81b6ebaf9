#include "zetalab/laguerre.hpp"

#include <algorithm>

namespace zetalab {

namespace {

/// Truncated Taylor series in h about a fixed point.
struct Jet {
  std::vector<Real> c;

  explicit Jet(int order) : c(order + 1, Real(0)) {}

  int order() const { return static_cast<int>(c.size()) - 1; }
};

Jet operator+(const Jet& a, const Real& b) {
  Jet r = a;
  r.c[0] += b;
  return r;
}

Jet operator*(const Jet& a, const Real& b) {
  Jet r = a;
  for (auto& x : r.c) x *= b;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.order());
  for (int i = 0; i <= a.order(); ++i)
    for (int j = 0; i + j <= a.order(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  Jet q(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    Real acc = a.c[k];
    for (int j = 0; j < k; ++j) acc -= q.c[j] * b.c[k - j];
    q.c[k] = acc / b.c[0];
  }
  return q;
}

Jet log(const Jet& a) {
  Jet l(a.order());
  l.c[0] = log(a.c[0]);
  for (int k = 1; k <= a.order(); ++k) {
    Real acc = a.c[k];
    for (int j = 1; j < k; ++j) acc -= Real(j) / k * l.c[j] * a.c[k - j];
    l.c[k] = acc / a.c[0];
  }
  return l;
}

Jet exp(const Jet& a) {
  Jet e(a.order());
  e.c[0] = exp(a.c[0]);
  for (int k = 1; k <= a.order(); ++k) {
    Real acc(0);
    for (int j = 1; j <= k; ++j) acc += j * a.c[j] * e.c[k - j];
    e.c[k] = acc / k;
  }
  return e;
}

Jet variable(const Real& at, int order) {
  Jet x(order);
  x.c[0] = at;
  if (order > 0) x.c[1] = 1;
  return x;
}

constexpr int kEulerMaclaurinTerms = 40;
constexpr int kTailStart = 1000;

struct TailSum {
  Real value;
  Real error;
};

/// sum_{n>=N} F(n) = int_N^inf F + F(N)/2 - sum_j B_2j/(2j) c_{2j-1}, with c the
/// Taylor coefficients of F at N.
TailSum euler_maclaurin_tail(const Jet& F, const Real& integral) {
  const auto& B = bernoulli_numbers(2 * kEulerMaclaurinTerms);
  const Real stop = pow(Real(10), -Real(Precision::working_digits()));
  Real sum = integral + F.c[0] / 2;
  const Real scale = std::max<Real>(abs(sum), Real(1)) * stop;
  Real last(0);
  for (int j = 1; j <= kEulerMaclaurinTerms && 2 * j - 1 <= F.order(); ++j) {
    const Real term = to_real(B[2 * j]) / (2 * j) * F.c[2 * j - 1];
    sum -= term;
    last = abs(term);
    if (last < scale) return {sum, last};
  }
  throw ConvergenceError("Euler-Maclaurin tail did not converge", -1,
                         -double(Precision::working_digits()));
}

Real integration_end(const Real& rate, int power) {
  const Real target = (Precision::working_digits() + 5) * log(Real(10));
  Real X = target / rate;
  for (int it = 0; it < 30; ++it) X = (target + power * log(1 + 2 * X)) / rate;
  return X;
}

}  // namespace

std::vector<Real> laguerre_phi_values(int M, const Real& x) {
  if (M < 0) throw DomainError("laguerre_phi: m >= 0");
  if (x < 0) throw DomainError("laguerre_phi: x >= 0");
  std::vector<Real> out(M + 1);
  out[0] = exp(-x);
  if (M == 0) return out;
  out[1] = (1 - 2 * x) * out[0];
  for (int k = 1; k < M; ++k) out[k + 1] = ((2 * k + 1 - 2 * x) * out[k] - k * out[k - 1]) / (k + 1);
  return out;
}

LaguerreEval laguerre_phi(int m, const Real& x) {
  return LaguerreEval{m, x, laguerre_phi_values(m, x)[m]};
}

Real laguerre_generating_check(const Real& x, const Real& u, int M) {
  if (!(abs(u) < 1)) throw DomainError("laguerre_generating_check: |u| < 1");
  const std::vector<Real> phi = laguerre_phi_values(M, x);
  CompensatedSum<Real> sum;
  Real up(1);
  for (int m = 0; m <= M; ++m) {
    sum.add(phi[m] * up);
    up *= u;
  }
  return abs(exp(-x * (1 + u) / (1 - u)) / (1 - u) - sum.value());
}

Real laguerre_inner_product(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("laguerre_inner_product: m, n >= 0");
  const int top = std::max(m, n);
  const Real X = integration_end(Real(2), m + n);
  auto integrand = [&](const Real& x) -> Cx {
    const std::vector<Real> v = laguerre_phi_values(top, x);
    return Cx(v[m] * v[n]);
  };
  return integrate_smooth(integrand, Real(0), X, tol(5), 8 + top).value.re;
}

Real psi_laguerre(int m, const Real& t) {
  if (m < 0) throw DomainError("psi_laguerre: m >= 0");
  if (!(t > 0)) throw DomainError("psi_laguerre: t > 0");
  return pow((t - 1) / (t + 1), m) * 2 / (1 + t);
}

BigRational psi_laguerre_exact(int m, const BigRational& t) {
  if (m < 0) throw DomainError("psi_laguerre: m >= 0");
  if (!(t > 0)) throw DomainError("psi_laguerre: t > 0");
  const BigRational u = (t - 1) / (t + 1);
  BigRational acc = BigRational(2) / (t + 1);
  for (int k = 0; k < m; ++k) acc *= u;
  return acc;
}

std::vector<Real> psi_laguerre_values(int M, const Real& t) {
  if (M < 0) throw DomainError("psi_laguerre: m >= 0");
  if (!(t > 0)) throw DomainError("psi_laguerre: t > 0");
  const Real u = (t - 1) / (t + 1);
  std::vector<Real> out(M + 1);
  out[0] = 2 / (1 + t);
  for (int m = 1; m <= M; ++m) out[m] = out[m - 1] * u;
  return out;
}

Real eq3_residual(const Real& x, const Real& t, int M) {
  const std::vector<Real> phi = laguerre_phi_values(M, 2 * pi() * x);
  const std::vector<Real> psi = psi_laguerre_values(M, t);
  CompensatedSum<Real> sum;
  for (int m = 0; m <= M; ++m) sum.add(phi[m] * psi[m]);
  return abs(exp(-2 * pi() * x * t) - sum.value());
}

Real eq6_residual(const Real& x, const Real& t, int M) {
  const std::vector<Real> a = psi_laguerre_values(M, x * x);
  const std::vector<Real> b = psi_laguerre_values(M, t * t);
  CompensatedSum<Real> sum;
  for (int m = 0; m <= M; ++m) sum.add(m % 2 ? -a[m] * b[m] : a[m] * b[m]);
  return abs(1 / (pi() * (1 + x * x * t * t)) - sum.value() / (2 * pi()));
}

Real eq5_convolution_check(int m, const Real& t) {
  if (m < 0) throw DomainError("eq5_convolution_check: m >= 0");
  if (!(t > 0)) throw DomainError("eq5_convolution_check: t > 0");
  const Real X = integration_end(1 + 1 / t, m);
  auto integrand = [&](const Real& x) -> Cx {
    return Cx(exp(-x / t) * laguerre_phi_values(m, x)[m]);
  };
  const QuadratureResult q = integrate_smooth(integrand, Real(0), X, tol(6), 8 + m);
  const Real rhs = 2 * q.value.re / t;
  return abs(psi_laguerre(m, t) - (m % 2 ? -rhs : rhs));
}

Real laguerre_mellin_check(int m, const Cx& s) {
  if (m < 0) throw DomainError("laguerre_mellin_check: m >= 0");
  const RealFunction f = [m](const Real& x) { return laguerre_phi_values(m, x)[m]; };
  const QuadratureResult q = mellin_quadrature(f, s, 0, tol(8));
  const Cx want = gamma(s) * q_values(m, s)[m];
  const Real d = abs(q.value - want);
  const Real w = abs(want);
  return w < pow(Real(10), -Real(Precision::digits()) / 2) ? d : d / w;
}

BigRational c_coefficient(int m) {
  if (m < 0) throw DomainError("c_coefficient: m >= 0");
  if (m % 2) return BigRational(0);
  const int n = m / 2;
  const BigInt f = factorial(n);
  BigInt den = f * f;
  den <<= m;
  return BigRational(factorial(m), den);
}

namespace {

/// Geometric bound on sum_{n>N} exp(-2 pi n)(1 + 4 pi n)^m; -1 if the
/// terms are still growing at N+1.
Real s_tail_bound(int m, int N) {
  const Real p = pi();
  const Real n1(N + 1);
  const Real ratio = exp(-2 * p) * pow((1 + 4 * p * (n1 + 1)) / (1 + 4 * p * n1), m);
  if (ratio >= 1) return Real(-1);
  return exp(-2 * p * n1) * pow(1 + 4 * p * n1, m) / (1 - ratio);
}

/// Smallest N whose bound for index M is below 10^-(working digits).
int s_terms_for(int M) {
  const Real goal = pow(Real(10), -Real(Precision::working_digits()));
  int N = 1;
  for (;; N = N < 8 ? N + 1 : N + N / 4) {
    const Real b = s_tail_bound(M, N);
    if (b >= 0 && b < goal) break;
  }
  return N;
}

}  // namespace

SigmaTable coeff_tables(int M) {
  if (M < 0) throw DomainError("coeff_tables: M >= 0");
  SigmaTable table;
  table.entries.resize(M + 1);
  const Real p = pi();

  // s_m
  const int Ns = s_terms_for(M);
  table.s_terms = Ns;
  std::vector<CompensatedSum<Real>> s_sum(M + 1);
  for (int n = 1; n <= Ns; ++n) {
    const std::vector<Real> phi = laguerre_phi_values(M, 2 * p * n);
    for (int m = 0; m <= M; ++m) s_sum[m].add(phi[m]);
  }

  // sigma_m: direct part n < N
  const int N = std::max(kTailStart, static_cast<int>(64 * std::sqrt(double(M))));
  table.sigma_terms = N;
  std::vector<CompensatedSum<Real>> sig(M + 1);
  for (int n = 1; n < N; ++n) {
    const Real n2 = Real(n) * n;
    const Real u = (n2 - 1) / (n2 + 1);
    Real w = 2 / (1 + n2);
    for (int m = 0; m <= M; ++m) {
      sig[m].add(w);
      w *= u;
      if (w == 0) break;
    }
  }

  // Taylor data of F(x) = 2/(1+x^2) ((x^2-1)/(x^2+1))^m at x = N
  const int order = 2 * kEulerMaclaurinTerms;
  const Jet x = variable(Real(N), order);
  const Jet x2 = x * x;
  const Jet inv_b = (Jet(order) + Real(1)) / (x2 + Real(1));
  const Jet log_u = log((x2 + Real(-1)) * inv_b);
  const Real phi_end = atan(Real(1) / N);

  for (int m = 0; m <= M; ++m) {
    SigmaEntry& e = table.entries[m];
    e.m = m;
    e.s_m = s_sum[m].value();
    e.s_tail_bound = s_tail_bound(m, Ns);
    if (e.s_tail_bound < 0) e.s_tail_bound = s_tail_bound(M, Ns);

    auto integrand = [m](const Real& phi) -> Cx { return Cx(pow(cos(2 * phi), m)); };
    const QuadratureResult q = integrate_smooth(integrand, Real(0), phi_end,
                                                pow(Real(10), -Real(Precision::working_digits())) *
                                                    phi_end);
    const Jet F = exp(log_u * Real(m)) * inv_b * Real(2);
    const TailSum tail = euler_maclaurin_tail(F, 2 * q.value.re);
    e.sigma_m = sig[m].value() + tail.value;
    e.sigma_error_bound = tail.error + 2 * q.abs_error_estimate;
    e.c_m = to_real(c_coefficient(m));
    e.combo = e.sigma_m - p * e.c_m;
  }
  return table;
}

Real bose_minus_pole(const Real& x) {
  if (!(x > 0)) throw DomainError("bose_minus_pole: x > 0");
  if (x >= 1) return 1 / (exp(x) - 1) - 1 / x;
  // sum_{k>=1} B_k x^(k-1) / k!, converges for |x| < 2 pi
  const Real stop = pow(Real(10), -Real(Precision::working_digits()));
  Real sum = Real(-1) / 2;
  Real xp = x;  // x^(k-1)
  Real fact(2);
  for (int k = 2;; k += 2) {
    const auto& B = bernoulli_numbers(k);
    const Real term = to_real(B[k]) * xp / fact;
    sum += term;
    if (abs(term) < stop * abs(sum)) break;
    xp *= x * x;
    fact *= Real(k + 1) * (k + 2);
    if (k > 4000) throw ConvergenceError("bose_minus_pole: series did not converge", -1, 0);
  }
  return sum;
}

Real f_function(const Real& t) {
  if (!(t > 0)) throw DomainError("f_function: t > 0");
  return bose_minus_pole(2 * pi() * t);
}

Real g_function(const Real& t) {
  if (!(t > 0)) throw DomainError("g_function: t > 0");
  return bose_minus_pole(2 * pi() / t) / t;
}

Real expansion_f_check(const Real& t, const SigmaTable& table) {
  const int M = static_cast<int>(table.entries.size()) - 1;
  const std::vector<Real> psi = psi_laguerre_values(M, t);
  const Real inv = 1 / (2 * pi());
  CompensatedSum<Real> sum;
  for (int m = 0; m <= M; ++m) sum.add((table.entries[m].s_m - (m % 2 ? -inv : inv)) * psi[m]);
  return abs(f_function(t) - sum.value());
}

Real expansion_f_check(const Real& t, int M) { return expansion_f_check(t, coeff_tables(M)); }

Real alternating_reciprocal_check(const Real& t, int M) {
  const std::vector<Real> psi = psi_laguerre_values(M, t);
  CompensatedSum<Real> sum;
  for (int m = 0; m <= M; ++m) sum.add(m % 2 ? -psi[m] : psi[m]);
  return abs(1 / (2 * pi() * t) - sum.value() / (2 * pi()));
}

Real one_over_t_check(const Real& t, int M) {
  const std::vector<Real> psi = psi_laguerre_values(M, t * t);
  CompensatedSum<Real> sum;
  for (int m = 0; m <= M; m += 2) sum.add(to_real(c_coefficient(m)) * psi[m]);
  return abs(1 / t - sum.value());
}

Real poisson_exponential_side(const Real& t) {
  if (!(t > 0)) throw DomainError("poisson_exponential_side: t > 0");
  const Real q = exp(-2 * pi() / t);
  if (!(q < 1)) throw DomainError("poisson_exponential_side: t too large");
  const Real stop = pow(Real(10), -Real(Precision::working_digits()));
  CompensatedSum<Real> sum;
  Real term = q;
  // geometric tail: term * q/(1-q) bounds the rest
  while (term * q / (1 - q) >= stop * abs(sum.value()) || sum.value() == 0) {
    sum.add(term);
    term *= q;
    if (term == 0) break;
  }
  sum.add(term);
  return sum.value() / t - 1 / (2 * pi());
}

Real poisson_rational_side(const Real& t) {
  if (!(t > 0)) throw DomainError("poisson_rational_side: t > 0");
  const int N = kTailStart;
  const Real t2 = t * t;
  CompensatedSum<Real> sum;
  for (int n = 1; n < N; ++n) sum.add(1 / (1 + Real(n) * n * t2));
  const int order = 2 * kEulerMaclaurinTerms;
  const Jet x = variable(Real(N), order);
  const Jet one = Jet(order) + Real(1);
  const Jet F = one / (x * x * t2 + Real(1));
  const TailSum tail = euler_maclaurin_tail(F, atan(1 / (N * t)) / t);
  sum.add(tail.value);
  return sum.value() / pi() - 1 / (2 * t);
}

GCheck expansion_g_check(const Real& t, const SigmaTable& table) {
  GCheck out;
  out.poisson_residual = abs(poisson_exponential_side(t) - poisson_rational_side(t));
  const int M = static_cast<int>(table.entries.size()) - 1;
  const std::vector<Real> psi = psi_laguerre_values(M, t * t);
  CompensatedSum<Real> sum;
  for (int m = 0; m <= M; ++m) {
    const Real v = table.entries[m].combo * psi[m];
    sum.add(m % 2 ? -v : v);
  }
  out.expansion_residual = abs(g_function(t) - sum.value() / (2 * pi()));
  return out;
}

GCheck expansion_g_check(const Real& t, int M) { return expansion_g_check(t, coeff_tables(M)); }

PartialAndReference laguerre_zeta_partial(const Cx& s, const SigmaTable& table) {
  if (!(s.re > 0 && s.re < 1)) throw DomainError("laguerre_zeta_partial: 0 < Re(s) < 1");
  const int M = static_cast<int>(table.entries.size()) - 1;
  const std::vector<Cx> q = q_values(M, s / 2);
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m) sum.add(q[m] * table.entries[m].combo);
  return {sum.value(), zeta_oracle(s)};
}

PartialAndReference laguerre_zeta_partial(const Cx& s, int M) {
  return laguerre_zeta_partial(s, coeff_tables(M));
}

PartialAndReference laguerre_zeta_partial_first(const Cx& s, const SigmaTable& table) {
  if (!(s.re > 0 && s.re < 1)) throw DomainError("laguerre_zeta_partial_first: 0 < Re(s) < 1");
  const int M = static_cast<int>(table.entries.size()) - 1;
  const std::vector<Cx> q = q_values(M, s);
  const Real inv = 1 / (2 * pi());
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m) {
    const Real sm = table.entries[m].s_m;
    sum.add(q[m] * ((m % 2 ? -sm : sm) - inv));
  }
  const Cx pre = pow(2 * pi(), s) * gamma(Cx(1) - s) * 2;
  return {pre * sum.value(), zeta_oracle(s)};
}

Real muntz_check(const Cx& s) {
  if (!(s.re > 0 && s.re < 1)) throw DomainError("muntz_check: 0 < Re(s) < 1");
  const RealFunction f = [](const Real& t) { return g_function(t); };
  const QuadratureResult q = mellin_quadrature(f, s, 0, tol(8));
  const Cx want = zeta_oracle(s) * gamma(s / 2) * gamma(Cx(1) - s / 2) / (2 * pi());
  return abs(q.value - want) / abs(want);
}

AmplitudeReport amplitude_law(const SigmaTable& table, int m_lo, int m_hi, int window) {
  const int half = window / 2;
  if (m_lo - half < 0 || m_hi + window - half - 1 >= static_cast<int>(table.entries.size()))
    throw DomainError("amplitude_law: table too short for the window");
  AmplitudeReport out;
  out.min_ratio = Real(1e300);
  out.max_ratio = 0;
  for (int m = m_lo; m <= m_hi; ++m) {
    Real env(0);
    for (int k = m - half; k < m - half + window; ++k)
      env = std::max<Real>(env, abs(table.entries[k].combo));
    const Real ratio = env / sqrt(pi() / (2 * m));
    out.rows.push_back({m, env, ratio});
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

}  // namespace zetalab
