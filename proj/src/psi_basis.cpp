#include "zetalab/psi_basis.hpp"

#include <cmath>

namespace zetalab {

namespace {

Real sector_margin() { return pow(Real(10), -Real(Precision::digits()) / 2); }

}  // namespace

bool SectorPoint::contains(const Cx& t) {
  if (t.re <= 0) return false;
  const Real quarter = pi() / 4 - sector_margin();
  return abs(arg(t)) < quarter;
}

SectorPoint::SectorPoint(const Cx& t) : t_(t) {
  if (!contains(t)) throw DomainError("SectorPoint: t outside |arg t| < pi/4");
}

Cx disk_variable(const SectorPoint& t) {
  const Cx t2 = t.t() * t.t();
  return (t2 - 1) / (t2 + 1);
}

Cx psi(int m, const SectorPoint& t) {
  if (m < 0) throw DomainError("psi: m >= 0");
  const Cx t2 = t.t() * t.t();
  const Cx u = (t2 - 1) / (t2 + 1);
  return sqrt(Real(2)) * pow(u, static_cast<unsigned>(m)) / sqrt(t2 + 1);
}

std::vector<Cx> psi_values(int M, const SectorPoint& t) {
  if (M < 0) throw DomainError("psi_values: M >= 0");
  const Cx t2 = t.t() * t.t();
  const Cx u = (t2 - 1) / (t2 + 1);
  std::vector<Cx> out(M + 1);
  out[0] = sqrt(Real(2)) / sqrt(t2 + 1);
  for (int m = 1; m <= M; ++m) out[m] = out[m - 1] * u;
  return out;
}

Cx t_transform(const SectorFunction& f, const Cx& u) {
  if (abs(u) >= 1) throw DomainError("t_transform: |u| < 1 required");
  const Cx one_minus = Cx(1) - u;
  const SectorPoint t(sqrt((Cx(1) + u) / one_minus));
  return f(t) / sqrt(one_minus);
}

int theta_terms(const Cx& t) {
  const Real re_t2 = t.re * t.re - t.im * t.im;
  if (re_t2 <= 0) throw DomainError("theta: Re(t^2) > 0 required");
  const Real n = sqrt(Real(Precision::working_digits()) * log(Real(10)) / (pi() * re_t2));
  return static_cast<int>(ceil(n)) + 2;
}

Cx theta(const SectorPoint& t) {
  const Cx t2 = t.t() * t.t();
  const int N = theta_terms(t.t());
  // q^(n^2) by q^((n+1)^2) = q^(n^2) q^(2n+1)
  const Cx q = exp(-pi() * t2);
  const Cx q2 = q * q;
  Cx term = q, step = q * q2;
  CompensatedSum<Cx> sum;
  for (int n = 1; n <= N; ++n) {
    sum.add(term);
    term *= step;
    step *= q2;
  }
  return Cx(1) + sum.value() * Real(2);
}

const char* to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::psi_even: return "PSI_EVEN";
    case BasisTag::psi_all: return "PSI_ALL";
    case BasisTag::laguerre_psi: return "LAGUERRE_PSI";
    case BasisTag::q_poly: return "Q_POLY";
    case BasisTag::small_q_poly: return "q_POLY";
  }
  return "?";
}

namespace {

ExpansionSeries even_series(int M, const BigRational& scale, bool odd_denominator,
                            const char* provenance) {
  if (M < 0) throw DomainError("expansion: M >= 0");
  ExpansionSeries out;
  out.basis_tag = BasisTag::psi_even;
  out.M = M;
  out.provenance = provenance;
  for (int m = 0; m <= M; ++m) {
    BigInt den = factorial(2 * m + (odd_denominator ? 1 : 0));
    den <<= 4 * m;
    const BigRational c = scale * BigRational(factorial(4 * m), den);
    out.exact.push_back(c);
    out.coeffs.push_back(to_real(c));
  }
  return out;
}

}  // namespace

ExpansionSeries coeffs_one_over_one_plus_t(int M) {
  return even_series(M, BigRational(1, 2), true, "1/(1+t), exact rational");
}

ExpansionSeries coeffs_one_plus_one_over_t(int M) {
  return even_series(M, BigRational(2), false, "1+1/t, exact rational");
}

Cx partial_sum(const ExpansionSeries& series, const SectorPoint& t) {
  const bool even = series.basis_tag == BasisTag::psi_even;
  if (!even && series.basis_tag != BasisTag::psi_all)
    throw DomainError("partial_sum: psi_even or psi_all series required");
  const int M = static_cast<int>(series.coeffs.size()) - 1;
  const std::vector<Cx> p = psi_values(even ? 2 * M : M, t);
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m) {
    const int k = even ? 2 * m : m;
    const Real w = series.exact.empty()
                       ? series.coeffs[m] / to_real(factorial(k))
                       : to_real(series.exact[m] / BigRational(factorial(k)));
    sum.add(p[k] * w);
  }
  return sum.value();
}

BigRational alpha_binom_term(int m) {
  if (m < 0) throw DomainError("alpha_binom_term: m >= 0");
  const BigInt f = factorial(2 * m);
  BigInt den = f * f;
  den <<= 4 * m;
  return BigRational(2 * factorial(4 * m), den);
}

AlphaTable alpha_table(int M) {
  if (M < 0) throw DomainError("alpha_table: M >= 0");
  const std::vector<LatticeSumResult> S = lattice_sums_S(2 * M);
  const Real u = pow(Real(10), -Real(Precision::working_digits()));
  AlphaTable out;
  for (int m = 0; m <= M; ++m) {
    AlphaEntry e;
    e.m = m;
    e.S_4m = S[2 * m].value;
    e.binom_term = to_real(alpha_binom_term(m));
    e.alpha_2m = e.S_4m - e.binom_term;
    e.tail_bound = S[2 * m].tail_bound + 4 * u * (abs(e.S_4m) + abs(e.binom_term));
    out.entries.push_back(std::move(e));
  }
  return out;
}

namespace {

template <class Pick>
Cx table_sum(const SectorPoint& t, const AlphaTable& table, Pick pick) {
  const int M = static_cast<int>(table.entries.size()) - 1;
  const std::vector<Cx> p = psi_values(2 * M, t);
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m) sum.add(p[2 * m] * pick(table.entries[m]));
  return sum.value();
}

}  // namespace

Cx theorem_partial_sum(const SectorPoint& t, const AlphaTable& table) {
  return table_sum(t, table, [](const AlphaEntry& e) -> const Real& { return e.alpha_2m; });
}

Cx theorem_partial_sum(const SectorPoint& t, int M) {
  return theorem_partial_sum(t, alpha_table(M));
}

Cx lemma2_partial_sum(const SectorPoint& t, const AlphaTable& table) {
  return table_sum(t, table, [](const AlphaEntry& e) -> const Real& { return e.S_4m; });
}

Cx lemma2_partial_sum(const SectorPoint& t, int M) {
  return lemma2_partial_sum(t, alpha_table(M));
}

Real lemma1_convolution_check(int m, const Real& t) {
  if (m < 0 || m > 20) throw DomainError("lemma1_convolution_check: 0 <= m <= 20");
  if (t <= 0) throw DomainError("lemma1_convolution_check: t > 0");
  const int k = 2 * m;
  const Real p = pi();
  const Real x_end = sqrt(Real(2 * k + 1) / (2 * p)) +
                     sqrt(Real(Precision::working_digits() + 5) * log(Real(10)) / p) + 1;
  const Real inv_t2 = 1 / (t * t);
  auto integrand = [&](const Real& x) -> Cx {
    return Cx(exp(-p * x * x * inv_t2) * scaled_hermite_functions(k, x)[k]);
  };
  const Real scale = exp(log_hermite_scale(k) - lgamma(Real(k + 1)));
  const QuadratureResult q = integrate_smooth(integrand, Real(0), x_end, tol(6) * t / scale,
                                              4 + m);
  if (q.abs_error_estimate * scale / t > tol(5))
    throw ConvergenceError("lemma1_convolution_check: quadrature did not converge", m, 5);
  const Real rhs = 2 * sqrt(Real(2)) * q.value.re * scale / t;
  const Real lhs = psi(m, SectorPoint(t)).re / to_real(factorial(m));
  return abs(lhs - rhs);
}

Real eq1_residual(const Real& x, const SectorPoint& t, int M) {
  if (M < 0) throw DomainError("eq1_residual: M >= 0");
  const std::vector<Cx> p = psi_values(M, t);
  const std::vector<Real> r = scaled_hermite_functions(2 * M, x);
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m) {
    const Real log_norm = log_hermite_scale(2 * m) - 2 * m * ln2() - lgamma(Real(m + 1));
    const Real w = r[2 * m] * exp(log_norm);
    sum.add(p[m] * (m % 2 ? -w : w));
  }
  return abs(exp(-pi() * x * x * t.t() * t.t()) - sum.value());
}

Real lemma2_absolute_majorant(const SectorPoint& t, int M) {
  if (M < 0) throw DomainError("lemma2_absolute_majorant: M >= 0");
  const std::vector<Cx> p = psi_values(M, t);
  CompensatedSum<Real> sum;
  for (int m = 0; m <= M; ++m) sum.add(lattice_abs_sum(m) * abs(p[m]));
  return sum.value();
}

Real remark_alpha_check(int m) {
  if (m < 0 || m > 25) throw DomainError("remark_alpha_check: 0 <= m <= 25");
  const int k = 4 * m;
  const Real norm = exp(-k * ln2() - lgamma(Real(2 * m + 1)));
  const LatticeSumResult lattice = hermite_lattice_sum(k);
  const Real remark = norm * (lattice.value - hermite_function(k, Real(0)) - phi_integral(k));
  const Real alpha = lattice_sum_S(k).value - to_real(alpha_binom_term(m));
  return abs(alpha - remark);
}

}  // namespace zetalab
