#include "zetalab/mellin.hpp"

#include <algorithm>

namespace zetalab {

namespace {

Real relative_or_absolute(const Cx& got, const Cx& want) {
  const Real d = abs(got - want);
  const Real w = abs(want);
  const Real floor = pow(Real(10), -Real(Precision::digits()) / 2);
  return w < floor ? d : d / w;
}

void check_strip(const Cx& s, const char* who) {
  if (!(s.re > 0 && s.re < 1)) throw DomainError(std::string(who) + ": 0 < Re(s) < 1 required");
}

/// Mellin target a few digits short of P, so quadrature never chases rounding.
Real mellin_target() { return tol(8); }

}  // namespace

Cx psi_mellin_factor(const Cx& s) {
  return gamma(s / 2) * gamma((Cx(1) - s) / 2) / sqrt(2 * pi());
}

Cx psi_mellin(int m, const Cx& s) { return psi_mellin_factor(s) * Q_values(m, s)[m]; }

Real lemma3_check(int m, const Cx& s) {
  if (m < 0 || m > 12) throw DomainError("lemma3_check: 0 <= m <= 12");
  check_strip(s, "lemma3_check");
  const RealFunction f = [m](const Real& t) { return psi(m, SectorPoint(t)).re; };
  const QuadratureResult q = mellin_quadrature(f, s, m % 2 ? -1 : 1, mellin_target());
  return relative_or_absolute(q.value, psi_mellin(m, s));
}

Real theta_minus_one(const Real& t) {
  if (!(t > 0)) throw DomainError("theta_minus_one: t > 0");
  const Real q = exp(-pi() * t * t);
  const Real q2 = q * q;
  const Real stop = pow(Real(10), -Real(Precision::working_digits()));
  Real term = q, step = q * q2, sum(0);
  while (term > stop * sum || sum == 0) {
    sum += term;
    term *= step;
    step *= q2;
    if (term == 0) break;
  }
  return 2 * sum;
}

Real theta_mellin_anchor(const Cx& s) {
  check_strip(s, "theta_mellin_anchor");
  const RealFunction f = [](const Real& t) { return theta_minus_one(t) - 1 / t; };
  const QuadratureResult q = mellin_quadrature(f, s, 1, mellin_target());
  const Cx want = gamma(s / 2) * pow(pi(), -s / 2) * zeta_oracle(s);
  return relative_or_absolute(q.value, want);
}

std::vector<BigRational> pi_over_sin_coefficients(int M) {
  if (M < 0) throw DomainError("pi_over_sin_coefficients: M >= 0");
  std::vector<BigRational> out;
  BigRational c(1);
  for (int m = 0; m <= M; ++m) {
    out.push_back(c);
    // c_{m+1}/c_m = (4m+1)(4m+2)(4m+3)(4m+4) / (16 (2m+1)(2m+2)^2(2m+3))
    const BigInt num = BigInt(4 * m + 1) * (4 * m + 2) * (4 * m + 3) * (4 * m + 4);
    const BigInt den = BigInt(16) * (2 * m + 1) * (2 * m + 2) * (2 * m + 2) * (2 * m + 3);
    c *= BigRational(num, den);
  }
  return out;
}

PartialAndReference pi_over_sin_expansion(const Cx& s, int M) {
  check_strip(s, "pi_over_sin_expansion");
  const std::vector<BigRational> c = pi_over_sin_coefficients(M);
  const std::vector<Cx> Q = Q_values(2 * M, s);
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m) sum.add(Q[2 * m] * to_real(c[m]));
  PartialAndReference out;
  out.partial = psi_mellin_factor(s) * sum.value() / 2;
  out.reference = Cx(pi()) / sin(s * pi());
  return out;
}

Real term_by_term_check(const Cx& s, int M) {
  check_strip(s, "term_by_term_check");
  if (M < 0 || M > 20) throw DomainError("term_by_term_check: 0 <= M <= 20");
  const ExpansionSeries series = coeffs_one_over_one_plus_t(M);
  const RealFunction f = [&series](const Real& t) {
    return partial_sum(series, SectorPoint(t)).re;
  };
  const QuadratureResult q = mellin_quadrature(f, s, 1, mellin_target());
  const std::vector<Cx> Q = Q_values(2 * M, s);
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m)
    sum.add(Q[2 * m] * to_real(series.exact[m] / BigRational(factorial(2 * m))));
  return relative_or_absolute(q.value, psi_mellin_factor(s) * sum.value());
}

Cx conjecture_prefactor(const Cx& s) {
  return pow(pi(), s / 2) * gamma((Cx(1) - s) / 2) / sqrt(2 * pi());
}

namespace {

Cx alpha_series(const Cx& s, const AlphaTable& table, const Real& r) {
  const int M = static_cast<int>(table.entries.size()) - 1;
  const std::vector<Cx> Q = Q_values(2 * M, s);
  const Real r2 = r * r;
  Real damp(1);
  CompensatedSum<Cx> sum;
  for (int m = 0; m <= M; ++m) {
    sum.add(Q[2 * m] * (table.entries[m].alpha_2m * damp));
    damp *= r2;
  }
  return sum.value();
}

}  // namespace

PartialAndReference zeta_conjecture_partial(const Cx& s, const AlphaTable& table) {
  check_strip(s, "zeta_conjecture_partial");
  PartialAndReference out;
  out.partial = conjecture_prefactor(s) * alpha_series(s, table, Real(1));
  out.reference = zeta_oracle(s);
  return out;
}

PartialAndReference zeta_conjecture_partial(const Cx& s, int M) {
  return zeta_conjecture_partial(s, alpha_table(M));
}

Cx abel_regularized_partial(const Cx& s, const AlphaTable& table, const Real& r) {
  check_strip(s, "abel_regularized_partial");
  if (!(r > 0 && r <= 1)) throw DomainError("abel_regularized_partial: 0 < r <= 1");
  return conjecture_prefactor(s) * alpha_series(s, table, r);
}

Cx abel_regularized_partial(const Cx& s, int M, const Real& r) {
  return abel_regularized_partial(s, alpha_table(M), r);
}

Real conjecture_identity_check(const Cx& s, int M) {
  check_strip(s, "conjecture_identity_check");
  if (M < 0 || M > 20) throw DomainError("conjecture_identity_check: 0 <= M <= 20");
  const AlphaTable table = alpha_table(M);
  const RealFunction f = [&table](const Real& t) {
    return theorem_partial_sum(SectorPoint(t), table).re;
  };
  const QuadratureResult q = mellin_quadrature(f, s, 1, mellin_target());
  const Cx lhs = gamma(s / 2) * pow(pi(), -s / 2) * zeta_conjecture_partial(s, table).partial;
  return relative_or_absolute(lhs, q.value);
}

Real hardy_f2m(int m, const Real& t) {
  if (m < 0 || m > 20) throw DomainError("hardy_f2m: 0 <= m <= 20");
  const Real p2m = critical_line_values(2 * m, t)[2 * m];
  // Q_2m(1/2+it) = i^(2m) p_2m(t)
  return sqrt(sqrt(pi())) * abs_gamma_quarter_line(t) * (m % 2 ? -p2m : p2m);
}

Real hardy_inner_product(int m1, int m2) {
  if (m1 < 0 || m2 < 0 || m1 > 20 || m2 > 20)
    throw DomainError("hardy_inner_product: 0 <= m1, m2 <= 20");
  const Real target = (Precision::digits() + 10) * log(Real(10));
  Real T = 4 * target / pi();
  for (int it = 0; it < 20; ++it) T = 4 * (target + 2 * (m1 + m2) * log(T)) / pi();
  auto integrand = [&](const Real& t) -> Cx { return Cx(hardy_f2m(m1, t) * hardy_f2m(m2, t)); };
  const QuadratureResult q = integrate_symmetric_geometric(integrand, T, tol(5));
  return q.value.re;
}

HardyPoint hardy_point(const Real& t, int M) {
  HardyPoint out;
  out.t = t;
  const Cx z = hardy_z(t);
  if (abs(z.im) > tol(2) * (1 + abs(z.re)))
    throw PrecisionError("hardy_point: Z(t) not real to working accuracy");
  out.Z_ref = z.re;
  for (int m = 0; m <= M; ++m) out.f2m_values.push_back(hardy_f2m(m, t));
  return out;
}

std::vector<Cx> default_conjecture_grid() {
  std::vector<Cx> out;
  for (const char* re : {"0.25", "0.5", "0.75"})
    for (const char* im : {"0", "3", "14.1347251417"}) out.emplace_back(to_real(re), to_real(im));
  return out;
}

std::vector<int> doubling_orders(int max_m) {
  if (max_m < 1) throw DomainError("doubling_orders: max_m >= 1");
  std::vector<int> out;
  for (int m = 1; m <= max_m; m *= 2) out.push_back(m);
  if (out.back() != max_m) out.push_back(max_m);
  return out;
}

ResidualReport conjecture_report(const std::vector<Cx>& points, const std::vector<int>& orders,
                                 std::optional<Real> abel_r) {
  const int max_m = orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end());
  const AlphaTable full = alpha_table(max_m);
  ResidualReport report;
  std::vector<Cx> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const Cx& a, const Cx& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  std::vector<int> Ms = orders;
  std::sort(Ms.begin(), Ms.end());
  for (const Cx& s : sorted) {
    const Cx ref = zeta_oracle(s);
    for (int M : Ms) {
      AlphaTable t;
      t.entries.assign(full.entries.begin(), full.entries.begin() + M + 1);
      ResidualRecord r;
      r.point = s;
      r.M = M;
      r.partial = abel_r ? abel_regularized_partial(s, t, *abel_r)
                         : zeta_conjecture_partial(s, t).partial;
      r.reference = ref;
      r.residual = abs(r.partial - ref);
      report.records.push_back(std::move(r));
    }
  }
  report.meta["precision"] = std::to_string(Precision::digits());
  report.meta["summation"] = abel_r ? "abel" : "plain";
  if (abel_r) report.meta["abel_r"] = to_string(*abel_r, Precision::digits());
  return report;
}

}  // namespace zetalab
