#include "zetalab/qpoly.hpp"

#include <algorithm>

namespace zetalab {

namespace {

using Coeffs = std::vector<BigRational>;

void add_scaled(Coeffs& acc, const Coeffs& p, const BigRational& c) {
  if (acc.size() < p.size()) acc.resize(p.size(), BigRational(0));
  for (size_t j = 0; j < p.size(); ++j) acc[j] += c * p[j];
}

/// p(s) * (a s + b)
Coeffs times_linear(const Coeffs& p, const BigRational& a, const BigRational& b) {
  Coeffs out(p.size() + 1, BigRational(0));
  for (size_t j = 0; j < p.size(); ++j) {
    out[j] += b * p[j];
    out[j + 1] += a * p[j];
  }
  return out;
}

void trim(Coeffs& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

BigRationalPoly make(Coeffs c, PolyFamily f, int m) {
  trim(c);
  BigRationalPoly p;
  p.coeffs = std::move(c);
  p.family = f;
  p.index_m = m;
  return p;
}

BigRational falling(int m, int k) {
  return BigRational(factorial(m), factorial(m - k));
}

}  // namespace

BigRationalPoly build_Q(int m) {
  if (m < 0) throw DomainError("build_Q: m >= 0");
  Coeffs acc(1, BigRational(0));
  Coeffs prod(1, BigRational(1));  // s(s+2)...(s+2(k-1))
  for (int k = 0; k <= m; ++k) {
    BigInt pow4(1);
    pow4 <<= 2 * k;
    BigRational c = falling(m, k) * BigRational(pow4, factorial(2 * k));
    if ((m - k) % 2) c = -c;
    add_scaled(acc, prod, c);
    prod = times_linear(prod, BigRational(1), BigRational(2 * k));
  }
  return make(std::move(acc), PolyFamily::Q, m);
}

BigRationalPoly build_Q_hypergeometric(int m) {
  if (m < 0) throw DomainError("build_Q_hypergeometric: m >= 0");
  Coeffs acc(1, BigRational(0));
  Coeffs poch(1, BigRational(1));  // (s/2)_k
  BigRational scalar(1);           // (-m)_k 2^k / ((1/2)_k k!)
  for (int k = 0; k <= m; ++k) {
    add_scaled(acc, poch, scalar);
    poch = times_linear(poch, BigRational(1, 2), BigRational(k));
    scalar *= BigRational(-m + k) * 2 / (BigRational(2 * k + 1, 2) * (k + 1));
  }
  if (m % 2)
    for (auto& c : acc) c = -c;
  return make(std::move(acc), PolyFamily::Q, m);
}

std::vector<BigRationalPoly> build_Q_family(int M) {
  if (M < 0) throw DomainError("build_Q_family: M >= 0");
  std::vector<BigRationalPoly> out;
  out.push_back(make({BigRational(1)}, PolyFamily::Q, 0));
  if (M == 0) return out;
  out.push_back(make({BigRational(-1), BigRational(2)}, PolyFamily::Q, 1));
  for (int m = 1; m < M; ++m) {
    const BigRational inv = BigRational(2, 2 * m + 1);
    Coeffs next = times_linear(out[m].coeffs, inv, -inv / 2);
    add_scaled(next, out[m - 1].coeffs, m * inv);
    out.push_back(make(std::move(next), PolyFamily::Q, m + 1));
  }
  return out;
}

BigRationalPoly build_q(int m) {
  if (m < 0) throw DomainError("build_q: m >= 0");
  Coeffs acc(1, BigRational(0));
  Coeffs poch(1, BigRational(1));  // (s)_k
  BigRational scalar(1);           // (-m)_k 2^k / (k!)^2
  for (int k = 0; k <= m; ++k) {
    add_scaled(acc, poch, scalar);
    poch = times_linear(poch, BigRational(1), BigRational(k));
    scalar *= BigRational(2 * (k - m), (k + 1) * (k + 1));
  }
  return make(std::move(acc), PolyFamily::q, m);
}

std::vector<BigRationalPoly> build_q_family(int M) {
  if (M < 0) throw DomainError("build_q_family: M >= 0");
  std::vector<BigRationalPoly> out;
  out.push_back(make({BigRational(1)}, PolyFamily::q, 0));
  if (M == 0) return out;
  out.push_back(make({BigRational(1), BigRational(-2)}, PolyFamily::q, 1));
  for (int m = 1; m < M; ++m) {
    const BigRational inv(1, m + 1);
    Coeffs next = times_linear(out[m].coeffs, -2 * inv, inv);
    add_scaled(next, out[m - 1].coeffs, m * inv);
    out.push_back(make(std::move(next), PolyFamily::q, m + 1));
  }
  return out;
}

BigRational evaluate(const BigRationalPoly& p, const BigRational& s) {
  BigRational acc(0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Cx evaluate(const BigRationalPoly& p, const Cx& s) {
  Cx acc(0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * s + Cx(to_real(*it));
  return acc;
}

std::vector<BigRational> taylor_shift(const std::vector<BigRational>& c, const BigRational& a) {
  Coeffs d = c;
  const int n = static_cast<int>(d.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) d[j] += a * d[j + 1];
  return d;
}

BigRationalPoly reflect(const BigRationalPoly& p) {
  // P(1 - s): shift to P(1 + y), then y -> -s.
  Coeffs d = taylor_shift(p.coeffs, BigRational(1));
  for (size_t j = 1; j < d.size(); j += 2) d[j] = -d[j];
  return make(std::move(d), p.family, p.index_m);
}

bool functional_equation_check(int m) {
  const BigRationalPoly q = build_Q(m);
  const BigRationalPoly r = reflect(q);
  const bool odd = m % 2;
  if (r.coeffs.size() != q.coeffs.size())
    throw FunctionalEquationViolation("Q_m(1-s): degree mismatch");
  for (size_t j = 0; j < q.coeffs.size(); ++j) {
    if (r.coeffs[j] != (odd ? -q.coeffs[j] : q.coeffs[j]))
      throw FunctionalEquationViolation("Q_m(1-s) != (-1)^m Q_m(s) at m = " + std::to_string(m));
  }
  return true;
}

CriticalLinePoly critical_line_polynomial(const BigRationalPoly& p) {
  const Coeffs d = taylor_shift(p.coeffs, BigRational(1, 2));
  bool even_zero = true, odd_zero = true;
  for (size_t j = 0; j < d.size(); ++j) {
    if (d[j] == 0) continue;
    (j % 2 ? odd_zero : even_zero) = false;
  }
  if (!even_zero && !odd_zero)
    throw FunctionalEquationViolation("critical line substitution has mixed parity");
  CriticalLinePoly out;
  out.times_i = even_zero && !odd_zero;
  out.coeffs.assign(d.size(), BigRational(0));
  // (iy)^j: even j -> (-1)^(j/2); odd j -> i (-1)^((j-1)/2)
  for (size_t j = 0; j < d.size(); ++j) {
    const size_t half = j / 2;
    out.coeffs[j] = half % 2 ? -d[j] : d[j];
  }
  trim(out.coeffs);
  return out;
}

RootSet critical_line_roots(int m) {
  if (m < 0 || m > 60) throw DomainError("critical_line_roots: 0 <= m <= 60");
  return real_polynomial_roots(critical_line_polynomial(build_Q(m)).coeffs);
}

SmallQRoots small_q_roots(int m) {
  if (m < 1 || m > 60) throw DomainError("small_q_roots: 1 <= m <= 60");
  SmallQRoots out;
  out.roots = complex_polynomial_roots(build_q(m).coeffs);
  out.max_offset_from_half = 0;
  for (const Cx& r : out.roots.roots) {
    const Real off = abs(r.re - Real(1) / 2);
    if (off > out.max_offset_from_half) out.max_offset_from_half = off;
  }
  return out;
}

bool interlacing_check(int m) {
  if (m < 0 || m % 2 || m + 2 > 60) throw DomainError("interlacing_check: even m <= 58");
  const RootSet a = critical_line_roots(m);
  const RootSet b = critical_line_roots(m + 2);
  if (!a.all_real_confirmed || !b.all_real_confirmed) return false;
  if (b.roots_t.size() != a.roots_t.size() + 2) return false;
  // p_m(t) = r(t^2) with r orthogonal on [0, inf): the positive roots
  // interlace as b_0 < a_0 < b_1 < ... < a_{n-1} < b_n.
  std::vector<Real> pa, pb;
  for (const Real& t : a.roots_t)
    if (t > 0) pa.push_back(t);
  for (const Real& t : b.roots_t)
    if (t > 0) pb.push_back(t);
  if (pb.size() != pa.size() + 1) return false;
  for (size_t i = 0; i < pa.size(); ++i) {
    if (!(pb[i] < pa[i] && pa[i] < pb[i + 1])) return false;
  }
  return true;
}

std::vector<Cx> Q_values(int M, const Cx& s) {
  std::vector<Cx> out(M + 1);
  out[0] = Cx(1);
  if (M == 0) return out;
  const Cx shift = s - Cx(Real(1) / 2);
  out[1] = shift * 2;
  for (int m = 1; m < M; ++m)
    out[m + 1] = (shift * out[m] + out[m - 1] * m) / (Real(2 * m + 1) / 2);
  return out;
}

std::vector<Real> critical_line_values(int M, const Real& t) {
  std::vector<Real> out(M + 1);
  out[0] = 1;
  if (M == 0) return out;
  out[1] = 2 * t;
  for (int m = 1; m < M; ++m) out[m + 1] = (t * out[m] - m * out[m - 1]) * 2 / (2 * m + 1);
  return out;
}

std::vector<Cx> q_values(int M, const Cx& s) {
  std::vector<Cx> out(M + 1);
  out[0] = Cx(1);
  if (M == 0) return out;
  const Cx lin = Cx(1) - s * 2;
  out[1] = lin;
  for (int m = 1; m < M; ++m) out[m + 1] = (lin * out[m] + out[m - 1] * m) / (m + 1);
  return out;
}

Real parseval_orthogonality_check(int m1, int m2) {
  if (m1 < 0 || m2 < 0 || m1 > 8 || m2 > 8)
    throw DomainError("parseval_orthogonality_check: 0 <= m1, m2 <= 8");
  const int M = std::max(m1, m2);
  const Real p = pi();
  // T* with exp(-pi T/2) T^(m1+m2) below 10^-(P+10)
  const Real target = (Precision::digits() + 10) * log(Real(10));
  Real T = 2 * target / p;
  for (int it = 0; it < 20; ++it) T = 2 * (target + (m1 + m2) * log(T)) / p;
  const Real f1 = to_real(factorial(m1)), f2 = to_real(factorial(m2));
  auto integrand = [&](const Real& t) -> Cx {
    const std::vector<Real> v = critical_line_values(M, t);
    const Real g = abs_gamma_quarter_line(t);
    // i^m1 conj(i^m2) = i^(m1-m2)
    Cx unit(1);
    for (int k = 0; k < ((m1 - m2) % 4 + 4) % 4; ++k) unit *= Cx(Real(0), Real(1));
    return unit * (g * g * v[m1] * v[m2] / (f1 * f2));
  };
  const Real tol_q = tol(5);
  // The weight's poles sit on the imaginary axis.
  const QuadratureResult q = integrate_symmetric_geometric(integrand, T, tol_q);
  if (q.abs_error_estimate > tol_q * 100)
    throw ConvergenceError("parseval_orthogonality_check: quadrature did not converge", M, 0);
  const Cx lhs = q.value / (4 * p * sqrt(p));
  Real rhs(0);
  if (m1 == m2) {
    BigInt pw(1);
    pw <<= 2 * m1;
    rhs = to_real(BigRational(pw, factorial(2 * m1))) / sqrt(Real(2));
  }
  return abs(lhs - Cx(rhs));
}

}  // namespace zetalab
