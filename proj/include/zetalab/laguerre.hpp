#ifndef ZETALAB_LAGUERRE_HPP
#define ZETALAB_LAGUERRE_HPP

#include "zetalab/mellin.hpp"

#include <vector>

namespace zetalab {

struct LaguerreEval {
  int m = 0;
  Real x;
  /// exp(-x) L_m(2x)
  Real phi;
};

/// phi_m(x) = exp(-x) L_m(2x) by (k+1) phi_{k+1} = (2k+1-2x) phi_k - k phi_{k-1}.
LaguerreEval laguerre_phi(int m, const Real& x);
std::vector<Real> laguerre_phi_values(int M, const Real& x);

/// |exp(-x(1+u)/(1-u))/(1-u) - sum_{m<=M} phi_m(x) u^m|.
Real laguerre_generating_check(const Real& x, const Real& u, int M);

/// int_0^inf phi_m phi_n dx by quadrature. With y = 2x this is
/// (1/2) int_0^inf e^(-y) L_m(y) L_n(y) dy = delta_mn / 2.
Real laguerre_inner_product(int m, int n);

/// psi_m(t) = ((t-1)/(t+1))^m 2/(1+t), t > 0.
Real psi_laguerre(int m, const Real& t);
BigRational psi_laguerre_exact(int m, const BigRational& t);
std::vector<Real> psi_laguerre_values(int M, const Real& t);

/// |exp(-2 pi x t) - sum_{m<=M} phi_m(2 pi x) psi_m(t)|.
Real eq3_residual(const Real& x, const Real& t, int M);

/// |(1/pi)/(1+x^2 t^2) - (1/2pi) sum_{m<=M} (-1)^m psi_m(x^2) psi_m(t^2)|.
Real eq6_residual(const Real& x, const Real& t, int M);

/// |psi_m(t) - 2 (-1)^m (1/t) int_0^inf exp(-x/t) phi_m(x) dx|.
Real eq5_convolution_check(int m, const Real& t);

/// |int_0^inf phi_m(x) x^(s-1) dx - Gamma(s) q_m(s)| / |Gamma(s) q_m(s)|
/// (absolute below 10^(-P/2)).
Real laguerre_mellin_check(int m, const Cx& s);

/// c_2n = (2n)!/(2^2n (n!)^2), c_2n+1 = 0.
BigRational c_coefficient(int m);

struct SigmaEntry {
  int m = 0;
  Real s_m;
  Real sigma_m;
  Real c_m;
  /// sigma_m - pi c_m
  Real combo;
  Real s_tail_bound;
  Real sigma_error_bound;
};

struct SigmaTable {
  std::vector<SigmaEntry> entries;
  /// Terms summed directly: s_m over n <= s_terms, sigma_m over n < sigma_terms.
  int s_terms = 0;
  int sigma_terms = 0;
};

/// s_m = sum_{n>=1} phi_m(2 pi n), sigma_m = sum_{n>=1} psi_m(n^2), c_m.
/// sigma_m: direct sum below N, then the tail integral
/// 2 int_0^(atan 1/N) cos^m(2 phi) d phi plus Euler-Maclaurin corrections.
SigmaTable coeff_tables(int M);

/// h(x) = 1/(e^x - 1) - 1/x, Bernoulli series for small x.
Real bose_minus_pole(const Real& x);

/// f(t) = 1/(e^(2 pi t) - 1) - 1/(2 pi t) = h(2 pi t).
Real f_function(const Real& t);

/// g(t) = (1/t)/(e^(2 pi/t) - 1) - 1/(2 pi) = h(2 pi/t)/t.
Real g_function(const Real& t);

/// |f(t) - sum_{m<=M} (s_m - (-1)^m/(2 pi)) psi_m(t)|.
Real expansion_f_check(const Real& t, const SigmaTable& table);
Real expansion_f_check(const Real& t, int M);

/// |1/(2 pi t) - (1/2pi) sum_{m<=M} (-1)^m psi_m(t)|.
Real alternating_reciprocal_check(const Real& t, int M);

/// |1/t - sum_{m<=M} c_m psi_m(t^2)|.
Real one_over_t_check(const Real& t, int M);

struct GCheck {
  /// (1/t) sum exp(-2 pi n/t) - 1/(2pi) vs (1/pi) sum 1/(1+n^2 t^2) - 1/(2t)
  Real poisson_residual;
  /// g(t) vs (1/2pi) sum (-1)^m (sigma_m - pi c_m) psi_m(t^2)
  Real expansion_residual;
};
GCheck expansion_g_check(const Real& t, const SigmaTable& table);
GCheck expansion_g_check(const Real& t, int M);

/// (1/t) sum_{n>=1} exp(-2 pi n/t) - 1/(2 pi), summed to its tail bound.
Real poisson_exponential_side(const Real& t);
/// (1/pi) sum_{n>=1} 1/(1+n^2 t^2) - 1/(2t), with an Euler-Maclaurin tail.
Real poisson_rational_side(const Real& t);

/// sum_{m<=M} (sigma_m - pi c_m) q_m(s/2) against zeta(s). Formal.
PartialAndReference laguerre_zeta_partial(const Cx& s, const SigmaTable& table);
PartialAndReference laguerre_zeta_partial(const Cx& s, int M);

/// 2 (2 pi)^s Gamma(1-s) sum_{m<=M} ((-1)^m s_m - 1/(2pi)) q_m(s). Formal.
PartialAndReference laguerre_zeta_partial_first(const Cx& s, const SigmaTable& table);

/// Mellin of g by quadrature vs zeta(s) (1/2pi) Gamma(s/2) Gamma(1-s/2); relative.
Real muntz_check(const Cx& s);

struct AmplitudeRow {
  int m = 0;
  Real envelope;
  Real ratio;
};

struct AmplitudeReport {
  std::vector<AmplitudeRow> rows;
  Real min_ratio;
  Real max_ratio;
};

/// Envelope of |sigma_m - pi c_m| (max over m-4..m+3) over sqrt(pi/(2m)),
/// for m in [m_lo, m_hi].
AmplitudeReport amplitude_law(const SigmaTable& table, int m_lo, int m_hi, int window = 8);

}  // namespace zetalab

#endif  // ZETALAB_LAGUERRE_HPP
