#ifndef ZETALAB_MELLIN_HPP
#define ZETALAB_MELLIN_HPP

#include "zetalab/psi_basis.hpp"
#include "zetalab/qpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetalab {

/// (1/sqrt(2 pi)) Gamma(s/2) Gamma((1-s)/2), the Mellin image factor of Psi_m.
Cx psi_mellin_factor(const Cx& s);

/// Closed-form Mellin transform of Psi_m: psi_mellin_factor(s) Q_m(s).
Cx psi_mellin(int m, const Cx& s);

/// Quadrature vs closed form for int_0^inf t^(s-1) Psi_m(t) dt; relative
/// error, or absolute when the closed form is below 10^(-P/2).
Real lemma3_check(int m, const Cx& s);

/// int_0^inf t^(s-1) (G(t) - 1 - 1/t) dt by quadrature vs
/// Gamma(s/2) pi^(-s/2) zeta(s); relative error.
Real theta_mellin_anchor(const Cx& s);

/// G(t) - 1 for real t > 0, summed as 2 sum_{n>=1} exp(-pi n^2 t^2).
Real theta_minus_one(const Real& t);

struct PartialAndReference {
  Cx partial;
  Cx reference;
};

/// (4m)!/((2m)!(2m+1)! 2^4m), exact, m = 0..M.
std::vector<BigRational> pi_over_sin_coefficients(int M);

/// (1/(2 sqrt(2 pi))) Gamma(s/2) Gamma((1-s)/2) sum_{m<=M} c_m Q_2m(s)
/// against pi / sin(pi s).
PartialAndReference pi_over_sin_expansion(const Cx& s, int M);

/// |Mellin(quadrature) of the 1/(1+t) partial sum - sum of closed-form
/// Mellin terms|, relative.
Real term_by_term_check(const Cx& s, int M);

/// (1/sqrt(2 pi)) pi^(s/2) Gamma((1-s)/2).
Cx conjecture_prefactor(const Cx& s);

/// prefactor * sum_{m<=M} alpha_2m Q_2m(s), against zeta(s). No convergence
/// is asserted.
PartialAndReference zeta_conjecture_partial(const Cx& s, int M);
PartialAndReference zeta_conjecture_partial(const Cx& s, const AlphaTable& table);

/// prefactor * sum_{m<=M} alpha_2m r^(2m) Q_2m(s); exploratory.
Cx abel_regularized_partial(const Cx& s, int M, const Real& r);
Cx abel_regularized_partial(const Cx& s, const AlphaTable& table, const Real& r);

/// |Gamma(s/2) pi^(-s/2) conjecture_partial(s, M) - Mellin(quadrature) of
/// sum_{m<=M} alpha_2m Psi_2m| relative to the latter.
Real conjecture_identity_check(const Cx& s, int M);

/// f_2m(t) = pi^(1/4) |Gamma(1/4+it/2)| Q_2m(1/2+it), real.
Real hardy_f2m(int m, const Real& t);

/// int_R f_2m1 f_2m2 dt by quadrature.
Real hardy_inner_product(int m1, int m2);

struct HardyPoint {
  Real t;
  Real Z_ref;
  std::vector<Real> f2m_values;
};

/// Z(t) from the zeta oracle and the Gamma phase, plus f_0..f_2M at t.
HardyPoint hardy_point(const Real& t, int M);

struct ResidualRecord {
  Cx point;
  int M = 0;
  Cx partial;
  Cx reference;
  Real residual;
};

struct ResidualReport {
  std::vector<ResidualRecord> records;
  std::map<std::string, std::string> meta;
};

/// Default exploration grid: {0.25, 0.5, 0.75} x {0, 3i, 14.1347251417i}.
std::vector<Cx> default_conjecture_grid();

/// M = 1, 2, 4, ..., max_m.
std::vector<int> doubling_orders(int max_m);

/// Residual curves over points x orders; Abel-damped when r is given.
ResidualReport conjecture_report(const std::vector<Cx>& points, const std::vector<int>& orders,
                                 std::optional<Real> abel_r = std::nullopt);

}  // namespace zetalab

#endif  // ZETALAB_MELLIN_HPP
