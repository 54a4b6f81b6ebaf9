#ifndef ZETALAB_NUMERICS_HPP
#define ZETALAB_NUMERICS_HPP

#include "zetalab/complex.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/real.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace zetalab {

// ---------------------------------------------------------------------------
// Gamma function
// ---------------------------------------------------------------------------

/// log Gamma(z) on the principal branch (cut along the negative real axis),
/// from the Stirling series after shifting until Re(z) > P/2.
Cx log_gamma(const Cx& z);

/// Gamma(z). Throws PoleError at nonpositive integers.
Cx gamma(const Cx& z);
Real gamma(const Real& x);

/// |Gamma(1/4 + i t/2)|.
Real abs_gamma_quarter_line(const Real& t);

// ---------------------------------------------------------------------------
// Zeta reference oracle
// ---------------------------------------------------------------------------

enum class ZetaMethod {
  /// Alternating (Dirichlet eta) series with Borwein's acceleration.
  eta_series,
  /// Euler-Maclaurin summation; independent cross-check route.
  euler_maclaurin,
};

/// Number of accelerated eta-series terms used for `s` at working precision:
/// n >= (D ln 10 + pi|t|/2 + ln(3(1+2|t|)/|Gamma(s)(1-2^(1-s))|)) / ln(3+sqrt 8)
/// where D is the working precision in digits.
int eta_series_terms(const Cx& s);

/// Reference value of zeta(s) on 0 < Re(s) <= 2, |Im(s)| <= 100.
/// Throws PoleError at s = 1 and PrecisionError outside the validated domain.
/// The eta method falls back to Euler-Maclaurin where 1 - 2^(1-s) is nearly
/// zero (Re(s) = 1, Im(s) = 2 pi k / ln 2).
Cx zeta_oracle(const Cx& s, ZetaMethod method = ZetaMethod::eta_series);

/// Hardy function Z(t) = pi^(-it/2) Gamma(1/4+it/2)/|Gamma(1/4+it/2)| zeta(1/2+it),
/// returned as a complex value (imaginary part ~ 0) so callers can check it.
Cx hardy_z(const Real& t);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadratureResult {
  Cx value;
  Real abs_error_estimate;
  int nodes_used = 0;
};

using RealFunction = std::function<Real(const Real&)>;

/// Integrand on [0,1] receiving the abscissa u and its complement 1 - u,
/// both accurate near either endpoint.
using UnitIntegrand = std::function<Cx(const Real& u, const Real& one_minus_u)>;

/// Tanh-sinh rule on [0,1] with level doubling. `endpoint_margin` is
/// 1 - alpha for the strongest endpoint singularity (1-u)^-alpha or u^-alpha;
/// it fixes the truncation of the transformed abscissa range. The error
/// estimate is the difference between the last two levels.
QuadratureResult tanh_sinh_unit(const UnitIntegrand& f, const Real& target,
                                const Real& endpoint_margin = Real(1),
                                int max_level = 12);

/// Gauss-Legendre nodes and weights on [-1,1] at the working precision
/// (cached per order and precision).
struct GaussLegendreRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};
const GaussLegendreRule& gauss_legendre(int order);

/// Composite Gauss-Legendre on [a,b] with `panels` equal panels.
Cx integrate_panels(const std::function<Cx(const Real&)>& f, const Real& a,
                    const Real& b, int panels, int order = 24);

/// Composite Gauss-Legendre on [a,b], doubling the panel count until two
/// successive values agree to `target`.
QuadratureResult integrate_smooth(const std::function<Cx(const Real&)>& f,
                                  const Real& a, const Real& b,
                                  const Real& target, int initial_panels = 4,
                                  int max_doublings = 9);

/// int_{-T}^{T} f over segments [0,1/2],[1/2,1],[1,2],... mirrored to
/// negative t, each by integrate_smooth. Suited to integrands analytic in a
/// strip whose width grows like |t| (singularities on the imaginary axis).
QuadratureResult integrate_symmetric_geometric(const std::function<Cx(const Real&)>& f,
                                               const Real& T, const Real& target);

/// Mellin transform integral of f along Re(s), for f bounded at 0 and O(1/t)
/// at infinity.
///
/// fold_parity = +1 or -1 requires f(1/t) = fold_parity * t * f(t); the
/// integral is then folded onto [1, inf) as
///     int_1^inf (t^(s-1) + fold_parity t^(-s)) f(t) dt.
/// fold_parity = 0 uses int_1^inf (t^(s-1) f(t) + t^(-s-1) f(1/t)) dt.
/// Either way t = sqrt((1+u)/(1-u)) maps [1, inf) onto [0, 1), and the
/// algebraic endpoint singularity at u = 1 is absorbed by tanh-sinh.
///
/// Throws ConvergenceError if the target (default 10^(5-P)) is not met.
QuadratureResult mellin_quadrature(const RealFunction& f, const Cx& s,
                                   int fold_parity,
                                   std::optional<Real> target = std::nullopt);

}  // namespace zetalab

#endif  // ZETALAB_NUMERICS_HPP
