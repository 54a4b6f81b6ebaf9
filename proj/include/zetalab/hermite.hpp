#ifndef ZETALAB_HERMITE_HPP
#define ZETALAB_HERMITE_HPP

#include "zetalab/numerics.hpp"

#include <vector>

namespace zetalab {

/// Physicists' Hermite polynomial H_m(x) by the three-term recurrence
/// H_{k+1} = 2x H_k - 2k H_{k-1}.
Real hermite_poly(int m, const Real& x);
BigRational hermite_poly_exact(int m, const BigRational& x);

/// r_k(x) = Phi_k(x) / (2^(k/2) sqrt(k!)) for k = 0..kmax, where
/// Phi_k(x) = H_k(sqrt(2 pi) x) exp(-pi x^2).
///
/// The scaled values obey
///   r_{k+1} = y sqrt(2/(k+1)) r_k - sqrt(k/(k+1)) r_{k-1},  y = sqrt(2 pi) x,
/// and stay O(1) inside the oscillatory region (|Phi_2m| <= K 2^m sqrt((2m)!)).
std::vector<Real> scaled_hermite_functions(int kmax, const Real& x);

/// Phi_k(x), unscaled.
Real hermite_function(int k, const Real& x);

/// log|Phi_k(x)|, assembled in log space (never forms Phi_k directly).
Real log_abs_hermite_function(int k, const Real& x);

/// log of 2^(k/2) sqrt(k!).
Real log_hermite_scale(int k);

struct HermiteEval {
  int m = 0;
  Real x;
  /// (2^(-2m)/m!) Phi_2m(x)
  Real phi_norm;
  bool log_scale_used = false;
};

/// (2^(-2m)/m!) Phi_2m(x) from the scaled recurrence times
/// exp(log((2m)!)/2 - log(m!) - m log 2).
HermiteEval phi_norm(int m, const Real& x);

struct LatticeSumResult {
  Real value;
  /// Largest |n| summed.
  int radius = 0;
  /// Bound on the neglected terms |n| > radius.
  Real tail_bound;
};

/// Bound on (2^(-2m)/m!) sum_{|n| > radius} |Phi_2m(n)| derived from
/// |Phi_2m(x)| <= ((2m)!/m!) exp(2x sqrt(2 pi m) - pi x^2), x > 0.
Real lattice_tail_bound(int two_m, int radius);

/// Smallest radius >= ceil(2 sqrt(two_m)) whose tail bound is below
/// 10^-(working digits).
int lattice_radius(int two_m);

/// S_k = (2^(-k)/(k/2)!) sum_{n in Z} Phi_k(n), k = two_m even.
LatticeSumResult lattice_sum_S(int two_m);

/// S_0, S_2, ..., S_{2*max_index}; one recurrence per lattice point
/// serves every index. Entry j holds S_{2j}.
std::vector<LatticeSumResult> lattice_sums_S(int max_index);

/// sum_{n in Z} Phi_k(n) (unnormalized); odd k returns 0 exactly by parity.
LatticeSumResult hermite_lattice_sum(int k);

/// (2^(-2m)/m!) sum_n |Phi_2m(n)|, optionally restricted to |n| >= 2 sqrt(2m).
Real lattice_abs_sum(int m, bool tail_only = false);

/// int_R Phi_k(x) dx by quadrature (0 for odd k).
Real phi_integral(int k);

/// (int Phi_2m - (2m)!/m!) / ((2m)!/m!), the integral by quadrature.
Real phi_integral_identity_check(int m);

/// int_R Phi_k(x)^2 dx / (2^k k!) by quadrature; equals 1/sqrt(2).
Real phi_square_integral_scaled(int k);

}  // namespace zetalab

#endif  // ZETALAB_HERMITE_HPP
