#ifndef ZETALAB_LATTICE2D_HPP
#define ZETALAB_LATTICE2D_HPP

#include "zetalab/hermite.hpp"

#include <vector>

namespace zetalab {

struct TEntry {
  int m = 0;
  Cx T;
  int radius = 0;
  /// Truncation bound plus the rounding bound of the summation.
  Real tail_bound;
};

struct TTable {
  std::vector<TEntry> entries;
};

/// Bound on sum over max(|k|,|l|) > R of exp(-pi(k^2+l^2)/2) |k+il|^m.
Real lattice2d_truncation_bound(int m, int R);

/// Smallest R whose truncation bound for index m is below 10^-(working digits).
int lattice2d_radius(int m);

/// T_m = sum_{(k,l)} (-1)^(kl) exp(-pi(k^2+l^2)/2) (k+il)^m over the full
/// square |k|,|l| <= R (no symmetry folding), m <= 200.
TEntry compute_T(int m);

/// T_0..T_M from one pass over the lattice (radius fixed by M).
TTable t_table(int M);

/// Relative difference of sum_n Phi_4m(n) and (2 pi)^2m T_4m / (S_0 sqrt 2),
/// with S_0 from the theta function. m <= 5.
Real appendix_identity_check(int m);

/// |S_4m - (2^(-4m)/(2m)!) (2 pi)^2m T_4m / (S_0 sqrt 2)|.
Real s4m_reconstruction_check(int m);

/// |sum_n exp(-pi n^2 + 2 pi n u - pi u^2/2)
///   - (1/(S_0 sqrt 2)) sum (-1)^(kl) exp(-pi(k^2+l^2)/2) exp(i pi u (k+il))|, |u| <= 2.
Real poisson_relation_check(const Cx& u);

/// Left and right sides separately.
Cx poisson_left(const Cx& u);
Cx poisson_right(const Cx& u);

/// |exp(-pi n^2 + 2 pi n u - pi u^2/2) - sum_{m<=M} (pi/2)^(m/2) Phi_m(n) u^m/m!|;
/// M = 0 picks the order from the working precision. |u| < 1.
Real hermite_generating_check(const Real& u, int n, int M = 0);

/// Term-wise exact checks on the window |k|,|l| <= R: (k,l) -> (-k,-l) negates
/// the (k+il)^(2j+1) terms, (k,l) -> (l,-k) negates the (k+il)^(4j+2) terms,
/// for all powers up to max_power.
bool symmetry_check(int R, int max_power);

}  // namespace zetalab

#endif  // ZETALAB_LATTICE2D_HPP
