#ifndef ZETALAB_PSI_BASIS_HPP
#define ZETALAB_PSI_BASIS_HPP

#include "zetalab/hermite.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetalab {

/// A point of the sector |arg t| < pi/4, t != 0. Construction fails within
/// 10^(-P/2) of the boundary rays.
class SectorPoint {
 public:
  explicit SectorPoint(const Cx& t);
  SectorPoint(const Real& t) : SectorPoint(Cx(t)) {}

  const Cx& t() const { return t_; }
  static bool contains(const Cx& t);

 private:
  Cx t_;
};

/// u(t) = (t^2 - 1)/(t^2 + 1); maps the sector onto the unit disk.
Cx disk_variable(const SectorPoint& t);

/// Psi_m(t) = sqrt 2 u(t)^m / sqrt(1 + t^2), principal root.
Cx psi(int m, const SectorPoint& t);

/// Psi_0..Psi_M at one point.
std::vector<Cx> psi_values(int M, const SectorPoint& t);

using SectorFunction = std::function<Cx(const SectorPoint&)>;

/// (Tf)(u) = f(sqrt((1+u)/(1-u))) / sqrt(1-u), |u| < 1.
Cx t_transform(const SectorFunction& f, const Cx& u);

/// G(t) = sum_n exp(-pi n^2 t^2).
Cx theta(const SectorPoint& t);

/// Number of positive n summed by theta().
int theta_terms(const Cx& t);

enum class BasisTag { psi_even, psi_all, laguerre_psi, q_poly, small_q_poly };

const char* to_string(BasisTag tag);

/// f(t) = sum_m coeffs[m] B_m(t) / m!, with B_m = Psi_2m and divisor (2m)!
/// for psi_even, B_m = Psi_m for psi_all.
struct ExpansionSeries {
  BasisTag basis_tag = BasisTag::psi_even;
  std::vector<Real> coeffs;
  /// Exact coefficients where available (same indexing as coeffs).
  std::vector<BigRational> exact;
  int M = 0;
  std::string provenance;
};

/// 1/(1+t) = (1/2) sum (4m)!/(2^4m (2m+1)!) Psi_2m(t)/(2m)!.
ExpansionSeries coeffs_one_over_one_plus_t(int M);

/// 1 + 1/t = 2 sum (4m)!/(2^4m (2m)!) Psi_2m(t)/(2m)!.
ExpansionSeries coeffs_one_plus_one_over_t(int M);

/// Partial sum of a psi_even or psi_all series, ascending m, compensated.
Cx partial_sum(const ExpansionSeries& series, const SectorPoint& t);

struct AlphaEntry {
  int m = 0;
  Real S_4m;
  Real binom_term;
  Real alpha_2m;
  /// Lattice truncation plus the rounding budget of S_4m - binom_term.
  Real tail_bound;
};

struct AlphaTable {
  std::vector<AlphaEntry> entries;
};

/// 2^(1-4m) (4m)! / ((2m)!)^2, exact.
BigRational alpha_binom_term(int m);

/// alpha_2m = S_4m - 2^(1-4m)(4m)!/((2m)!)^2 for m = 0..M.
AlphaTable alpha_table(int M);

/// sum_{m<=M} alpha_2m Psi_2m(t).
Cx theorem_partial_sum(const SectorPoint& t, int M);
Cx theorem_partial_sum(const SectorPoint& t, const AlphaTable& table);

/// sum_{m<=M} S_4m Psi_2m(t); tends to G(t).
Cx lemma2_partial_sum(const SectorPoint& t, int M);
Cx lemma2_partial_sum(const SectorPoint& t, const AlphaTable& table);

/// |Psi_m(t)/m! - 2 sqrt 2 int_0^inf exp(-pi x^2/t^2) (1/t) Phi_2m(x)/(2m)! dx|.
Real lemma1_convolution_check(int m, const Real& t);

/// |exp(-pi x^2 t^2) - sum_{m<=M} (-1)^m 2^(-2m) Phi_2m(x) Psi_m(t)/m!|.
Real eq1_residual(const Real& x, const SectorPoint& t, int M);

/// sum_{m<=M} (2^(-2m)/m!) sum_n |Phi_2m(n)| |Psi_m(t)|.
Real lemma2_absolute_majorant(const SectorPoint& t, int M);

/// |alpha_2m - (2^(-4m)/(2m)!) (sum_n Phi_4m(n) - Phi_4m(0) - int Phi_4m)|,
/// with the integral by quadrature. 0 <= m <= 25.
Real remark_alpha_check(int m);

}  // namespace zetalab

#endif  // ZETALAB_PSI_BASIS_HPP
