#ifndef ZETALAB_QPOLY_HPP
#define ZETALAB_QPOLY_HPP

#include "zetalab/numerics.hpp"

#include <vector>

namespace zetalab {

enum class PolyFamily { Q, q };

struct BigRationalPoly {
  /// Ascending degree.
  std::vector<BigRational> coeffs;
  PolyFamily family = PolyFamily::Q;
  int index_m = 0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Q_m(s) = sum_k (-1)^(m-k) (m!/(m-k)!) (2^2k/(2k)!) s(s+2)...(s+2(k-1)).
BigRationalPoly build_Q(int m);

/// (-1)^m 2F1(-m, s/2; 1/2; 2) as a terminating sum.
BigRationalPoly build_Q_hypergeometric(int m);

/// Q_0..Q_M by (m+1/2) Q_{m+1} = (s-1/2) Q_m + m Q_{m-1}.
std::vector<BigRationalPoly> build_Q_family(int M);

/// q_m(s) = 2F1(-m, s; 1; 2).
BigRationalPoly build_q(int m);

/// q_0..q_M by (m+1) q_{m+1} = (1-2s) q_m + m q_{m-1}.
std::vector<BigRationalPoly> build_q_family(int M);

BigRational evaluate(const BigRationalPoly& p, const BigRational& s);
Cx evaluate(const BigRationalPoly& p, const Cx& s);

/// Coefficients of P(a + y) in y.
std::vector<BigRational> taylor_shift(const std::vector<BigRational>& c, const BigRational& a);

/// P(1 - s).
BigRationalPoly reflect(const BigRationalPoly& p);

/// Exact check of Q_m(1-s) = (-1)^m Q_m(s); throws FunctionalEquationViolation
/// on mismatch, otherwise true.
bool functional_equation_check(int m);

/// Real polynomial p(t) with Q(1/2+it) = p(t) (even part) or i p(t) (odd part).
struct CriticalLinePoly {
  std::vector<BigRational> coeffs;
  bool times_i = false;
};

/// Exact substitution s = 1/2 + it. Throws FunctionalEquationViolation when
/// the result has both real and imaginary coefficients.
CriticalLinePoly critical_line_polynomial(const BigRationalPoly& p);

struct RootSet {
  std::vector<Real> roots_t;
  Real max_residual;
  /// max |Im t| over polished roots.
  Real max_imag;
  bool all_real_confirmed = false;
};

/// Roots of a real polynomial: companion-matrix eigenvalues at 2P digits,
/// Newton polish at P from the complex eigenvalues. Real iff |Im| < 10^(10-P).
/// Residual is |p(t)| / sum |c_j| |t|^j.
RootSet real_polynomial_roots(const std::vector<BigRational>& coeffs);

/// All complex roots of a rational polynomial, polished.
struct ComplexRootSet {
  std::vector<Cx> roots;
  Real max_residual;
};
ComplexRootSet complex_polynomial_roots(const std::vector<BigRational>& coeffs);

/// Roots t of t -> Q_m(1/2+it), m <= 60.
RootSet critical_line_roots(int m);

/// Roots of q_m(s) with max |Re s - 1/2|; q_m(s/2) has roots 2s (on Re s = 1).
struct SmallQRoots {
  ComplexRootSet roots;
  Real max_offset_from_half;
};
SmallQRoots small_q_roots(int m);

/// Positive roots of p_m and p_{m+2} strictly interlace (m even).
bool interlacing_check(int m);

/// (1/(4 pi sqrt pi)) int |Gamma(1/4+it/2)|^2 (Q_m1/m1!) conj(Q_m2/m2!)(1/2+it) dt
/// minus int (Phi_2m1/(2m1)!)(Phi_2m2/(2m2)!) dx, in absolute value.
Real parseval_orthogonality_check(int m1, int m2);

/// Q_0(s)..Q_M(s) numerically by the three-term recurrence.
std::vector<Cx> Q_values(int M, const Cx& s);
/// p_0(t)..p_M(t) with Q_m(1/2+it) = i^m p_m(t).
std::vector<Real> critical_line_values(int M, const Real& t);
/// q_0(s)..q_M(s) numerically.
std::vector<Cx> q_values(int M, const Cx& s);

}  // namespace zetalab

#endif  // ZETALAB_QPOLY_HPP
