#ifndef ZETALAB_REAL_HPP
#define ZETALAB_REAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace zetalab {

namespace mp = boost::multiprecision;

/// Arbitrary precision real. Every arithmetic result is rounded to the
/// working precision of the innermost active `Precision` scope.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using BigInt = mp::mpz_int;
using BigRational = mp::mpq_rational;

/// Nominal decimal precision used when no scope is active.
inline constexpr int kDefaultDigits = 60;
/// Extra decimal digits carried internally on top of the nominal precision.
inline constexpr int kGuardDigits = 20;

/// RAII scope selecting the nominal precision P (decimal digits). Arithmetic
/// inside the scope runs at P + guard digits; tolerances such as 10^(5-P)
/// are always expressed against the nominal P.
///
/// The mpfr default precision in Boost 1.74 is process-global, so scopes
/// must be nested strictly and not shared across threads.
class Precision {
 public:
  explicit Precision(int digits, int guard = kGuardDigits);
  ~Precision();
  Precision(const Precision&) = delete;
  Precision& operator=(const Precision&) = delete;

  static int digits();
  static int working_digits();
  /// Binary digits of the working precision.
  static long working_bits();

 private:
  int saved_digits_;
  int saved_working_;
};

/// 10^(e) at working precision.
Real pow10(int e);
/// Tolerance 10^(offset - P) for the current nominal precision.
Real tol(int offset);
/// Unit roundoff of the working precision.
Real epsilon();

Real pi();
Real ln2();
Real euler_e();

Real to_real(const BigRational& q);
Real to_real(const BigInt& z);
Real to_real(const std::string& decimal);

/// Scientific decimal string with `digits` significant digits (default: P).
std::string to_string(const Real& x, int digits = 0);
std::string to_string(const BigRational& q);

/// Absolute value of the base-10 logarithm magnitude, saturating at 0.
double log10_abs(const Real& x);

/// Exact n! and binomial coefficients.
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2). Cached.
const std::vector<BigRational>& bernoulli_numbers(std::size_t n);

/// Neumaier-compensated accumulator; summation order is the call order.
template <class T>
class CompensatedSum {
 public:
  CompensatedSum() : sum_(0), comp_(0) {}

  void add(const T& x) {
    T t = sum_ + x;
    if (magnitude(sum_) >= magnitude(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(const T& x) {
    add(x);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  static Real magnitude(const Real& x) { return abs(x); }
  template <class U>
  static Real magnitude(const U& x) {
    return abs(x.re) + abs(x.im);
  }

  T sum_;
  T comp_;
};

}  // namespace zetalab

#endif  // ZETALAB_REAL_HPP
