#include "zetalab/real.hpp"

#include <cmath>
#include <mutex>

namespace zetalab {

namespace {

int g_digits = kDefaultDigits;
int g_working = kDefaultDigits + kGuardDigits;

struct DefaultPrecisionInit {
  DefaultPrecisionInit() { Real::default_precision(g_working); }
};
const DefaultPrecisionInit g_init;

}  // namespace

Precision::Precision(int digits, int guard)
    : saved_digits_(g_digits), saved_working_(g_working) {
  g_digits = digits;
  g_working = digits + guard;
  Real::default_precision(g_working);
}

Precision::~Precision() {
  g_digits = saved_digits_;
  g_working = saved_working_;
  Real::default_precision(g_working);
}

int Precision::digits() { return g_digits; }
int Precision::working_digits() { return g_working; }
long Precision::working_bits() {
  return static_cast<long>(std::ceil(g_working * 3.321928094887362)) + 1;
}

Real pow10(int e) { return pow(Real(10), e); }

Real tol(int offset) { return pow10(offset - Precision::digits()); }

Real epsilon() {
  Real one(1);
  return ldexp(one, static_cast<int>(1 - Precision::working_bits()));
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real ln2() {
  Real r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

Real euler_e() { return exp(Real(1)); }

Real to_real(const BigRational& q) { return Real(q); }
Real to_real(const BigInt& z) { return Real(z); }
Real to_real(const std::string& decimal) { return Real(decimal); }

std::string to_string(const Real& x, int digits) {
  if (digits <= 0) digits = Precision::digits();
  return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const BigRational& q) { return q.str(); }

double log10_abs(const Real& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(log10(abs(x)));
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

const std::vector<BigRational>& bernoulli_numbers(std::size_t n) {
  static std::mutex mutex;
  static std::vector<BigRational> cache{BigRational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (cache.size() <= n) {
    const unsigned k = static_cast<unsigned>(cache.size());
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    BigRational acc(0);
    for (unsigned j = 0; j < k; ++j) {
      if (j > 1 && (j & 1U)) continue;
      acc += BigRational(binomial(k + 1, j)) * cache[j];
    }
    cache.push_back(-acc / BigRational(k + 1));
  }
  return cache;
}

}  // namespace zetalab
