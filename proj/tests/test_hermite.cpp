#include "doctest.h"
#include "test_support.hpp"
#include "zetalab/hermite.hpp"

#include <algorithm>
#include <cmath>

using namespace zetalab;
using zetalab::testing::R;
using zetalab::testing::rel_err;

TEST_CASE("hermite_poly: small cases and exact mode") {
  Precision p(40);
  CHECK(hermite_poly(0, Real(7)) == 1);
  CHECK(hermite_poly(2, Real(0)) == -2);
  CHECK(hermite_poly_exact(5, BigRational(1, 3)) ==
        BigRational(32, 243) - BigRational(160, 27) + BigRational(40, 1));
  // H_5(x) = 32x^5 - 160x^3 + 120x
  CHECK(abs(hermite_poly(5, Real(1) / 3) - to_real(hermite_poly_exact(5, BigRational(1, 3)))) <
        tol(0));
}

TEST_CASE("hermite_poly: generating function e^(-t^2+2xt)") {
  Precision p(60);
  const Real x = R("0.37");
  const Real t = R("0.01");
  Real series(0);
  Real tk(1);  // t^m / m!
  for (int m = 0; m < 60; ++m) {
    series += hermite_poly(m, x) * tk;
    tk *= t / (m + 1);
  }
  CHECK(abs(series - exp(-t * t + 2 * x * t)) < tol(5));
}

TEST_CASE("phi_norm: values and agreement with exact evaluation") {
  Precision p(60);
  CHECK(abs(phi_norm(0, Real(0)).phi_norm - 1) < tol(2));
  CHECK(abs(phi_norm(1, Real(0)).phi_norm + Real(1) / 2) < tol(2));
  // (-1)^m Phi_2m(0) = (2m)!/m!
  for (int m = 0; m <= 8; ++m) {
    const Real direct = hermite_function(2 * m, Real(0));
    const Real want = to_real(BigRational(factorial(2 * m), factorial(m))) * (m % 2 ? -1 : 1);
    CHECK(rel_err(direct, want) < tol(2));
  }
  // against exact rational H_2m at rational points, m <= 20
  for (int m : {2, 7, 13, 20}) {
    const BigRational xq(3, 4);
    const Real x = to_real(xq);
    const Real y = sqrt(2 * pi()) * x;
    // H_2m(y) with y irrational: use exact coefficients evaluated in Real.
    const Real want = hermite_poly(2 * m, y) * exp(-pi() * x * x) /
                      (pow(Real(4), m) * to_real(factorial(m)));
    CHECK(abs(phi_norm(m, x).phi_norm - want) < tol(5) * (abs(want) + 1));
  }
}

TEST_CASE("phi_norm: no overflow for large order and abscissa") {
  Precision p(60);
  const HermiteEval e = phi_norm(5000, Real(800));
  CHECK(isfinite(e.phi_norm));
  CHECK(e.log_scale_used);
  const HermiteEval e2 = phi_norm(10000, Real(40));
  CHECK(isfinite(e2.phi_norm));
}

TEST_CASE("B1: |Phi_2m(x)| <= K 2^m sqrt((2m)!) on random points") {
  Precision p(30);
  zetalab::testing::SplitMix rng(42);
  const Real log_k = log(R("1.086435"));
  for (int i = 0; i < 1000; ++i) {
    const int m = rng.integer(0, 200);
    const Real x = rng.uniform(-50.0, 50.0);
    const Real lhs = log_abs_hermite_function(2 * m, x);
    const Real rhs = log_k + m * ln2() + lgamma(Real(2 * m + 1)) / 2;
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("B2: |Phi_2m(x)| <= ((2m)!/m!) e^(2x sqrt(2 pi m)) e^(-pi x^2), x > 0") {
  Precision p(30);
  zetalab::testing::SplitMix rng(7);
  for (int i = 0; i < 300; ++i) {
    const int m = rng.integer(0, 200);
    const Real x = rng.uniform(0.001, 50.0);
    const Real lhs = log_abs_hermite_function(2 * m, x);
    const Real rhs = lgamma(Real(2 * m + 1)) - lgamma(Real(m + 1)) +
                     2 * x * sqrt(2 * pi() * m) - pi() * x * x;
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("lattice_sum_S: references") {
  Precision p(60);
  const LatticeSumResult s0 = lattice_sum_S(0);
  CHECK(abs(s0.value - R("1.086434811213308014575316121510223457070205707245218885920790315981857")) <
        tol(2));
  CHECK(s0.tail_bound >= 0);
  CHECK(s0.tail_bound < tol(5));
  CHECK(abs(lattice_sum_S(4).value -
            R("1.300806855139237393639712879675752022842175874406607031682000131955107")) < tol(2));
  CHECK(abs(lattice_sum_S(8).value -
            R("-0.2595796908249427043339761098613836527588662995594812099497015550394166")) <
        tol(2));
  CHECK(abs(lattice_sum_S(40).value -
            R("-0.2181593593659829955703371572640234201149453282945536177901020670944689")) <
        tol(2));
  CHECK_THROWS_AS(lattice_sum_S(3), DomainError);
}

TEST_CASE("lattice_sum_S: radius covers 2 sqrt(2m) and tail bound is small") {
  Precision p(60);
  for (int k : {0, 2, 10, 64, 400}) {
    const LatticeSumResult s = lattice_sum_S(k);
    CHECK(s.radius >= static_cast<int>(std::ceil(2 * std::sqrt(double(k)))));
    CHECK(s.tail_bound < tol(5) * std::max<Real>(Real(1), abs(s.value)));
  }
}

TEST_CASE("S_{4m+2} vanishes within tail bound") {
  Precision p(60);
  const auto table = lattice_sums_S(60);
  for (int j = 1; j <= 60; j += 2) {
    CHECK(abs(table[j].value) < tol(5));
  }
}

TEST_CASE("batch and single lattice sums agree") {
  Precision p(50);
  const auto table = lattice_sums_S(30);
  for (int j : {0, 2, 11, 30}) {
    CHECK(abs(table[j].value - lattice_sum_S(2 * j).value) < tol(5));
  }
}

TEST_CASE("lattice sums: tail and total growth") {
  Precision p(30);
  const Real bound_const = 2 / (1 - exp(-pi()));
  for (int m : {10, 37, 100, 250, 500}) {
    const Real tail = lattice_abs_sum(m, true);
    const Real fitted = tail * exp(2 * pi() * sqrt(Real(2 * m)));
    CHECK(fitted <= bound_const);
  }
  // Total absolute sum is O(m^(1/4)): ratio to m^(1/4) bounded above.
  for (int m : {4, 16, 64, 256, 1024, 2048}) {
    CHECK(lattice_abs_sum(m) / pow(Real(m), Real(1) / 4) < 1);
  }
}

TEST_CASE("phi_integral_identity_check") {
  Precision p(60);
  CHECK(abs(phi_integral_identity_check(0)) < tol(5));
  CHECK(abs(phi_integral_identity_check(1)) < tol(5));
  CHECK(abs(phi_integral_identity_check(5)) < Real(1e-40));
  CHECK(abs(phi_integral_identity_check(50)) < tol(5));
  CHECK_THROWS_AS(phi_integral_identity_check(51), DomainError);
}

TEST_CASE("orthogonality normalization: int Phi_2m^2 = 2^2m (2m)!/sqrt 2") {
  Precision p(50);
  for (int m = 0; m <= 10; ++m) {
    CHECK(abs(phi_square_integral_scaled(2 * m) - 1 / sqrt(Real(2))) < tol(5));
  }
}
